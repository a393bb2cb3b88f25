#include "gasket/expansions.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "gasket/error.hpp"

namespace gasket {

namespace {

void require_unit_two(const AlgebraicReal& beta) {
  if (compare(beta, AlgebraicReal::rational(1)) != Ordering::Greater ||
      compare(beta, AlgebraicReal::rational(2)) == Ordering::Greater) {
    throw Error(ErrorCode::InvalidArgument, "base must lie in (1,2]");
  }
}

// Remainders r_i = beta r_{i-1} - delta_i as polynomials in beta reduced
// modulo beta's polynomial; r_0 = 1.
class RemainderOrbit {
 public:
  explicit RemainderOrbit(const AlgebraicReal& beta)
      : beta_(beta), modulus_(beta.poly()), r_(RatPolynomial::constant(1)) {}

  std::uint8_t step() {
    // Keep the enclosure of beta ahead of the growth of the remainders.
    if (steps_ >= refined_for_) {
      refined_for_ = 2 * (steps_ + 32);
      beta_ = beta_.refined(mpq_class(1, mpz_class(1) << (2 * refined_for_)));
    }
    ++steps_;
    RatPolynomial t = r_.times_x().mod(modulus_);
    const RatPolynomial one = RatPolynomial::constant(1);
    if (sign_at(t - one, beta_) == Sign::Positive) {
      r_ = t - one;
      return 1;
    }
    r_ = std::move(t);
    return 0;
  }

  const RatPolynomial& remainder() const { return r_; }
  const AlgebraicReal& beta() const { return beta_; }

 private:
  AlgebraicReal beta_;
  IntPolynomial modulus_;
  RatPolynomial r_;
  std::size_t steps_ = 0;
  std::size_t refined_for_ = 0;
};

double approximate(const RatPolynomial& r, const mpf_class& beta, std::size_t bits) {
  mpf_class acc(0, bits);
  for (std::size_t i = r.coefficients().size(); i-- > 0;) {
    acc *= beta;
    acc += mpf_class(r.coefficients()[i], bits);
  }
  return acc.get_d();
}

}  // namespace

BinaryWord quasi_greedy(const AlgebraicReal& beta, std::size_t n) {
  require_unit_two(beta);
  RemainderOrbit orbit(beta);
  std::vector<std::uint8_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = orbit.step();
  return BinaryWord(std::move(d));
}

QuasiGreedyExpansion delta_expansion(const AlgebraicReal& beta, std::size_t horizon) {
  require_unit_two(beta);
  RemainderOrbit orbit(beta);
  // Remainder coefficients can grow like 2^i while the value stays in
  // (0, 1], so the working precision grows with the step index.
  const std::size_t base_bits = 128;
  AlgebraicReal fine = beta;
  std::size_t fine_bits = 0;
  mpq_class mid;

  std::vector<RatPolynomial> seen{orbit.remainder()};
  std::multimap<double, std::size_t> index{{1.0, 0}};
  std::vector<std::uint8_t> digits;
  for (std::size_t i = 1; i <= horizon; ++i) {
    digits.push_back(orbit.step());
    const RatPolynomial& r = orbit.remainder();
    const std::size_t bits = base_bits + i;
    if (fine_bits < bits + 64) {
      fine_bits = 2 * (bits + 64);
      fine = fine.refined(mpq_class(1, mpz_class(1) << fine_bits));
      mid = (fine.lo() + fine.hi()) / 2;
    }
    const double v = approximate(r, mpf_class(mid, fine_bits), bits);
    const double tol = 1e-9;
    for (auto it = index.lower_bound(v - tol); it != index.end() && it->first <= v + tol; ++it) {
      const RatPolynomial& prev = seen[it->second];
      if (prev == r || sign_at(prev - r, beta) == Sign::Zero) {
        // digits after position j repeat with period i - j
        const std::size_t j = it->second;
        std::vector<std::uint8_t> pre(digits.begin(), digits.begin() + j);
        std::vector<std::uint8_t> per(digits.begin() + j, digits.end());
        return {BinaryWord(digits), EPSeq(BinaryWord(std::move(pre)), BinaryWord(std::move(per)))};
      }
    }
    index.emplace(v, seen.size());
    seen.push_back(r);
  }
  return {BinaryWord(std::move(digits)), std::nullopt};
}

bool is_parry_valid(const EPSeq& s) {
  if (s.ends_in_zeros()) return false;
  const std::size_t span = s.preperiod().size() + s.period().size();
  for (std::size_t n = 1; n < span; ++n) {
    if (lex_compare(s.shifted(n), s) == Ordering::Greater) return false;
  }
  return true;
}

AlgebraicReal delta_inverse(const EPSeq& s) {
  if (!is_parry_valid(s)) throw Error(ErrorCode::NotParryValid, s.str() + " is not Parry-valid");
  const IntPolynomial p = companion_poly(s);
  // On (1, 2] the sign of p is that of 1 - sum s_i x^-i, which increases
  // strictly from -inf, so there is exactly one simple root there.
  if (p.sign_at(2) == 0) return isolate_root_in_unit_two(p);
  mpq_class lo(3, 2);
  while (p.sign_at(lo) >= 0) lo = (lo + 1) / 2;
  return AlgebraicReal::trusted(p, lo, 2);
}

AlgebraicReal rho(int n) { return delta_inverse(EPSeq::periodic(t_word(n))); }

EPSeq hat_beta_sequence(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "hat-beta_n needs n >= 0");
  const BinaryWord t = t_word(n + 2);
  return EPSeq(plus(t), theta_block(t));
}

AlgebraicReal hat_beta(int n) { return delta_inverse(hat_beta_sequence(n)); }

EPSeq beta_a_sequence() { return EPSeq(BinaryWord{1, 0, 1}, BinaryWord{0, 0, 1}); }

AlgebraicReal beta_a() { return delta_inverse(beta_a_sequence()); }

AlgebraicReal beta_star() { return isolate_root_in_unit_two(IntPolynomial{-2, 2, -2, 1}); }

RationalInterval beta_c_bracket(int level, const mpq_class& precision) {
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "bracket level must be >= 1");
  if (precision <= 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  return {rho(level).refined(precision).lo(), hat_beta(level).refined(precision).hi(), level};
}

RationalInterval approx_beta_c(const mpq_class& width, int max_level) {
  if (width <= 0) throw Error(ErrorCode::InvalidArgument, "width must be positive");
  for (int n = 1; n <= max_level; ++n) {
    // Enclosures of the two bounds need only be a small fraction of the gap.
    RationalInterval b = beta_c_bracket(n, width / 8);
    if (b.width() <= width) return b;
  }
  throw Error(ErrorCode::WidthNotReached, "beta_c bracket did not reach the requested width");
}

std::optional<EPSeq> next_parry_valid_above(const EPSeq& s, std::size_t max_period) {
  if (max_period == 0 || max_period > 24) throw Error(ErrorCode::CapExceeded, "period cap must be in 1..24");
  std::optional<EPSeq> best;
  for (std::size_t q = 1; q <= max_period; ++q) {
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << q); ++bits) {
      std::vector<std::uint8_t> d(q);
      for (std::size_t i = 0; i < q; ++i) d[i] = (bits >> (q - 1 - i)) & 1;
      if (d[0] == 0) continue;  // a Parry-valid sequence starts with 1
      EPSeq c = EPSeq::periodic(BinaryWord(std::move(d)));
      if (c.period().size() != q) continue;
      if (lex_compare(c, s) != Ordering::Greater) continue;
      if (best && lex_compare(c, *best) != Ordering::Less) continue;
      if (is_parry_valid(c)) best = std::move(c);
    }
  }
  return best;
}

}  // namespace gasket
