#include "gasket/critical.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <cstring>
#include <exception>
#include <sstream>
#include <thread>

#include "gasket/error.hpp"
#include "gasket/expansions.hpp"

namespace gasket {

namespace {

BinaryWord block(const char* s) { return BinaryWord::parse(s); }

CriticalBaseRecord make_record(std::uint64_t k, EPSeq delta, Provenance provenance) {
  if (delta.is_zero()) {
    return {k, std::move(delta), IntPolynomial{-1, 1}, AlgebraicReal::rational(1), provenance, true, std::nullopt};
  }
  IntPolynomial p = companion_poly(delta);
  AlgebraicReal v = delta_inverse(delta);
  return {k, std::move(delta), std::move(p), std::move(v), provenance, false, std::nullopt};
}

// Absolute difference of two algebraic reals, accurate to about 1e-30.
double gap(const AlgebraicReal& x, const AlgebraicReal& y) {
  const mpq_class w(1, mpz_class("1000000000000000000000000000000"));
  const AlgebraicReal a = x.refined(w), b = y.refined(w);
  const mpq_class d = (a.lo() + a.hi()) / 2 - (b.lo() + b.hi()) / 2;
  return std::abs(d.get_d());
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Thread-local incumbent search over one slice of the necklace stream.
class OracleWorker {
 public:
  OracleWorker(int k, std::uint64_t budget, std::atomic<std::uint64_t>& visited)
      : k_(static_cast<std::size_t>(k)), budget_(budget), visited_(visited) {}

  struct Stop {};

  void visit(std::span<const std::uint8_t> w) {
    const std::uint64_t seen = visited_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_ != 0 && seen > budget_) throw Stop{};
    ++local_visited_;
    std::uint8_t proj[3][64];
    for (std::size_t i = 0; i < k_; ++i) {
      proj[0][i] = w[i] == 1;
      proj[1][i] = w[i] == 2;
      proj[2][i] = w[i] == 0;  // reflection of d^1 + d^2
    }
    std::uint8_t hat[64];
    bool have_hat = false;
    for (int j = 0; j < 3; ++j) {
      const std::uint8_t* p = proj[j];
      for (std::size_t n = 0; n < k_; ++n) {
        // The maximum starts with 1 and so does the incumbent.
        if (p[n] == 0) continue;
        if (have_best_ && cyclic_cmp(p, n, best_) > 0) {
          ++abandoned_;
          return;
        }
        if (!have_hat || cyclic_cmp(p, n, hat) > 0) {
          for (std::size_t i = 0; i < k_; ++i) hat[i] = p[(n + i) % k_];
          have_hat = true;
        }
      }
    }
    const int c = have_best_ ? std::memcmp(hat, best_, k_) : -1;
    if (c < 0) {
      std::memcpy(best_, hat, k_);
      witness_.assign(w.begin(), w.end());
      have_best_ = true;
    } else if (c == 0 && std::lexicographical_compare(w.begin(), w.end(), witness_.begin(), witness_.end())) {
      witness_.assign(w.begin(), w.end());
    }
  }

  bool has_best() const { return have_best_; }
  std::vector<std::uint8_t> best() const { return {best_, best_ + k_}; }
  const std::vector<std::uint8_t>& witness() const { return witness_; }
  std::uint64_t visited() const { return local_visited_; }
  std::uint64_t abandoned() const { return abandoned_; }

 private:
  int cyclic_cmp(const std::uint8_t* p, std::size_t n, const std::uint8_t* ref) const {
    for (std::size_t i = 0; i < k_; ++i) {
      const std::uint8_t a = p[(n + i) % k_];
      if (a != ref[i]) return a < ref[i] ? -1 : 1;
    }
    return 0;
  }

  std::size_t k_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& visited_;
  std::uint8_t best_[64] = {};
  bool have_best_ = false;
  std::vector<std::uint8_t> witness_;
  std::uint64_t local_visited_ = 0;
  std::uint64_t abandoned_ = 0;
};

}  // namespace

const char* to_string(Provenance p) noexcept {
  return p == Provenance::Oracle ? "oracle" : "closed-form";
}

SharkovskiiKey sharkovskii_key(std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "Sharkovskii order is on positive integers");
  const unsigned e = static_cast<unsigned>(std::countr_zero(k));
  return {k >> e, e};
}

Ordering sharkovskii_compare(std::uint64_t k, std::uint64_t l) {
  const SharkovskiiKey a = sharkovskii_key(k), b = sharkovskii_key(l);
  if (k == l) return Ordering::Equal;
  const bool pa = a.odd_part == 1, pb = b.odd_part == 1;
  if (pa && pb) return a.two_exponent > b.two_exponent ? Ordering::Greater : Ordering::Less;
  if (pa != pb) return pa ? Ordering::Less : Ordering::Greater;
  if (a.two_exponent != b.two_exponent) return a.two_exponent < b.two_exponent ? Ordering::Greater : Ordering::Less;
  return a.odd_part < b.odd_part ? Ordering::Greater : Ordering::Less;
}

EPSeq beta_k_sequence(std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (k == 1) return EPSeq::periodic(BinaryWord{0});
  if (k == 2) return EPSeq::periodic(BinaryWord{1, 0});
  if (k % 3 == 0) {
    const SharkovskiiKey key = sharkovskii_key(k / 3);
    const int n = static_cast<int>(key.two_exponent);
    const std::uint64_t m = (key.odd_part - 1) / 2;
    if (m == 0) return EPSeq::periodic(t_word(n + 1));
    const BinaryWord t = t_word(n + 2);
    return EPSeq::periodic(plus(t) + theta_block(plus(t_word(n + 1))) + t.repeat(m - 1));
  }
  const std::uint64_t l = k / 3;
  if (k % 3 == 1) {
    const std::uint64_t a = (l - 1) / 2, b = (l - 1) - a;
    return EPSeq::periodic(block("101") + block("001").repeat(a) + block("010").repeat(b) + block("0"));
  }
  return EPSeq::periodic(block("101") + block("001").repeat(l - 1) + block("00"));
}

CriticalBaseRecord beta_k_closed_form(std::uint64_t k) {
  return make_record(k, beta_k_sequence(k), Provenance::ClosedForm);
}

OracleOptions OracleOptions::from_config(const Config& c) {
  OracleOptions o;
  o.jobs = std::max(1u, c.jobs);
  o.quotient_symmetry = c.quotient_symmetry;
  o.max_k = c.max_oracle_k;
  return o;
}

CriticalBaseRecord beta_k_oracle(int k, const OracleOptions& opts, OracleStats* stats) {
  if (k < 2 || k > opts.max_k || k > 64) {
    throw Error(ErrorCode::CapExceeded, "oracle k must lie in 2.." + std::to_string(std::min(opts.max_k, 64)));
  }
  const unsigned jobs = std::max(1u, opts.jobs);
  std::atomic<std::uint64_t> visited{0};
  std::vector<OracleWorker> workers;
  workers.reserve(jobs);
  for (unsigned i = 0; i < jobs; ++i) workers.emplace_back(k, opts.budget, visited);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<char> stopped(jobs, 0);

  auto run = [&](unsigned i) {
    try {
      for_each_primitive_necklace(
          k, opts.quotient_symmetry, [&](std::span<const std::uint8_t> w) { workers[i].visit(w); },
          {i, jobs});
    } catch (const OracleWorker::Stop&) {
      stopped[i] = 1;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < jobs; ++i) threads.emplace_back(run, i);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  if (std::any_of(stopped.begin(), stopped.end(), [](char c) { return c != 0; })) {
    throw Error(ErrorCode::BudgetExceeded, "oracle budget of " + std::to_string(opts.budget) + " candidates exhausted");
  }

  // Associative reduction: least hat, ties broken by the least witness.
  const OracleWorker* winner = nullptr;
  for (const auto& w : workers) {
    if (!w.has_best()) continue;
    if (!winner) {
      winner = &w;
      continue;
    }
    const auto a = w.best(), b = winner->best();
    if (a < b || (a == b && w.witness() < winner->witness())) winner = &w;
  }
  if (!winner) throw Error(ErrorCode::InvalidArgument, "no aperiodic word of length " + std::to_string(k));
  if (stats) {
    stats->visited = 0;
    stats->abandoned = 0;
    for (const auto& w : workers) {
      stats->visited += w.visited();
      stats->abandoned += w.abandoned();
    }
  }
  CriticalBaseRecord r =
      make_record(static_cast<std::uint64_t>(k), EPSeq::periodic(BinaryWord(winner->best())), Provenance::Oracle);
  r.witness = OmegaWord(winner->witness());
  return r;
}

Report verify_sharkovskii_theorem(int max_index) {
  if (max_index < 1 || max_index > Config{}.max_sharkovskii_index) {
    throw Error(ErrorCode::CapExceeded, "Sharkovskii index must lie in 1.." + std::to_string(Config{}.max_sharkovskii_index));
  }
  Report r{"sharkovskii: beta_3k > beta_3l iff k precedes l", {}};
  std::vector<EPSeq> d;
  for (int k = 1; k <= max_index; ++k) d.push_back(beta_k_sequence(3 * static_cast<std::uint64_t>(k)));
  for (int k = 1; k <= max_index; ++k) {
    for (int l = k + 1; l <= max_index; ++l) {
      const Ordering want = sharkovskii_compare(k, l);
      const Ordering got = lex_compare(d[k - 1], d[l - 1]);
      r.add("(" + std::to_string(k) + "," + std::to_string(l) + ")", want == got,
            std::string("order ") + to_string(want) + ", delta " + to_string(got));
    }
  }
  return r;
}

Report verify_identity_6m4(int max_m) {
  if (max_m < 0) throw Error(ErrorCode::InvalidArgument, "max_m must be >= 0");
  Report r{"identity: beta_{6m+4} = beta_{3m+2}", {}};
  for (int m = 0; m <= max_m; ++m) {
    const EPSeq a = beta_k_sequence(6 * static_cast<std::uint64_t>(m) + 4);
    const EPSeq b = beta_k_sequence(3 * static_cast<std::uint64_t>(m) + 2);
    r.add("m=" + std::to_string(m), a == b, a.str() + (a == b ? " == " : " != ") + b.str());
  }
  return r;
}

Report asymptotics_report(int l_max, int n_max, int m_max, double gap_a, double gap_hat) {
  if (l_max < 1 || n_max < 0 || m_max < 1) throw Error(ErrorCode::InvalidArgument, "asymptotics caps out of range");
  if (n_max + 2 > Config{}.max_beta_c_level) throw Error(ErrorCode::CapExceeded, "n_max too large for the beta_c bracket");
  Report r{"asymptotics", {}};
  const EPSeq a_seq = beta_a_sequence();
  const AlgebraicReal a_val = beta_a();

  for (int residue : {1, 2}) {
    const std::string fam = "beta_{3l+" + std::to_string(residue) + "}";
    bool dec = true, above = true;
    for (int l = 1; l <= l_max; ++l) {
      const EPSeq cur = beta_k_sequence(3 * l + residue);
      if (lex_compare(cur, a_seq) != Ordering::Greater) above = false;
      if (l < l_max && lex_compare(cur, beta_k_sequence(3 * (l + 1) + residue)) != Ordering::Greater) dec = false;
    }
    r.add(fam + " strictly decreasing, l=1.." + std::to_string(l_max), dec);
    const double g = gap(beta_k_closed_form(3 * l_max + residue).value, a_val);
    r.add(fam + " > beta_a", above, "gap at l=" + std::to_string(l_max) + " " + sci(g));
    // The tolerance applies to the faster family 3l+2 only.
    if (residue == 2) r.add("|" + fam + " - beta_a| at l=" + std::to_string(l_max) + " below " + sci(gap_a), g < gap_a, sci(g));
  }

  for (int n = 0; n <= std::min(n_max, 2); ++n) {
    const EPSeq floor_seq = hat_beta_sequence(n);
    bool dec = true, above = true;
    for (int m = 1; m <= m_max; ++m) {
      const std::uint64_t k = 3 * (2 * static_cast<std::uint64_t>(m) + 1) << n;
      const EPSeq cur = beta_k_sequence(k);
      if (lex_compare(cur, floor_seq) != Ordering::Greater) above = false;
      if (m < m_max && lex_compare(cur, beta_k_sequence((3 * (2 * static_cast<std::uint64_t>(m) + 3)) << n)) !=
                           Ordering::Greater) {
        dec = false;
      }
    }
    const std::string fam = "beta_{3(2m+1)2^" + std::to_string(n) + "}";
    r.add(fam + " strictly decreasing, m=1.." + std::to_string(m_max), dec);
    r.add(fam + " > hat-beta_" + std::to_string(n), above);
  }
  const double g0 = gap(beta_k_closed_form(3 * (2 * static_cast<std::uint64_t>(m_max) + 1)).value, hat_beta(0));
  r.add("|beta_{3(2m+1)} - hat-beta_0| at m=" + std::to_string(m_max) + " below " + sci(gap_hat), g0 < gap_hat,
        sci(g0));

  bool inc = true, below_lambda = true;
  const BinaryWord lam = lambda_prefix(3u << (n_max + 2));
  for (int n = 0; n <= n_max; ++n) {
    const EPSeq cur = beta_k_sequence(3ull << n);
    if (compare_with_prefix(cur, lam) != Ordering::Less) below_lambda = false;
    if (n < n_max && lex_compare(cur, beta_k_sequence(3ull << (n + 1))) != Ordering::Less) inc = false;
  }
  r.add("beta_{3*2^n} strictly increasing, n=0.." + std::to_string(n_max), inc);
  r.add("delta(beta_{3*2^n}) < lambda", below_lambda);
  const RationalInterval bracket = beta_c_bracket(n_max + 2, mpq_class(1, mpz_class(1) << 80));
  const AlgebraicReal top = beta_k_closed_form(3ull << n_max).value.refined(mpq_class(1, mpz_class(1) << 80));
  r.add("beta_{3*2^" + std::to_string(n_max) + "} below the beta_c bracket at level " + std::to_string(bracket.level),
        top.hi() < bracket.lo, "bracket lower end " + std::to_string(bracket.lo.get_d()));
  return r;
}

Report verify_oracle_against_closed_form(int k_max, const OracleOptions& opts) {
  Report r{"oracle vs closed form", {}};
  for (int k = 2; k <= k_max; ++k) {
    const CriticalBaseRecord o = beta_k_oracle(k, opts);
    const EPSeq c = beta_k_sequence(static_cast<std::uint64_t>(k));
    r.add("k=" + std::to_string(k), o.delta == c, o.delta.str() + (o.delta == c ? " == " : " != ") + c.str());
  }
  return r;
}

}  // namespace gasket
