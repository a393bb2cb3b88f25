#include <doctest.h>

#include <random>
#include <vector>

#include "gasket/critical.hpp"
#include "gasket/error.hpp"
#include "gasket/expansions.hpp"
#include "gasket/membership.hpp"

using namespace gasket;

namespace {

EPSeq seq(const char* s) { return EPSeq::parse(s); }
OmegaWord ow(const char* s) { return OmegaWord::parse(s); }

// Maximum over every shift of every projection, straight from the definition.
EPSeq hat_by_definition(const OmegaWord& d) {
  const Projections p = project(d);
  const BinaryWord* words[] = {&p.first, &p.second, &p.complement_sum};
  std::optional<EPSeq> best;
  for (const BinaryWord* w : words) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      const EPSeq s = EPSeq::periodic(w->rotated(j));
      if (!best || lex_compare(s, *best) == Ordering::Greater) best = s;
    }
  }
  return *best;
}

OmegaWord random_primitive(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<int> digit(0, 2);
  for (;;) {
    std::vector<std::uint8_t> v(k);
    for (auto& x : v) x = static_cast<std::uint8_t>(digit(rng));
    OmegaWord w(v);
    if (smallest_period(w) == k) return w;
  }
}

// All six alphabet permutations of d.
std::vector<OmegaWord> orbit(const OmegaWord& d) {
  std::vector<OmegaWord> out;
  OmegaWord t = d;
  for (int i = 0; i < 3; ++i) {
    out.push_back(t);
    out.push_back(phi_perm(t));
    t = theta_perm(t);
  }
  return out;
}

const std::vector<EPSeq>& sample_deltas() {
  static const std::vector<EPSeq> v = {seq("(100)^∞"),     seq("(101000)^∞"), beta_a_sequence(),
                                       seq("(1010100)^∞"), seq("(10)^∞"),     seq("(1)^∞")};
  return v;
}

}  // namespace

TEST_CASE("hat sequence of small words") {
  CHECK(hat_sequence(ow("01"), 2) == seq("(10)^∞"));
  CHECK(hat_sequence(ow("102"), 3) == seq("(100)^∞"));
  CHECK(hat_sequence(theta_perm(ow("0112")), 4) == hat_sequence(ow("0112"), 4));
  CHECK_THROWS_AS(hat_sequence(ow("0101"), 4), Error);
  CHECK_THROWS_AS(hat_sequence(ow("012"), 2), Error);
}

TEST_CASE("hat sequence agrees with the definition and is symmetric") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 2 + trial % 9;
    const OmegaWord d = random_primitive(rng, k);
    const EPSeq h = hat_sequence(d, k);
    CHECK(h == hat_by_definition(d));
    for (std::size_t j = 1; j < k; ++j) CHECK(hat_sequence(d.rotated(j), k) == h);
    for (const OmegaWord& g : orbit(d)) CHECK(hat_sequence(g, k) == h);
  }
}

TEST_CASE("hat witness attains the maximum") {
  const OmegaWord d = ow("1002");
  const HatSequence h = hat_sequence_with_witness(d, 4);
  const Projections p = project(d);
  const BinaryWord& w = h.argmax.projection == Projection::First    ? p.first
                        : h.argmax.projection == Projection::Second ? p.second
                                                                    : p.complement_sum;
  CHECK(EPSeq::periodic(w.rotated(h.argmax.shift)) == h.value);
}

TEST_CASE("periodic membership examples") {
  const AlgebraicReal golden = isolate_root_in_unit_two(IntPolynomial::parse("x^2 - x - 1"));
  const MembershipVerdict v = in_U_beta_periodic(ow("01"), 2, golden);
  CHECK_FALSE(v.member);
  REQUIRE(v.violating_shift.has_value());
  // (10)^inf sits above (1010100)^inf.
  CHECK_FALSE(in_U_beta_periodic(ow("01"), 2, delta_inverse(seq("(1010100)^∞"))).member);
  CHECK(in_U_beta_periodic(ow("01"), 2, AlgebraicReal::rational(2)).member);
  const OmegaWord u2 = u_word(2);
  CHECK(in_U_beta_periodic(u2, u2.size(), rho(3)).member);
  CHECK_FALSE(in_U_beta_periodic(u2, u2.size(), rho(2)).member);
  CHECK_THROWS_AS(in_U_beta_periodic(ow("1"), 1, golden), Error);
}

TEST_CASE("general membership examples") {
  const AlgebraicReal golden = isolate_root_in_unit_two(IntPolynomial::parse("x^2 - x - 1"));
  const AlgebraicReal bases[] = {AlgebraicReal::rational(mpq_class(101, 100)), rho(1), golden,
                                 AlgebraicReal::rational(2)};
  for (const auto& b : bases) {
    CHECK(in_U_beta_general(OmegaEPSeq::parse("(0)^∞"), b).member);
    CHECK(in_U_beta_general(OmegaEPSeq::parse("(1)^∞"), b).member);
    CHECK(in_U_beta_general(OmegaEPSeq::parse("(2)^∞"), b).member);
  }
  const MembershipVerdict v = in_U_beta_general(OmegaEPSeq::parse("1(0)^∞"), golden);
  CHECK_FALSE(v.member);
  REQUIRE(v.violating_shift.has_value());
  CHECK(v.violating_shift->projection == Projection::ComplementSum);
  CHECK(v.violating_shift->shift == 1);
}

TEST_CASE("general and periodic forms agree on periodic codings") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 2 + trial % 7;
    const OmegaWord d = random_primitive(rng, k);
    for (const EPSeq& delta : sample_deltas()) {
      const bool periodic = in_U_beta_periodic(d, k, delta).member;
      const bool general = in_U_beta_general(OmegaEPSeq::periodic(d), delta).member;
      CHECK(periodic == general);
    }
  }
}

TEST_CASE("membership is monotone in beta") {
  std::mt19937_64 rng(7);
  const auto& deltas = sample_deltas();
  for (std::size_t i = 0; i + 1 < deltas.size(); ++i) REQUIRE(lex_compare(deltas[i], deltas[i + 1]) == Ordering::Less);
  std::uniform_int_distribution<int> digit(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint8_t> pre(trial % 3), per(1 + trial % 5);
    for (auto& x : pre) x = static_cast<std::uint8_t>(digit(rng));
    for (auto& x : per) x = static_cast<std::uint8_t>(digit(rng));
    const OmegaEPSeq d{OmegaWord(pre), OmegaWord(per)};
    bool seen = false;
    for (const EPSeq& delta : deltas) {
      const bool m = in_U_beta_general(d, delta).member;
      CHECK((!seen || m));
      seen = seen || m;
    }
  }
}

TEST_CASE("critical bases are excluded and the interval is half-open") {
  for (int k = 2; k <= 12; ++k) {
    CAPTURE(k);
    const CriticalBaseRecord r = beta_k_oracle(k);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(in_U_beta_periodic(*r.witness, k, r.value).member);
    const auto above = next_parry_valid_above(r.delta, 2 * static_cast<std::size_t>(k));
    REQUIRE(above.has_value());
    CHECK(in_U_beta_periodic(*r.witness, k, delta_inverse(*above)).member);
  }
}
