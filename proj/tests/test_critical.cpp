#include <doctest.h>

#include <vector>

#include "gasket/critical.hpp"
#include "gasket/error.hpp"
#include "gasket/expansions.hpp"
#include "gasket/membership.hpp"

using namespace gasket;

namespace {

EPSeq seq(const char* s) { return EPSeq::parse(s); }

// Position in the Sharkovskii table, larger means earlier: odd multiples by
// (exponent asc, odd part asc), then powers of two by exponent desc.
bool precedes(std::uint64_t k, std::uint64_t l) {
  auto split = [](std::uint64_t n) {
    unsigned e = 0;
    while (n % 2 == 0) n /= 2, ++e;
    return std::pair<std::uint64_t, unsigned>{n, e};
  };
  const auto [ok, ek] = split(k);
  const auto [ol, el] = split(l);
  if (ok == 1 && ol == 1) return ek > el;
  if (ok == 1) return false;
  if (ol == 1) return true;
  if (ek != el) return ek < el;
  return ok < ol;
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(beta_k_sequence(1) == seq("(0)^∞"));
  CHECK(beta_k_closed_form(1).sentinel);
  CHECK(beta_k_sequence(2) == seq("(10)^∞"));
  CHECK(beta_k_sequence(3) == seq("(100)^∞"));
  CHECK(beta_k_sequence(7) == seq("(1010100)^∞"));
  CHECK(beta_k_sequence(8) == seq("(10100100)^∞"));
  CHECK(beta_k_sequence(9) == seq("(101001000)^∞"));
  CHECK(beta_k_sequence(12) == EPSeq::periodic(t_word(3)));
  CHECK(beta_k_sequence(15) == seq("(101001000101000)^∞"));
  CHECK_THROWS_AS(beta_k_sequence(0), Error);
}

TEST_CASE("closed-form records are consistent") {
  for (std::uint64_t k = 2; k <= 60; ++k) {
    CAPTURE(k);
    const CriticalBaseRecord r = beta_k_closed_form(k);
    CHECK(r.provenance == Provenance::ClosedForm);
    CHECK(r.delta.purely_periodic());
    CHECK(k % r.delta.period().size() == 0);
    CHECK(is_parry_valid(r.delta));
    CHECK(compare(r.value, delta_inverse(r.delta)) == Ordering::Equal);
    CHECK(r.poly.eval(r.value.lo()) * r.poly.eval(r.value.hi()) <= 0);
  }
}

TEST_CASE("oracle matches closed forms") {
  for (int k = 2; k <= 12; ++k) {
    CAPTURE(k);
    const CriticalBaseRecord o = beta_k_oracle(k);
    CHECK(o.provenance == Provenance::Oracle);
    CHECK(o.delta == beta_k_sequence(k));
    REQUIRE(o.witness.has_value());
    CHECK(smallest_period(*o.witness) == static_cast<std::size_t>(k));
    CHECK(hat_sequence(*o.witness, k) == o.delta);
  }
  CHECK(beta_k_oracle(5).delta == seq("(10100)^∞"));
  CHECK(beta_k_oracle(6).delta == seq("(101000)^∞"));
}

TEST_CASE("oracle does not depend on job count or symmetry quotient") {
  for (int k : {7, 9, 10}) {
    OracleOptions one, many, flat;
    many.jobs = 4;
    flat.quotient_symmetry = false;
    const CriticalBaseRecord a = beta_k_oracle(k, one), b = beta_k_oracle(k, many), c = beta_k_oracle(k, flat);
    CHECK(a.delta == b.delta);
    CHECK(a.witness == b.witness);
    CHECK(a.delta == c.delta);
  }
}

TEST_CASE("oracle caps and budget") {
  CHECK_THROWS_AS(beta_k_oracle(1), Error);
  OracleOptions o;
  o.max_k = 8;
  CHECK_THROWS_AS(beta_k_oracle(9, o), Error);
  o.budget = 5;
  try {
    beta_k_oracle(8, o);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("Sharkovskii order") {
  CHECK(sharkovskii_compare(3, 5) == Ordering::Greater);
  CHECK(sharkovskii_compare(8, 4) == Ordering::Greater);
  CHECK(sharkovskii_compare(6, 9) == Ordering::Less);
  CHECK(sharkovskii_compare(1, 2) == Ordering::Less);
  CHECK(sharkovskii_compare(7, 7) == Ordering::Equal);
  for (std::uint64_t k = 1; k <= 40; ++k) {
    for (std::uint64_t l = 1; l <= 40; ++l) {
      if (k == l) continue;
      CHECK((sharkovskii_compare(k, l) == Ordering::Greater) == precedes(k, l));
    }
  }
}

TEST_CASE("Sharkovskii theorem and the 6m+4 identity") {
  const Report s = verify_sharkovskii_theorem(10);
  CHECK(s.ok());
  CHECK(s.lines.size() == 45);
  CHECK(lex_compare(beta_k_sequence(9), beta_k_sequence(12)) == Ordering::Greater);
  CHECK(lex_compare(beta_k_sequence(6), beta_k_sequence(3)) == Ordering::Greater);
  CHECK(verify_identity_6m4(10).ok());
  CHECK(beta_k_sequence(10) == beta_k_sequence(5));
  CHECK(beta_k_sequence(22) == beta_k_sequence(11));
}

TEST_CASE("global and class bounds") {
  const AlgebraicReal b2 = beta_k_closed_form(2).value, b3 = beta_k_closed_form(3).value;
  for (std::uint64_t k = 2; k <= 50; ++k) {
    const AlgebraicReal v = beta_k_closed_form(k).value;
    CHECK(compare(b3, v) != Ordering::Greater);
    CHECK(compare(v, b2) != Ordering::Greater);
  }
  for (std::uint64_t l = 1; l <= 12; ++l) {
    for (std::uint64_t m = 1; m <= 12; ++m) {
      CHECK(lex_compare(beta_k_sequence(3 * l), beta_k_sequence(3 * m + 1)) == Ordering::Less);
      CHECK(lex_compare(beta_k_sequence(3 * l), beta_k_sequence(3 * m + 2)) == Ordering::Less);
    }
  }
}

TEST_CASE("powers of two times three give rho") {
  for (int n = 0; n <= 6; ++n) {
    const std::uint64_t k = 3ULL << n;
    CHECK(beta_k_sequence(k) == EPSeq::periodic(t_word(n + 1)));
    CHECK(compare(beta_k_closed_form(k).value, rho(n + 1)) == Ordering::Equal);
  }
}

TEST_CASE("odd multiples lie above beta_c") {
  for (int n = 0; n <= 3; ++n) {
    for (std::uint64_t m = 1; m <= 6; ++m) {
      const EPSeq d = beta_k_sequence((3 * (2 * m + 1)) << n);
      const BinaryWord lam = lambda_prefix(d.period().size() * 4);
      CHECK(compare_with_prefix(d, lam) == Ordering::Greater);
    }
  }
}

TEST_CASE("asymptotics") {
  const Report r = asymptotics_report(12, 5, 8);
  CHECK(r.ok());
  // A tolerance this tight cannot hold at l = 12.
  CHECK_FALSE(asymptotics_report(12, 2, 8, 1e-12).ok());
  CHECK_THROWS_AS(asymptotics_report(12, 7, 8), Error);
}
