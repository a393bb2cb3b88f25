#include <doctest.h>

#include <random>

#include "gasket/error.hpp"
#include "gasket/expansions.hpp"

using namespace gasket;

namespace {

EPSeq seq(const char* s) { return EPSeq::parse(s); }

}  // namespace

TEST_CASE("quasi-greedy digits") {
  const auto golden = isolate_root_in_unit_two(IntPolynomial::parse("x^2 - x - 1"));
  CHECK(quasi_greedy(golden, 6).str() == "101010");
  CHECK(quasi_greedy(isolate_root_in_unit_two(IntPolynomial::parse("x^3 - x^2 - 1")), 6).str() == "100100");
  CHECK(quasi_greedy(AlgebraicReal::rational(2), 5).str() == "11111");
  CHECK_THROWS_AS(quasi_greedy(AlgebraicReal::rational(mpq_class(5, 2)), 3), Error);
}

TEST_CASE("delta expansion detects the period") {
  const auto golden = isolate_root_in_unit_two(IntPolynomial::parse("x^2 - x - 1"));
  const auto e = delta_expansion(golden, 100);
  REQUIRE(e.digits.has_value());
  CHECK(*e.digits == seq("(10)^∞"));
  const auto ex = delta_expansion(AlgebraicReal::rational(mpq_class(3, 2)), 64);
  // 3/2 is not a Parry number for 1; the expansion need not close up quickly.
  CHECK(ex.prefix.size() > 0);
  const auto a = delta_expansion(beta_a(), 200);
  REQUIRE(a.digits.has_value());
  CHECK(*a.digits == beta_a_sequence());
}

TEST_CASE("Parry validity") {
  CHECK(is_parry_valid(seq("(10)^∞")));
  CHECK_FALSE(is_parry_valid(seq("(01)^∞")));
  CHECK(is_parry_valid(seq("(101001000)^∞")));
  CHECK_FALSE(is_parry_valid(seq("1(0)^∞")));
  CHECK(is_parry_valid(seq("(1)^∞")));
  CHECK(is_parry_valid(beta_a_sequence()));
}

TEST_CASE("delta inverse and named bases") {
  CHECK(to_decimal(delta_inverse(seq("(10)^∞")), 5) == "1.61803");
  CHECK(to_decimal(delta_inverse(seq("(101000)^∞")), 4) == "1.5385");
  CHECK(to_decimal(beta_a(), 5) == "1.55898");
  CHECK(to_decimal(rho(1), 5) == "1.46557");
  CHECK(to_decimal(rho(3), 5) == "1.55263");
  CHECK(to_decimal(beta_star(), 5) == "1.54369");
  CHECK(to_decimal(delta_inverse(seq("(1)^∞")), 2) == "2.00");
  try {
    delta_inverse(seq("(01)^∞"));
    FAIL("expected NotParryValid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotParryValid);
  }
  for (int n = 1; n <= 6; ++n) CHECK(compare(rho(n), rho(n + 1)) == Ordering::Less);
}

TEST_CASE("hat-beta") {
  CHECK(hat_beta_sequence(0) == seq("101001(000101)^∞"));
  CHECK(hat_beta_sequence(0).prefix(24).str() == "101001000101000101000101");
  for (int n = 0; n <= 6; ++n) {
    CHECK(is_parry_valid(hat_beta_sequence(n)));
    CHECK(lex_compare(hat_beta_sequence(n), hat_beta_sequence(n + 1)) == Ordering::Greater);
    CHECK(compare_with_prefix(hat_beta_sequence(n), lambda_prefix(3 << (n + 3))) == Ordering::Greater);
  }
  for (int n = 0; n <= 3; ++n) CHECK(compare(hat_beta(n), hat_beta(n + 1)) == Ordering::Greater);
  CHECK(compare(hat_beta(0), rho(3)) == Ordering::Greater);
}

TEST_CASE("beta_c bracket") {
  const auto b3 = approx_beta_c(mpq_class(1, 1000));
  const auto b4 = approx_beta_c(mpq_class(1, 10000));
  const auto b6 = approx_beta_c(mpq_class(1, 1000000));
  CHECK(b4.width() <= mpq_class(1, 10000));
  CHECK(b6.lo >= b3.lo);
  CHECK(b6.hi <= b3.hi);
  // every bracket lies above rho_3 and below hat-beta_0
  const mpq_class eps(1, 1000000000);
  CHECK(b4.lo > rho(3).refined(eps).hi());
  CHECK(b4.hi < hat_beta(0).refined(eps).lo());
  CHECK_THROWS_AS(approx_beta_c(mpq_class(1, 100000000), 2), Error);
}

TEST_CASE("property: round trip on random Parry-valid periodic sequences") {
  std::mt19937 rng(4242);
  int done = 0;
  while (done < 60) {
    std::vector<std::uint8_t> d(1 + rng() % 10);
    for (auto& x : d) x = rng() & 1;
    d[0] = 1;
    const EPSeq s = EPSeq::periodic(BinaryWord(d));
    if (!is_parry_valid(s)) continue;
    const auto beta = delta_inverse(s);
    CHECK(quasi_greedy(beta, 3 * s.period().size()) == s.prefix(3 * s.period().size()));
    ++done;
  }
}

TEST_CASE("property: delta inverse is strictly increasing") {
  std::mt19937 rng(17);
  std::vector<EPSeq> pool;
  while (pool.size() < 40) {
    std::vector<std::uint8_t> pre(rng() % 3), per(1 + rng() % 8);
    for (auto& x : pre) x = rng() & 1;
    for (auto& x : per) x = rng() & 1;
    const EPSeq s{BinaryWord(pre), BinaryWord(per)};
    if (is_parry_valid(s)) pool.push_back(s);
  }
  std::vector<AlgebraicReal> values;
  for (const auto& s : pool) values.push_back(delta_inverse(s));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) CHECK(compare(values[i], values[j]) == lex_compare(pool[i], pool[j]));
  }
}

TEST_CASE("quasi-greedy prefixes extend consistently") {
  const auto b = beta_star();
  for (std::size_t n : {5u, 17u, 40u}) CHECK(quasi_greedy(b, n + 10).prefix(n) == quasi_greedy(b, n));
  for (int n = 1; n <= 5; ++n) {
    const auto e = delta_expansion(rho(n), 400);
    REQUIRE(e.digits.has_value());
    CHECK(e.digits->period().size() == 3u << (n - 1));
  }
}

TEST_CASE("next Parry-valid sequence above") {
  const auto n = next_parry_valid_above(seq("(10)^∞"), 8);
  REQUIRE(n.has_value());
  CHECK(lex_compare(*n, seq("(10)^∞")) == Ordering::Greater);
  CHECK(is_parry_valid(*n));
}
