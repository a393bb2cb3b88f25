#include <doctest.h>

#include <cmath>
#include <random>

#include "gasket/algebraic.hpp"
#include "gasket/error.hpp"

using namespace gasket;

namespace {

IntPolynomial poly(const char* s) { return IntPolynomial::parse(s); }
mpq_class tiny(int bits) { return mpq_class(1, mpz_class(1) << bits); }

}  // namespace

TEST_CASE("polynomial text round trip") {
  for (const char* s : {"x^3 - x^2 - 1", "x^3 - 2x^2 + 2x - 2", "-x + 4", "x^6 - x^5 - 2x^3 + x^2"}) {
    CHECK(poly(s).str() == s);
  }
  CHECK(poly("2*x^2+1") == IntPolynomial{1, 0, 2});
  CHECK(poly("x - x") .is_zero());
  CHECK_THROWS_AS(poly("x^^2"), Error);
  CHECK_THROWS_AS(poly("3 4"), Error);
}

TEST_CASE("polynomial arithmetic, gcd and square-free part") {
  const auto a = poly("x^2 - x - 1");
  const auto b = poly("x - 3");
  CHECK(exact_quotient(a * b, b) == a);
  CHECK(gcd(a * b, a * poly("x + 1")) == a);
  CHECK(gcd(a, b) == IntPolynomial{1});
  CHECK(square_free_part(a * a * b) == a * b);
  CHECK(remove_factor(poly("x^3 - x^2"), poly("x")) == poly("x - 1"));
  CHECK(poly("x^2 - 2").sign_at(mpq_class(3, 2)) == 1);
  CHECK(poly("x^2 - 2").sign_at(mpq_class(7, 5)) == -1);
  CHECK(descartes_bound(poly("x^2 - 2"), 0, 2) == 1);
  CHECK(descartes_bound(poly("x^2 - 3x + 2"), 0, 3) == 2);
}

TEST_CASE("companion polynomials") {
  CHECK(companion_poly(EPSeq::parse("(10)^∞")) == poly("x^2 - x - 1"));
  CHECK(companion_poly(EPSeq::parse("(100)^∞")) == poly("x^3 - x^2 - 1"));
  // 101(001)^inf is held canonically as 1(010)^inf
  CHECK(companion_poly(EPSeq::parse("101(001)^∞")) == poly("x^4 - x^3 - 2x + 1"));
  CHECK(companion_poly(EPSeq::parse("(10)^∞")).sign_at(mpq_class(3, 2)) < 0);
  CHECK_THROWS_AS(companion_poly(EPSeq::parse("(0)^∞")), Error);
}

TEST_CASE("series consistency of the companion polynomial") {
  // P(x) = x^p (x^q - 1) (1 - sum s_i x^-i) on rational x in (1, 2].
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::uint8_t> pre(rng() % 5), per(1 + rng() % 6);
    for (auto& d : pre) d = rng() & 1;
    for (auto& d : per) d = rng() & 1;
    per[0] = 1;
    const EPSeq s{BinaryWord(pre), BinaryWord(per)};
    const IntPolynomial p = companion_poly(s);
    const mpq_class x(11 + static_cast<long>(rng() % 9), 10);
    const std::size_t n = 200;
    mpq_class partial = 1, xi = 1;
    for (std::size_t i = 0; i < n; ++i) {
      xi /= x;
      if (s.at(i)) partial -= xi;
    }
    mpq_class scale = 1;
    for (std::size_t i = 0; i < s.preperiod().size(); ++i) scale *= x;
    mpq_class xq = 1;
    for (std::size_t i = 0; i < s.period().size(); ++i) xq *= x;
    scale *= xq - 1;
    const mpq_class tail = xi / (x - 1);  // x^-N / (x - 1)
    const mpq_class diff = abs(p.eval(x) / scale - partial);
    CHECK(diff <= tail);
  }
}

TEST_CASE("root isolation in (1,2]") {
  CHECK(to_decimal(isolate_root_in_unit_two(poly("x^2 - x - 1")), 10) == "1.6180339887");
  CHECK(to_decimal(isolate_root_in_unit_two(poly("x^3 - x^2 - 1")), 5) == "1.46557");
  CHECK(to_decimal(isolate_root_in_unit_two(poly("x^3 - 2x^2 + 2x - 2")), 5) == "1.54369");
  CHECK(to_decimal(isolate_root_in_unit_two(poly("x - 2")), 3) == "2.000");
  CHECK(to_decimal(isolate_root_in_unit_two(poly("2x - 3")), 0) == "2");
  CHECK(to_decimal(isolate_root_in_unit_two(poly("2x - 3")), 2) == "1.50");
  try {
    isolate_root_in_unit_two(poly("x^2 + 1"));
    FAIL("expected NoRootInRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoRootInRange);
  }
  try {
    isolate_root_in_unit_two(poly("x^2 - 3x + 2") * poly("4x^2 - 5x - 1") * poly("5x - 7"));
    FAIL("expected AmbiguousRoot");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbiguousRoot);
  }
}

TEST_CASE("refine and to_decimal") {
  const auto g = isolate_root_in_unit_two(poly("x^2 - x - 1"));
  const auto r = refine(g, tiny(100));
  CHECK(r.width() <= tiny(100));
  CHECK(to_decimal(r, 10) == "1.6180339887");
  CHECK(refine(r, tiny(100)).width() == r.width());
  CHECK(to_decimal(g, 30) == "1.618033988749894848204586834366");
}

TEST_CASE("exact comparison") {
  const auto golden = isolate_root_in_unit_two(poly("x^2 - x - 1"));
  const auto b3 = isolate_root_in_unit_two(poly("x^3 - x^2 - 1"));
  CHECK(compare(golden, b3) == Ordering::Greater);
  CHECK(compare(b3, golden) == Ordering::Less);
  const AlgebraicReal same(poly("x^2 - x - 1") * poly("x - 3"), 1, 2);
  CHECK(compare(golden, same) == Ordering::Equal);
  CHECK(compare(AlgebraicReal::rational(mpq_class(3, 2)), isolate_root_in_unit_two(poly("2x - 3"))) ==
        Ordering::Equal);
}

TEST_CASE("property: compare agrees with 60-digit refinement on random pairs") {
  std::mt19937 rng(99);
  int checked = 0;
  std::vector<AlgebraicReal> pool;
  while (pool.size() < 60) {
    // random quadratics and cubics with a root in (1,2]
    std::vector<mpz_class> c(2 + rng() % 3);
    for (auto& x : c) x = static_cast<long>(rng() % 9) - 4;
    c.back() = 1 + rng() % 3;
    const IntPolynomial p(c);
    try {
      pool.push_back(isolate_root_in_unit_two(p));
    } catch (const Error&) {
    }
  }
  const mpq_class w = mpq_class(1, mpz_class("1" + std::string(60, '0')));
  std::vector<AlgebraicReal> fine;
  for (const auto& x : pool) fine.push_back(x.refined(w));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const Ordering o = compare(pool[i], pool[j]);
      if (fine[i].hi() < fine[j].lo()) {
        CHECK(o == Ordering::Less);
      } else if (fine[j].hi() < fine[i].lo()) {
        CHECK(o == Ordering::Greater);
      } else {
        CHECK(o == Ordering::Equal);
      }
      ++checked;
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("sign_at") {
  const auto golden = isolate_root_in_unit_two(poly("x^2 - x - 1"));
  const auto b3 = isolate_root_in_unit_two(poly("x^3 - x^2 - 1"));
  CHECK(sign_at(poly("x^2 - x - 1"), golden) == Sign::Zero);
  CHECK(sign_at(poly("x - 1"), golden) == Sign::Positive);
  CHECK(sign_at(poly("x^2 - x - 1"), b3) == Sign::Negative);
  CHECK(sign_at(RatPolynomial(std::vector<mpq_class>{mpq_class(-1, 2), mpq_class(-1, 2), mpq_class(1, 2)}), golden) ==
        Sign::Zero);
  CHECK(sign_at(poly("x^3 - x^2 - 1") * poly("x + 5"), b3) == Sign::Zero);
}

TEST_CASE("Perron certificates") {
  const auto golden = isolate_root_in_unit_two(poly("x^2 - x - 1"));
  const auto c = perron_certify(poly("x^2 - x - 1"), golden, false);
  REQUIRE(c.margin.has_value());
  CHECK(c.margin->get_d() == doctest::Approx(1.0).epsilon(1e-6));
  const auto b3 = isolate_root_in_unit_two(poly("x^3 - x^2 - 1"));
  const auto c3 = perron_certify(poly("x^3 - x^2 - 1"), b3, false);
  REQUIRE(c3.margin.has_value());
  CHECK(c3.margin->get_d() == doctest::Approx(1.46557 - 0.826).epsilon(1e-3));
  const auto t = perron_certify(poly("x^3 - x^2 - 1"), b3, true);
  CHECK(t.theorem_backed);
  // x^2 - 2 (root sqrt 2) has the conjugate -sqrt 2 of equal modulus.
  CHECK_THROWS_AS(perron_certify(poly("x^2 - 2"), isolate_root_in_unit_two(poly("x^2 - 2")), false), Error);
}
