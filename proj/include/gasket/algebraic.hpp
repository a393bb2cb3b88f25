#pragma once

// Real algebraic numbers held as a square-free integer polynomial plus a
// rational isolating interval, with exact comparison and sign evaluation.

#include <gmpxx.h>

#include <optional>
#include <string>

#include "gasket/polynomial.hpp"
#include "gasket/words.hpp"

namespace gasket {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };
const char* to_string(Sign s) noexcept;

class AlgebraicReal {
 public:
  // poly must have exactly one root in [lo, hi]; the constructor reduces poly
  // to its square-free part and checks for a strict sign change.
  AlgebraicReal(const IntPolynomial& poly, const mpq_class& lo, const mpq_class& hi);
  static AlgebraicReal rational(const mpq_class& q);

  const IntPolynomial& poly() const { return poly_; }
  const mpq_class& lo() const { return lo_; }
  const mpq_class& hi() const { return hi_; }
  mpq_class width() const { return hi_ - lo_; }
  double approx() const;

  // Bisects until the width is at most w. Returns a new value.
  AlgebraicReal refined(const mpq_class& w) const;
  // One bisection step in place; used by loops that own their copy.
  void bisect();

 private:
  friend AlgebraicReal isolate_root_in_unit_two(const IntPolynomial& p);
  friend AlgebraicReal delta_inverse(const EPSeq& s);
  AlgebraicReal() = default;
  // poly has a single root in [lo, hi] and that root is simple.
  static AlgebraicReal trusted(IntPolynomial poly, mpq_class lo, mpq_class hi);
  IntPolynomial poly_;
  mpq_class lo_;
  mpq_class hi_;
  int sign_lo_ = 0;
};

// P with P(beta) = 0 iff sum s_i beta^-i = 1. For preperiod b_1..b_p and
// period c_1..c_q: x^p (x^q - 1) - B(x) (x^q - 1) - C(x) with
// B = sum b_i x^(p-i), C = sum c_j x^(q-j).
IntPolynomial companion_poly(const EPSeq& s);

// The unique root of P in (1, 2]. NoRootInRange when there is none,
// AmbiguousRoot when there are several.
AlgebraicReal isolate_root_in_unit_two(const IntPolynomial& p);

AlgebraicReal refine(const AlgebraicReal& x, const mpq_class& width);

// Rounded to `digits` places after the point (half up).
std::string to_decimal(const AlgebraicReal& x, int digits = 6);
// q rounded to `digits` decimals: direction < 0 down, > 0 up, 0 half up.
std::string to_decimal(const mpq_class& q, int digits, int direction = 0);

Ordering compare(const AlgebraicReal& x, const AlgebraicReal& y);

// Sign of expr(x). Zero is certified by a common factor of expr and x's
// polynomial that changes sign on the isolating interval.
Sign sign_at(const RatPolynomial& expr, const AlgebraicReal& x);
Sign sign_at(const IntPolynomial& expr, const AlgebraicReal& x);

struct PerronCertificate {
  AlgebraicReal dominant_root;
  // dominant lower bound minus the largest modulus bound of any other root.
  std::optional<mpq_class> margin;
  bool theorem_backed = false;
};

// With delta_is_ep the certificate rests on the periodic quasi-greedy
// expansion; otherwise every complex root of P is enclosed numerically and a
// positive margin is required (MarginNotEstablished if none is found).
PerronCertificate perron_certify(const IntPolynomial& p, const AlgebraicReal& x, bool delta_is_ep);
// The numeric path only, regardless of any theorem.
PerronCertificate perron_certify_numeric(const IntPolynomial& p, const AlgebraicReal& x);

}  // namespace gasket
