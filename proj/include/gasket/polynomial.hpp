#pragma once

// Univariate polynomials with arbitrary-precision integer or rational
// coefficients. Coefficient i multiplies x^i.

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gasket {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);  // low degree first

  // Accepts sums of terms such as "x^3 - 2x^2 + 2*x - 2".
  static IntPolynomial parse(std::string_view text);
  static IntPolynomial monomial(const mpz_class& c, std::size_t degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return c_; }
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  const mpz_class& leading() const { return c_.back(); }

  mpz_class content() const;
  // Content removed, leading coefficient made positive.
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;

  // Exact sign of P(p/q), q > 0.
  int sign_at(const mpq_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  double eval(double x) const;

  std::string str() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
// a / b; throws InvalidArgument unless b divides a over the integers.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
// True when b divides a over the rationals.
bool divides(const IntPolynomial& b, const IntPolynomial& a);
IntPolynomial square_free_part(const IntPolynomial& p);
// Divides out every power of f that divides p.
IntPolynomial remove_factor(const IntPolynomial& p, const IntPolynomial& f);

// Sign variations of the Moebius transform of p onto (a, b): an upper bound
// on the number of roots in the open interval, exact when it is 0 or 1.
unsigned descartes_bound(const IntPolynomial& p, const mpq_class& a, const mpq_class& b);

class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<mpq_class> coeffs);
  explicit RatPolynomial(const IntPolynomial& p);
  static RatPolynomial constant(const mpq_class& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coefficients() const { return c_; }
  mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }

  RatPolynomial times_x() const;
  // Remainder after division by m (m nonzero).
  RatPolynomial mod(const IntPolynomial& m) const;
  // Positive multiple with integer coefficients.
  IntPolynomial clear_denominators() const;

  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  bool operator==(const RatPolynomial& o) const { return c_ == o.c_; }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

}  // namespace gasket
