#include "gasket/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "gasket/error.hpp"

namespace gasket {

const char* to_string(Sign s) noexcept {
  switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Zero: return "Zero";
    case Sign::Positive: return "Positive";
  }
  return "?";
}

AlgebraicReal AlgebraicReal::trusted(IntPolynomial poly, mpq_class lo, mpq_class hi) {
  AlgebraicReal x;
  x.poly_ = std::move(poly);
  x.lo_ = std::move(lo);
  x.hi_ = std::move(hi);
  x.sign_lo_ = x.poly_.sign_at(x.lo_);
  return x;
}

AlgebraicReal::AlgebraicReal(const IntPolynomial& poly, const mpq_class& lo, const mpq_class& hi) {
  if (poly.degree() < 1) throw Error(ErrorCode::InvalidArgument, "algebraic number needs a nonconstant polynomial");
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "isolating interval must have lo < hi");
  poly_ = square_free_part(poly);
  lo_ = lo;
  hi_ = hi;
  sign_lo_ = poly_.sign_at(lo_);
  const int sign_hi = poly_.sign_at(hi_);
  if (sign_lo_ == 0 || sign_hi == 0 || sign_lo_ == sign_hi) {
    throw Error(ErrorCode::InvalidArgument, "no sign change of " + poly_.str() + " on the interval");
  }
}

AlgebraicReal AlgebraicReal::rational(const mpq_class& q) {
  return trusted(IntPolynomial(std::vector<mpz_class>{-q.get_num(), q.get_den()}), q - 1, q + 1);
}

double AlgebraicReal::approx() const {
  const mpq_class mid = (lo_ + hi_) / 2;
  return mid.get_d();
}

void AlgebraicReal::bisect() {
  const mpq_class mid = (lo_ + hi_) / 2;
  const int s = poly_.sign_at(mid);
  if (s == 0) {
    lo_ = (lo_ + mid) / 2;
    hi_ = (mid + hi_) / 2;
  } else if (s == sign_lo_) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

AlgebraicReal AlgebraicReal::refined(const mpq_class& w) const {
  if (w <= 0) throw Error(ErrorCode::InvalidArgument, "refinement width must be positive");
  AlgebraicReal x = *this;
  while (x.width() > w) x.bisect();
  return x;
}

AlgebraicReal refine(const AlgebraicReal& x, const mpq_class& width) { return x.refined(width); }

IntPolynomial companion_poly(const EPSeq& s) {
  if (s.is_zero()) throw Error(ErrorCode::ZeroSequence, "the zero sequence has no companion polynomial");
  const std::size_t p = s.preperiod().size();
  const std::size_t q = s.period().size();
  std::vector<mpz_class> xq1(q + 1);  // x^q - 1
  xq1[q] = 1;
  xq1[0] = -1;
  const IntPolynomial xq_minus_1(xq1);
  std::vector<mpz_class> b(p + 1), c(q + 1);
  b[p] = 1;  // x^p - B(x)
  for (std::size_t i = 0; i < p; ++i) b[p - 1 - i] -= s.preperiod()[i];
  for (std::size_t j = 0; j < q; ++j) c[q - 1 - j] = s.period()[j];
  return IntPolynomial(std::move(b)) * xq_minus_1 - IntPolynomial(std::move(c));
}

namespace {

// Moves the endpoints of an interval holding exactly one root of the
// square-free p (open interval count 1) off any root of p.
std::pair<mpq_class, mpq_class> tighten(const IntPolynomial& p, mpq_class a, mpq_class b) {
  if (p.sign_at(a) == 0) {
    mpq_class h = (b - a) / 2;
    while (descartes_bound(p, a + h, b) != 1 || p.sign_at(a + h) == 0) h /= 2;
    a += h;
  }
  if (p.sign_at(b) == 0) {
    mpq_class h = (b - a) / 2;
    while (descartes_bound(p, a, b - h) != 1 || p.sign_at(b - h) == 0) h /= 2;
    b -= h;
  }
  return {a, b};
}

// Small interval around the exact rational root r of p holding no other root.
std::pair<mpq_class, mpq_class> around(const IntPolynomial& p, const mpq_class& r) {
  mpq_class h(1, 4);
  while (descartes_bound(p, r - h, r + h) != 1 || p.sign_at(r - h) == 0 || p.sign_at(r + h) == 0) h /= 2;
  return {r - h, r + h};
}

void isolate(const IntPolynomial& p, const mpq_class& a, const mpq_class& b,
             std::vector<std::pair<mpq_class, mpq_class>>& out) {
  if (out.size() > 1) return;
  const unsigned v = descartes_bound(p, a, b);
  if (v == 0) return;
  if (v == 1) {
    out.push_back(tighten(p, a, b));
    return;
  }
  const mpq_class m = (a + b) / 2;
  isolate(p, a, m, out);
  if (p.sign_at(m) == 0) out.push_back(around(p, m));
  isolate(p, m, b, out);
}

}  // namespace

AlgebraicReal isolate_root_in_unit_two(const IntPolynomial& p) {
  if (p.degree() < 1) throw Error(ErrorCode::NoRootInRange, "constant polynomial has no root in (1,2]");
  IntPolynomial s = remove_factor(p, IntPolynomial{0, 1});
  if (s.degree() >= 1) s = remove_factor(s, IntPolynomial{-1, 1});
  if (s.degree() >= 1) s = square_free_part(s);
  if (s.degree() < 1) throw Error(ErrorCode::NoRootInRange, p.str() + " has no root in (1,2]");
  std::vector<std::pair<mpq_class, mpq_class>> roots;
  isolate(s, 1, 2, roots);
  if (s.sign_at(2) == 0) roots.push_back(around(s, 2));
  if (roots.empty()) throw Error(ErrorCode::NoRootInRange, p.str() + " has no root in (1,2]");
  if (roots.size() > 1) throw Error(ErrorCode::AmbiguousRoot, p.str() + " has several roots in (1,2]");
  return AlgebraicReal::trusted(std::move(s), roots[0].first, roots[0].second);
}

namespace {

std::string place_point(mpz_class n, int digits) {
  const bool negative = n < 0;
  if (negative) n = -n;
  std::string body = n.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return negative ? "-" + body : body;
}

}  // namespace

std::string to_decimal(const mpq_class& q, int digits, int direction) {
  if (digits < 0) throw Error(ErrorCode::InvalidArgument, "digits must be nonnegative");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class t = q * scale;
  if (direction == 0) t += mpq_class(1, 2);
  mpz_class n;
  if (direction > 0) {
    mpz_cdiv_q(n.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  } else {
    mpz_fdiv_q(n.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  }
  return place_point(n, digits);
}

std::string to_decimal(const AlgebraicReal& x0, int digits) {
  if (digits < 0) throw Error(ErrorCode::InvalidArgument, "digits must be nonnegative");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpq_class step(1, scale);
  auto rounded = [&](const mpq_class& v) {
    mpq_class t = v * scale + mpq_class(1, 2);
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return r;
  };
  AlgebraicReal x = x0.refined(step);
  mpz_class n;
  for (;;) {
    const mpz_class a = rounded(x.lo());
    const mpz_class b = rounded(x.hi());
    if (a == b) {
      n = a;
      break;
    }
    // A rounding boundary lies inside; it may be the value itself.
    const mpq_class boundary = mpq_class(b * 2 - 1, scale * 2);
    if (x.poly().sign_at(boundary) == 0) {
      n = b;
      break;
    }
    x.bisect();
  }
  return place_point(n, digits);
}

namespace {

bool changes_sign(const IntPolynomial& g, const mpq_class& a, const mpq_class& b) {
  return g.sign_at(a) * g.sign_at(b) < 0;
}

}  // namespace

Ordering compare(const AlgebraicReal& x0, const AlgebraicReal& y0) {
  AlgebraicReal x = x0;
  AlgebraicReal y = y0;
  const mpq_class threshold(1, mpz_class(1) << 48);
  bool gcd_checked = false;
  for (;;) {
    if (x.hi() <= y.lo()) return Ordering::Less;
    if (y.hi() <= x.lo()) return Ordering::Greater;
    if (!gcd_checked && x.width() < threshold && y.width() < threshold) {
      gcd_checked = true;
      const IntPolynomial g = gcd(x.poly(), y.poly());
      if (g.degree() >= 1 && changes_sign(g, x.lo(), x.hi()) && changes_sign(g, y.lo(), y.hi())) {
        // g has at most one root in each interval; both values are roots of
        // g, so they coincide iff g vanishes inside the overlap.
        const mpq_class a = std::max(x.lo(), y.lo());
        const mpq_class b = std::min(x.hi(), y.hi());
        if (changes_sign(g, a, b)) return Ordering::Equal;
      }
    }
    if (x.width() >= y.width()) x.bisect(); else y.bisect();
  }
}

namespace {

struct Interval {
  mpq_class lo;
  mpq_class hi;
};

Interval interval_eval(const IntPolynomial& e, const mpq_class& xl, const mpq_class& xh) {
  Interval acc{0, 0};
  const auto& c = e.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    mpq_class p[4] = {acc.lo * xl, acc.lo * xh, acc.hi * xl, acc.hi * xh};
    acc.lo = *std::min_element(p, p + 4) + c[i];
    acc.hi = *std::max_element(p, p + 4) + c[i];
  }
  return acc;
}

}  // namespace

Sign sign_at(const IntPolynomial& expr, const AlgebraicReal& x0) {
  if (expr.is_zero()) return Sign::Zero;
  if (expr.degree() == 0) return expr.leading() > 0 ? Sign::Positive : Sign::Negative;
  AlgebraicReal x = x0;
  bool gcd_checked = false;
  for (;;) {
    const Interval v = interval_eval(expr, x.lo(), x.hi());
    if (v.lo > 0) return Sign::Positive;
    if (v.hi < 0) return Sign::Negative;
    if (!gcd_checked) {
      gcd_checked = true;
      const IntPolynomial g = gcd(expr, x.poly());
      // g divides x's square-free polynomial, so it is nonzero at the
      // endpoints and has at most one simple root inside.
      if (g.degree() >= 1 && changes_sign(g, x.lo(), x.hi())) return Sign::Zero;
    }
    x.bisect();
  }
}

Sign sign_at(const RatPolynomial& expr, const AlgebraicReal& x) {
  return sign_at(expr.clear_denominators(), x);
}

namespace {

using Complex = std::complex<long double>;

// Aberth-Ehrlich simultaneous iteration.
std::vector<Complex> aberth_roots(const std::vector<long double>& c) {
  const std::size_t n = c.size() - 1;
  long double bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::fabs(c[i] / c[n]));
  bound += 1;
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long double angle = 2 * std::numbers::pi_v<long double> * (i + 0.25L) / n;
    z[i] = std::polar(bound * 0.7L, angle);
  }
  auto eval = [&](const Complex& x, Complex& d) {
    Complex v = c[n];
    d = 0;
    for (std::size_t i = n; i-- > 0;) {
      d = d * x + v;
      v = v * x + c[i];
    }
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex d;
      const Complex v = eval(z[i], d);
      if (v == Complex(0)) continue;
      const Complex ratio = v / d;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      }
      const Complex w = ratio / (1.0L - ratio * sum);
      z[i] -= w;
      change = std::max(change, std::abs(w) / (1 + std::abs(z[i])));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

}  // namespace

PerronCertificate perron_certify_numeric(const IntPolynomial& p, const AlgebraicReal& x0) {
  const IntPolynomial s = square_free_part(p);
  if (s.degree() < 1) throw Error(ErrorCode::InvalidArgument, "constant polynomial");
  const AlgebraicReal x = x0.refined(mpq_class(1, mpz_class(1) << 80));
  if (s.sign_at(x.lo()) * s.sign_at(x.hi()) >= 0) {
    throw Error(ErrorCode::InvalidArgument, "value is not a root of the polynomial");
  }
  const std::size_t n = static_cast<std::size_t>(s.degree());
  std::vector<long double> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = static_cast<long double>(s.coefficients()[i].get_d());
  const std::vector<Complex> z = n == 1 ? std::vector<Complex>{-c[0] / c[1]} : aberth_roots(c);

  // Inclusion radii n |P(z_i)| / |a_n prod (z_i - z_j)|, with the Horner
  // rounding error folded into |P(z_i)| and a relative inflation on top.
  constexpr long double eps = std::numeric_limits<long double>::epsilon();
  std::vector<long double> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex v = c[n];
    long double absacc = std::fabs(c[n]);
    const long double m = std::abs(z[i]);
    for (std::size_t k = n; k-- > 0;) {
      v = v * z[i] + c[k];
      absacc = absacc * m + std::fabs(c[k]);
    }
    long double denom = std::fabs(c[n]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom *= std::abs(z[i] - z[j]);
    }
    if (denom == 0) throw Error(ErrorCode::MarginNotEstablished, "coincident root approximations");
    const long double residual = std::abs(v) + 4 * (n + 1) * eps * absacc;
    r[i] = n * residual / denom * (1 + 1e-6L) + 8 * eps * (1 + m);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(z[i] - z[j]) <= r[i] + r[j]) {
        throw Error(ErrorCode::MarginNotEstablished, "root inclusion disks overlap");
      }
    }
  }
  const long double xl = static_cast<long double>(x.lo().get_d());
  const long double xh = static_cast<long double>(x.hi().get_d());
  std::size_t dom = n;
  for (std::size_t i = 0; i < n; ++i) {
    // distance from z_i to the real segment [xl, xh]
    // (slack covers rounding the rational endpoints to floating point)
    const long double re = std::clamp(z[i].real(), xl, xh);
    if (std::abs(z[i] - Complex(re, 0)) <= r[i] + 4 * std::numeric_limits<double>::epsilon() * (1 + std::fabs(xh))) {
      if (dom != n) throw Error(ErrorCode::MarginNotEstablished, "dominant root not separated");
      dom = i;
    }
  }
  if (dom == n) throw Error(ErrorCode::MarginNotEstablished, "no inclusion disk meets the root interval");
  long double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != dom) worst = std::max(worst, std::abs(z[i]) + r[i]);
  }
  const double upper = std::nextafter(static_cast<double>(worst * (1 + 1e-12L)), HUGE_VAL);
  const mpq_class margin = x.lo() - mpq_class(upper);
  if (margin <= 0) throw Error(ErrorCode::MarginNotEstablished, "a conjugate may reach the dominant modulus");
  PerronCertificate cert{x0, margin, false};
  return cert;
}

PerronCertificate perron_certify(const IntPolynomial& p, const AlgebraicReal& x, bool delta_is_ep) {
  if (delta_is_ep) return PerronCertificate{x, std::nullopt, true};
  return perron_certify_numeric(p, x);
}

}  // namespace gasket
