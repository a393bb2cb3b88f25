#include "gasket/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gasket/error.hpp"

namespace gasket {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    // "3 4" is not the number 34
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j])) &&
          std::isalnum(static_cast<unsigned char>(text[i - 1]))) {
        throw Error(ErrorCode::Parse, "not a polynomial: '" + std::string(text) + "'");
      }
    }
  }
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  auto fail = [&]() {
    return Error(ErrorCode::Parse, "not a polynomial: '" + std::string(text) + "'");
  };
  if (s.empty()) throw fail();
  std::vector<mpz_class> c;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw fail();
    }
    first = false;
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
    std::size_t power = 0;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) throw fail();
      ++i;
      if (i >= s.size() || s[i] != 'x') throw fail();
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
        if (e.empty() || e.size() > 6) throw fail();
        power = std::stoul(e);
      }
    } else if (digits.empty()) {
      throw fail();
    }
    if (c.size() <= power) c.resize(power + 1);
    c[power] += sign * coeff;
  }
  return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) g = ::gcd(g, x);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  // sum c_i p^i q^(n-i), a positive multiple of P(p/q).
  if (is_zero()) return 0;
  const mpz_class& p = x.get_num();
  const mpz_class& q = x.get_den();
  mpz_class acc = c_.back();
  mpz_class qpow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    qpow *= q;
    acc = acc * p + c_[i] * qpow;
  }
  return sgn(acc);
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

double IntPolynomial::eval(double x) const {
  double acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
  return acc;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(v));
}

namespace {

// Rational long division; returns (quotient, remainder).
std::pair<std::vector<mpq_class>, std::vector<mpq_class>> divide(std::vector<mpq_class> a,
                                                                 const std::vector<mpq_class>& b) {
  const std::size_t nb = b.size();
  if (a.size() < nb) return {{}, std::move(a)};
  std::vector<mpq_class> q(a.size() - nb + 1);
  for (std::size_t i = a.size() - 1;; --i) {
    const mpq_class f = a[i] / b.back();
    q[i - nb + 1] = f;
    if (f != 0) {
      for (std::size_t j = 0; j < nb; ++j) a[i - nb + 1 + j] -= f * b[j];
    }
    if (i == nb - 1) break;
  }
  a.resize(nb - 1);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return {std::move(q), std::move(a)};
}

std::vector<mpq_class> to_rational(const IntPolynomial& p) {
  std::vector<mpq_class> v(p.coefficients().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coefficients()[i];
  return v;
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed over the integers.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t nb = bc.size();
  const mpz_class& lb = bc.back();
  while (r.size() >= nb) {
    const mpz_class lr = r.back();
    const std::size_t shift = r.size() - nb;
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j < nb; ++j) r[shift + j] -= lr * bc[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
  if (b.is_zero()) return a.is_zero();
  return divide(to_rational(a), to_rational(b)).second.empty();
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  auto [q, r] = divide(to_rational(a), to_rational(b));
  if (!r.empty()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
  std::vector<mpz_class> v(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) throw Error(ErrorCode::InvalidArgument, "quotient is not integral");
    v[i] = q[i].get_num();
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive_part();
  const IntPolynomial g = gcd(p, p.derivative());
  return exact_quotient(p.primitive_part(), g).primitive_part();
}

IntPolynomial remove_factor(const IntPolynomial& p, const IntPolynomial& f) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "factor must have positive degree");
  IntPolynomial r = p.primitive_part();
  while (!r.is_zero() && divides(f, r)) r = exact_quotient(r, f.primitive_part()).primitive_part();
  return r;
}

unsigned descartes_bound(const IntPolynomial& p, const mpq_class& a, const mpq_class& b) {
  // R(t) = P(a + (b - a) t), then (1 + y)^n R(1 / (1 + y)) = rev(R)(y + 1).
  const std::size_t n = p.coefficients().size();
  if (n <= 1) return 0;
  std::vector<mpq_class> r = to_rational(p);
  auto taylor_shift = [](std::vector<mpq_class>& v, const mpq_class& s) {
    const std::size_t m = v.size();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = m - 1; j-- > i;) v[j] += s * v[j + 1];
    }
  };
  taylor_shift(r, a);
  mpq_class scale = 1;
  const mpq_class w = b - a;
  for (auto& x : r) {
    x *= scale;
    scale *= w;
  }
  std::reverse(r.begin(), r.end());
  taylor_shift(r, 1);
  unsigned changes = 0;
  int last = 0;
  for (const auto& x : r) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RatPolynomial::RatPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPolynomial::RatPolynomial(const IntPolynomial& p) : c_(to_rational(p)) {}

RatPolynomial RatPolynomial::constant(const mpq_class& c) { return RatPolynomial(std::vector<mpq_class>{c}); }

void RatPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPolynomial RatPolynomial::times_x() const {
  if (is_zero()) return {};
  std::vector<mpq_class> v(c_.size() + 1);
  std::copy(c_.begin(), c_.end(), v.begin() + 1);
  return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::mod(const IntPolynomial& m) const {
  if (m.is_zero()) throw Error(ErrorCode::InvalidArgument, "reduction modulo the zero polynomial");
  return RatPolynomial(divide(c_, to_rational(m)).second);
}

IntPolynomial RatPolynomial::clear_denominators() const {
  mpz_class l = 1;
  for (const auto& x : c_) l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].get_num() * (l / c_[i].get_den());
  return IntPolynomial(std::move(v));
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return RatPolynomial(std::move(v));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return RatPolynomial(std::move(v));
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPolynomial(std::move(v));
}

}  // namespace gasket
