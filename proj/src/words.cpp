#include "gasket/words.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "canonical.hpp"
#include "gasket/error.hpp"

namespace gasket {

const char* to_string(Ordering o) noexcept {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

BinaryWord::BinaryWord(std::vector<std::uint8_t> digits)
    : digits_(std::move(digits)) {
  for (auto d : digits_) {
    if (d > 1) throw Error(ErrorCode::InvalidArgument, "binary digit out of range");
  }
}

BinaryWord::BinaryWord(std::initializer_list<int> digits) {
  digits_.reserve(digits.size());
  for (int d : digits) {
    if (d != 0 && d != 1) throw Error(ErrorCode::InvalidArgument, "binary digit out of range");
    digits_.push_back(static_cast<std::uint8_t>(d));
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<std::uint8_t> d;
  d.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::Parse, "not a binary word: '" + std::string(text) + "'");
    }
    d.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(d));
}

BinaryWord BinaryWord::prefix(std::size_t n) const {
  return slice(0, std::min(n, size()));
}

BinaryWord BinaryWord::slice(std::size_t from, std::size_t count) const {
  if (from > size() || count > size() - from) {
    throw Error(ErrorCode::InvalidArgument, "slice out of range");
  }
  BinaryWord w;
  w.digits_.assign(digits_.begin() + from, digits_.begin() + from + count);
  return w;
}

BinaryWord BinaryWord::repeat(std::size_t times) const {
  BinaryWord w;
  w.digits_.reserve(size() * times);
  for (std::size_t i = 0; i < times; ++i) {
    w.digits_.insert(w.digits_.end(), digits_.begin(), digits_.end());
  }
  return w;
}

BinaryWord BinaryWord::rotated(std::size_t j) const {
  if (empty()) return {};
  BinaryWord w = *this;
  std::rotate(w.digits_.begin(), w.digits_.begin() + (j % size()), w.digits_.end());
  return w;
}

std::size_t BinaryWord::count_ones() const {
  return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), 1));
}

std::string BinaryWord::str() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < size(); ++i) s[i] = static_cast<char>('0' + digits_[i]);
  return s;
}

BinaryWord operator+(const BinaryWord& a, const BinaryWord& b) {
  BinaryWord w = a;
  w.digits_.insert(w.digits_.end(), b.digits_.begin(), b.digits_.end());
  return w;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) { return os << w.str(); }

Ordering compare_words(const BinaryWord& a, const BinaryWord& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int x = i < a.size() ? a[i] : 0;
    const int y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

BinaryWord reflection(const BinaryWord& w) {
  std::vector<std::uint8_t> d(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) d[i] = static_cast<std::uint8_t>(1 - w[i]);
  return BinaryWord(std::move(d));
}

namespace {

BinaryWord flip_last(const BinaryWord& w, std::uint8_t expected, const char* op) {
  if (w.empty() || w.back() != expected) {
    throw Error(ErrorCode::LastDigitMismatch,
                std::string(op) + " requires last digit " + char('0' + expected) +
                    ": '" + w.str() + "'");
  }
  std::vector<std::uint8_t> d(w.digits().begin(), w.digits().end());
  d.back() = static_cast<std::uint8_t>(1 - expected);
  return BinaryWord(std::move(d));
}

}  // namespace

BinaryWord plus(const BinaryWord& w) { return flip_last(w, 0, "plus"); }
BinaryWord minus(const BinaryWord& w) { return flip_last(w, 1, "minus"); }

BinaryWord theta_block(const BinaryWord& w) {
  if (w.size() % 3 != 0) {
    throw Error(ErrorCode::BadBlock, "length not a multiple of 3: '" + w.str() + "'");
  }
  std::vector<std::uint8_t> d(w.size());
  for (std::size_t i = 0; i < w.size(); i += 3) {
    // 000 <-> 101 and 001 <-> 100: the middle digit must be 0, outer digits flip.
    if (w[i + 1] != 0) {
      throw Error(ErrorCode::BadBlock, "block " + w.slice(i, 3).str() + " outside {000,001,100,101}");
    }
    d[i] = static_cast<std::uint8_t>(1 - w[i]);
    d[i + 1] = 0;
    d[i + 2] = static_cast<std::uint8_t>(1 - w[i + 2]);
  }
  return BinaryWord(std::move(d));
}

BinaryWord t_word(int n, int max_index) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "t_n needs n >= 1");
  if (n > max_index) {
    throw Error(ErrorCode::CapExceeded, "t_" + std::to_string(n) + " exceeds the configured cap");
  }
  BinaryWord t{1, 0, 0};
  for (int i = 1; i < n; ++i) {
    BinaryWord p = plus(t);
    t = p + theta_block(p);
  }
  return t;
}

BinaryWord lambda_prefix(std::size_t n, int max_index) {
  if (n == 0) return {};
  int m = 1;
  while ((std::size_t{3} << (m - 1)) < n) ++m;
  return plus(t_word(m, max_index)).prefix(n);
}

BinaryWord thue_morse(std::size_t n) {
  std::vector<std::uint8_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<std::uint8_t>(std::popcount(i) & 1);
  return BinaryWord(std::move(d));
}

bool check_tm_relation(std::size_t n) {
  const BinaryWord lam = lambda_prefix(3 * n);
  const BinaryWord tau = thue_morse(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (lam[3 * i] != tau[2 * i + 1]) return false;
    if (lam[3 * i + 1] != 0) return false;
    if (lam[3 * i + 2] != tau[2 * i + 2]) return false;
  }
  return true;
}

std::size_t primitive_root_length(std::span<const std::uint8_t> w) {
  return detail::primitive_root_length(w);
}

EPSeq::EPSeq(BinaryWord preperiod, BinaryWord period) {
  if (period.empty()) throw Error(ErrorCode::InvalidArgument, "period must be nonempty");
  std::vector<std::uint8_t> pre(preperiod.digits().begin(), preperiod.digits().end());
  std::vector<std::uint8_t> per(period.digits().begin(), period.digits().end());
  detail::canonicalize(pre, per);
  pre_ = BinaryWord(std::move(pre));
  per_ = BinaryWord(std::move(per));
}

EPSeq EPSeq::periodic(BinaryWord period) { return EPSeq({}, std::move(period)); }

EPSeq EPSeq::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  const std::string_view s = trim(text);
  const auto open = s.find('(');
  const auto close = s.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw Error(ErrorCode::Parse, "expected preperiod(period)^inf: '" + std::string(text) + "'");
  }
  const std::string_view tail = s.substr(close + 1);
  if (tail != "^∞" && tail != "^inf") {
    throw Error(ErrorCode::Parse, "expected ^∞ or ^inf after period: '" + std::string(text) + "'");
  }
  BinaryWord pre = BinaryWord::parse(s.substr(0, open));
  BinaryWord per = BinaryWord::parse(s.substr(open + 1, close - open - 1));
  if (per.empty()) throw Error(ErrorCode::Parse, "empty period: '" + std::string(text) + "'");
  return EPSeq(std::move(pre), std::move(per));
}

std::uint8_t EPSeq::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

BinaryWord EPSeq::prefix(std::size_t n) const {
  std::vector<std::uint8_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = at(i);
  return BinaryWord(std::move(d));
}

EPSeq EPSeq::shifted(std::size_t n) const {
  if (n <= pre_.size()) return EPSeq(pre_.slice(n, pre_.size() - n), per_);
  return EPSeq({}, per_.rotated((n - pre_.size()) % per_.size()));
}

std::string EPSeq::str() const { return pre_.str() + "(" + per_.str() + ")^∞"; }

std::ostream& operator<<(std::ostream& os, const EPSeq& s) { return os << s.str(); }

std::size_t comparison_horizon(const EPSeq& a, const EPSeq& b) {
  const std::size_t p = a.period().size();
  const std::size_t q = b.period().size();
  return std::max(a.preperiod().size(), b.preperiod().size()) + p + q - std::gcd(p, q);
}

Ordering lex_compare(const EPSeq& a, const EPSeq& b) {
  const std::size_t horizon = comparison_horizon(a, b);
  for (std::size_t i = 0; i < horizon; ++i) {
    const auto x = a.at(i);
    const auto y = b.at(i);
    if (x != y) return x < y ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

std::optional<Ordering> compare_with_prefix(const EPSeq& s, const BinaryWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto x = s.at(i);
    if (x != w[i]) return x < w[i] ? Ordering::Less : Ordering::Greater;
  }
  return std::nullopt;
}

EPSeq xi(std::uint64_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "xi_k needs k >= 1");
  const int n = std::countr_zero(k);
  const std::uint64_t m = ((k >> n) - 1) / 2;
  const std::size_t two_n = std::size_t{1} << n;
  // tau_1 tau_2 ... as a word starting at index 1.
  const BinaryWord tau = thue_morse(3 * two_n + 1).slice(1, 3 * two_n);
  if (m == 0) return EPSeq::periodic(minus(tau.prefix(two_n)));
  BinaryWord block = tau.prefix(3 * two_n) + minus(tau.prefix(2 * two_n)).repeat(m - 1);
  return EPSeq::periodic(std::move(block));
}

}  // namespace gasket
