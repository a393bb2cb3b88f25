#include "gasket/omega.hpp"

#include <algorithm>
#include <array>

#include "canonical.hpp"
#include "gasket/error.hpp"

namespace gasket {

OmegaWord::OmegaWord(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
  for (auto d : digits_) {
    if (d > 2) throw Error(ErrorCode::InvalidArgument, "Omega digit out of range");
  }
}

OmegaWord::OmegaWord(std::initializer_list<int> digits) {
  digits_.reserve(digits.size());
  for (int d : digits) {
    if (d < 0 || d > 2) throw Error(ErrorCode::InvalidArgument, "Omega digit out of range");
    digits_.push_back(static_cast<std::uint8_t>(d));
  }
}

OmegaWord OmegaWord::parse(std::string_view text) {
  std::vector<std::uint8_t> d;
  d.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '2') {
      throw Error(ErrorCode::Parse, "not an Omega word: '" + std::string(text) + "'");
    }
    d.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return OmegaWord(std::move(d));
}

OmegaWord OmegaWord::rotated(std::size_t j) const {
  if (empty()) return {};
  OmegaWord w = *this;
  std::rotate(w.digits_.begin(), w.digits_.begin() + (j % size()), w.digits_.end());
  return w;
}

OmegaWord OmegaWord::repeat(std::size_t times) const {
  OmegaWord w;
  for (std::size_t i = 0; i < times; ++i) {
    w.digits_.insert(w.digits_.end(), digits_.begin(), digits_.end());
  }
  return w;
}

std::string OmegaWord::str() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < size(); ++i) s[i] = static_cast<char>('0' + digits_[i]);
  return s;
}

OmegaWord operator+(const OmegaWord& a, const OmegaWord& b) {
  OmegaWord w = a;
  w.digits_.insert(w.digits_.end(), b.digits_.begin(), b.digits_.end());
  return w;
}

std::ostream& operator<<(std::ostream& os, const OmegaWord& w) { return os << w.str(); }

Projections project(const OmegaWord& w) {
  std::vector<std::uint8_t> a(w.size()), b(w.size()), c(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto d = w.digits()[i];
    a[i] = d == 1;
    b[i] = d == 2;
    c[i] = d == 0;
  }
  return {BinaryWord(std::move(a)), BinaryWord(std::move(b)), BinaryWord(std::move(c))};
}

namespace {

OmegaWord map_digits(const OmegaWord& w, const std::array<std::uint8_t, 3>& table) {
  std::vector<std::uint8_t> d(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) d[i] = table[w.digits()[i]];
  return OmegaWord(std::move(d));
}

// All six permutations of {0,1,2}; the group generated by theta and Phi.
constexpr std::array<std::array<std::uint8_t, 3>, 6> kAlphabetPermutations{{
    {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2},
}};

}  // namespace

OmegaWord theta_perm(const OmegaWord& w) { return map_digits(w, {1, 2, 0}); }
OmegaWord phi_perm(const OmegaWord& w) { return map_digits(w, {0, 2, 1}); }

OmegaWord u_word(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "u_n needs n >= 0");
  if (n == 0) return OmegaWord{0};
  if (n > 24) throw Error(ErrorCode::CapExceeded, "u_n exceeds the configured cap");
  OmegaWord u{1, 0, 2};
  for (int i = 1; i < n; ++i) {
    std::vector<std::uint8_t> d(u.digits().begin(), u.digits().end());
    d.back() = 1;
    OmegaWord head(std::move(d));
    u = head + phi_perm(head);
  }
  return u;
}

std::size_t smallest_period(const OmegaWord& w) {
  if (w.empty()) throw Error(ErrorCode::InvalidArgument, "smallest_period of an empty word");
  return detail::primitive_root_length(w.digits());
}

OmegaEPSeq::OmegaEPSeq(OmegaWord preperiod, OmegaWord period) {
  if (period.empty()) throw Error(ErrorCode::InvalidArgument, "period must be nonempty");
  std::vector<std::uint8_t> pre(preperiod.digits().begin(), preperiod.digits().end());
  std::vector<std::uint8_t> per(period.digits().begin(), period.digits().end());
  detail::canonicalize(pre, per);
  pre_ = OmegaWord(std::move(pre));
  per_ = OmegaWord(std::move(per));
}

OmegaEPSeq OmegaEPSeq::periodic(OmegaWord period) { return OmegaEPSeq({}, std::move(period)); }

OmegaEPSeq OmegaEPSeq::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  const auto open = s.find('(');
  const auto close = s.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw Error(ErrorCode::Parse, "expected preperiod(period)^inf: '" + std::string(text) + "'");
  }
  const std::string_view tail = s.substr(close + 1);
  if (tail != "^∞" && tail != "^inf") {
    throw Error(ErrorCode::Parse, "expected ^∞ or ^inf after period: '" + std::string(text) + "'");
  }
  OmegaWord per = OmegaWord::parse(s.substr(open + 1, close - open - 1));
  if (per.empty()) throw Error(ErrorCode::Parse, "empty period: '" + std::string(text) + "'");
  return OmegaEPSeq(OmegaWord::parse(s.substr(0, open)), std::move(per));
}

OmegaDigit OmegaEPSeq::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

std::string OmegaEPSeq::str() const { return pre_.str() + "(" + per_.str() + ")^∞"; }

bool is_symmetry_minimal(std::span<const std::uint8_t> w) {
  const std::size_t k = w.size();
  std::array<std::uint8_t, 64> image{};
  std::vector<std::uint8_t> big;
  std::uint8_t* img = image.data();
  if (k > image.size()) {
    big.resize(k);
    img = big.data();
  }
  for (std::size_t p = 1; p < kAlphabetPermutations.size(); ++p) {
    const auto& perm = kAlphabetPermutations[p];
    for (std::size_t i = 0; i < k; ++i) img[i] = perm[w[i]];
    const std::size_t r = detail::least_rotation({img, k});
    for (std::size_t i = 0; i < k; ++i) {
      const auto x = img[(r + i) % k];
      if (x != w[i]) {
        if (x < w[i]) return false;
        break;
      }
    }
  }
  return true;
}

namespace {

// Recursive FKM generation of Lyndon words over {0,1,2}.
class LyndonGenerator {
 public:
  LyndonGenerator(int k, bool quotient, NecklacePartition part,
                  const std::function<void(std::span<const std::uint8_t>)>& visit)
      : k_(k), quotient_(quotient), part_(part), visit_(visit), a_(k + 1, 0),
        split_depth_(std::min(k, 3)) {}

  void run() { generate(1, 1); }

 private:
  void generate(int t, int p) {
    if (t == split_depth_ + 1 && part_.count > 1) {
      unsigned id = 0;
      for (int i = 1; i <= split_depth_; ++i) id = id * 3 + a_[i];
      if (id % part_.count != part_.index) return;
    }
    if (t > k_) {
      if (p == k_) emit();
      return;
    }
    a_[t] = a_[t - p];
    generate(t + 1, p);
    for (int j = a_[t - p] + 1; j < 3; ++j) {
      a_[t] = static_cast<std::uint8_t>(j);
      generate(t + 1, t);
    }
  }

  void emit() {
    std::span<const std::uint8_t> w(a_.data() + 1, static_cast<std::size_t>(k_));
    if (quotient_ && !is_symmetry_minimal(w)) return;
    visit_(w);
  }

  int k_;
  bool quotient_;
  NecklacePartition part_;
  const std::function<void(std::span<const std::uint8_t>)>& visit_;
  std::vector<std::uint8_t> a_;
  int split_depth_;
};

}  // namespace

void for_each_primitive_necklace(int k, bool quotient_symmetry,
                                 const std::function<void(std::span<const std::uint8_t>)>& visit,
                                 NecklacePartition part) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "necklace length must be >= 1");
  if (part.count == 0 || part.index >= part.count) {
    throw Error(ErrorCode::InvalidArgument, "bad necklace partition");
  }
  LyndonGenerator(k, quotient_symmetry, part, visit).run();
}

std::vector<OmegaWord> enumerate_primitive_necklaces(int k, bool quotient_symmetry,
                                                     NecklacePartition part) {
  std::vector<OmegaWord> out;
  for_each_primitive_necklace(
      k, quotient_symmetry,
      [&](std::span<const std::uint8_t> w) {
        out.emplace_back(std::vector<std::uint8_t>(w.begin(), w.end()));
      },
      part);
  return out;
}

}  // namespace gasket
