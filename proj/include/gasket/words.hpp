#pragma once

// Finite binary words and eventually periodic binary sequences, ordered
// lexicographically, together with the block maps and named sequences built
// on them (t_n, lambda, Thue-Morse, xi_k).

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gasket {

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

inline Ordering reverse(Ordering o) {
  return static_cast<Ordering>(-static_cast<int>(o));
}
const char* to_string(Ordering o) noexcept;

class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> digits);
  BinaryWord(std::initializer_list<int> digits);

  // Accepts a string of '0' and '1'.
  static BinaryWord parse(std::string_view text);

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return digits_[i]; }
  std::uint8_t back() const { return digits_.back(); }
  std::span<const std::uint8_t> digits() const { return digits_; }

  BinaryWord prefix(std::size_t n) const;
  BinaryWord slice(std::size_t from, std::size_t count) const;
  BinaryWord repeat(std::size_t times) const;
  BinaryWord rotated(std::size_t j) const;  // d_{j+1}...d_k d_1...d_j
  std::size_t count_ones() const;

  std::string str() const;

  friend BinaryWord operator+(const BinaryWord& a, const BinaryWord& b);
  bool operator==(const BinaryWord&) const = default;

 private:
  std::vector<std::uint8_t> digits_;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

// Word order: c < d iff c0^inf < d0^inf.
Ordering compare_words(const BinaryWord& a, const BinaryWord& b);

BinaryWord reflection(const BinaryWord& w);
// c^+ flips a final 0 to 1; c^- flips a final 1 to 0.
BinaryWord plus(const BinaryWord& w);
BinaryWord minus(const BinaryWord& w);
// Blockwise 000<->101, 001<->100.
BinaryWord theta_block(const BinaryWord& w);

// t_1 = 100, t_{n+1} = t_n^+ Theta(t_n^+); |t_n| = 3*2^(n-1).
BinaryWord t_word(int n, int max_index = 24);
// First n digits of lambda = lim t_n.
BinaryWord lambda_prefix(std::size_t n, int max_index = 24);
// tau_0 ... tau_{n-1}, tau_0 = 0.
BinaryWord thue_morse(std::size_t n);
// lambda_{3i+1} = tau_{2i+1}, lambda_{3i+2} = 0, lambda_{3i+3} = tau_{2i+2}
// for every 0 <= i < n.
bool check_tm_relation(std::size_t n);

// Smallest p dividing |w| with w = (w_1..w_p)^(|w|/p).
std::size_t primitive_root_length(std::span<const std::uint8_t> w);

// An eventually periodic sequence preperiod (period)^inf, always held in
// canonical form: primitive period, shortest preperiod.
class EPSeq {
 public:
  EPSeq(BinaryWord preperiod, BinaryWord period);
  static EPSeq periodic(BinaryWord period);
  // Grammar: [01]* "(" [01]+ ")^" ("∞" | "inf")
  static EPSeq parse(std::string_view text);

  const BinaryWord& preperiod() const { return pre_; }
  const BinaryWord& period() const { return per_; }
  bool purely_periodic() const { return pre_.empty(); }
  bool ends_in_zeros() const { return per_.size() == 1 && per_[0] == 0; }
  bool is_zero() const { return pre_.empty() && ends_in_zeros(); }

  std::uint8_t at(std::size_t i) const;  // 0-based digit index
  BinaryWord prefix(std::size_t n) const;
  EPSeq shifted(std::size_t n) const;

  std::string str() const;
  bool operator==(const EPSeq&) const = default;

 private:
  BinaryWord pre_;
  BinaryWord per_;
};

std::ostream& operator<<(std::ostream& os, const EPSeq& s);

// Exact order of the two infinite sequences. Decided within
// max(preperiods) + |p| + |q| - gcd(|p|,|q|) digits (Fine-Wilf).
Ordering lex_compare(const EPSeq& a, const EPSeq& b);
std::size_t comparison_horizon(const EPSeq& a, const EPSeq& b);

// Compares the first |w| digits of s with w. Empty result when they agree,
// i.e. the prefix does not decide the order of s against any extension of w.
std::optional<Ordering> compare_with_prefix(const EPSeq& s,
                                            const BinaryWord& w);

// xi_k for k = (2m+1)2^n, built from the Thue-Morse sequence.
EPSeq xi(std::uint64_t k);

}  // namespace gasket
