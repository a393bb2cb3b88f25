#pragma once

// The coding alphabet {alpha0=(0,0), alpha1=(1,0), alpha2=(0,1)}, its binary
// projections, the symmetry maps, the words u_n and primitive-necklace
// enumeration.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gasket/words.hpp"

namespace gasket {

enum class OmegaDigit : std::uint8_t { A0 = 0, A1 = 1, A2 = 2 };

class OmegaWord {
 public:
  OmegaWord() = default;
  explicit OmegaWord(std::vector<std::uint8_t> digits);
  OmegaWord(std::initializer_list<int> digits);

  // Digits written as '0', '1', '2' for alpha0, alpha1, alpha2.
  static OmegaWord parse(std::string_view text);

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  OmegaDigit operator[](std::size_t i) const { return static_cast<OmegaDigit>(digits_[i]); }
  std::span<const std::uint8_t> digits() const { return digits_; }

  OmegaWord rotated(std::size_t j) const;
  OmegaWord repeat(std::size_t times) const;
  std::string str() const;

  friend OmegaWord operator+(const OmegaWord& a, const OmegaWord& b);
  bool operator==(const OmegaWord&) const = default;

 private:
  std::vector<std::uint8_t> digits_;
};

std::ostream& operator<<(std::ostream& os, const OmegaWord& w);

// (d^1, d^2, reflection(d^+)); the three words sum digit-wise to 1.
struct Projections {
  BinaryWord first;
  BinaryWord second;
  BinaryWord complement_sum;
};

Projections project(const OmegaWord& w);

// theta: a0 -> a1 -> a2 -> a0.
OmegaWord theta_perm(const OmegaWord& w);
// Phi: the coordinate swap a1 <-> a2.
OmegaWord phi_perm(const OmegaWord& w);

// u_0 = a0, u_1 = a1 a0 a2, u_{n+1} = u_n' Phi(u_n') where u_n' has its last
// digit replaced by a1.
OmegaWord u_word(int n);

std::size_t smallest_period(const OmegaWord& w);

// Eventually periodic Omega-sequence in canonical form.
class OmegaEPSeq {
 public:
  OmegaEPSeq(OmegaWord preperiod, OmegaWord period);
  static OmegaEPSeq periodic(OmegaWord period);
  // Grammar: [012]* "(" [012]+ ")^" ("∞" | "inf")
  static OmegaEPSeq parse(std::string_view text);

  const OmegaWord& preperiod() const { return pre_; }
  const OmegaWord& period() const { return per_; }
  OmegaDigit at(std::size_t i) const;
  std::string str() const;
  bool operator==(const OmegaEPSeq&) const = default;

 private:
  OmegaWord pre_;
  OmegaWord per_;
};

// Disjoint slice of the enumeration: the subtree of words whose first few
// digits, read as a base-3 number, are congruent to index mod count.
struct NecklacePartition {
  unsigned index = 0;
  unsigned count = 1;
};

// Visits, in a fixed order, one rotation-canonical representative (the least
// rotation under the internal digit order) of every aperiodic word in
// Omega^k. With quotient_symmetry only the representative that is least over
// its orbit under all six alphabet permutations is visited.
void for_each_primitive_necklace(int k, bool quotient_symmetry,
                                 const std::function<void(std::span<const std::uint8_t>)>& visit,
                                 NecklacePartition part = {});

std::vector<OmegaWord> enumerate_primitive_necklaces(int k, bool quotient_symmetry,
                                                     NecklacePartition part = {});

// True when w is least (internal order) among the rotation-canonical forms
// of its six alphabet-permuted images. w must already be rotation-canonical.
bool is_symmetry_minimal(std::span<const std::uint8_t> w);

}  // namespace gasket
