#pragma once

// Lexicographic tests for membership of a coding in the univoque coding set
// U_beta. Every inequality is strict. The same criterion is applied at
// beta = 2, where delta(2) = 1^inf.

#include <cstddef>
#include <optional>

#include "gasket/algebraic.hpp"
#include "gasket/omega.hpp"
#include "gasket/words.hpp"

namespace gasket {

enum class Projection { First, Second, ComplementSum };
const char* to_string(Projection p) noexcept;

struct ShiftWitness {
  Projection projection;
  std::size_t shift;
};

struct MembershipVerdict {
  bool member;
  std::optional<ShiftWitness> violating_shift;  // set iff !member
};

struct HatSequence {
  EPSeq value;
  ShiftWitness argmax;  // first (projection, shift) attaining the maximum
};

// Largest of the 3k shifted periodic projections of d^inf. d must have
// length k and smallest period k (NotPrimitive otherwise).
EPSeq hat_sequence(const OmegaWord& d, std::size_t k);
HatSequence hat_sequence_with_witness(const OmegaWord& d, std::size_t k);

// d^inf is in U_beta iff hat(d) < delta(beta). When delta(beta) does not
// close up within `horizon` digits and the prefix does not decide the order,
// throws UndecidedAtHorizon.
MembershipVerdict in_U_beta_periodic(const OmegaWord& d, std::size_t k, const AlgebraicReal& beta,
                                     std::size_t horizon = 4096);
MembershipVerdict in_U_beta_periodic(const OmegaWord& d, std::size_t k, const EPSeq& delta);

// Guarded conditions for n >= 1:
//   d_n^1 = 0  =>  sigma^n(d^1) < delta
//   d_n^2 = 0  =>  sigma^n(d^2) < delta
//   d_n^+ = 1  =>  sigma^n(reflection(d^+)) < delta
// checked for n up to preperiod + period. The violating shift reported is n.
MembershipVerdict in_U_beta_general(const OmegaEPSeq& d, const AlgebraicReal& beta,
                                    std::size_t horizon = 4096);
MembershipVerdict in_U_beta_general(const OmegaEPSeq& d, const EPSeq& delta);

}  // namespace gasket
