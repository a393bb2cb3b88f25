#pragma once

// Quasi-greedy expansions of 1, the inverse map delta^-1, Parry validity and
// the named bases rho_n, hat-beta_n, beta_a, beta_* and the beta_c bracket.

#include <gmpxx.h>

#include <cstddef>
#include <optional>

#include "gasket/algebraic.hpp"
#include "gasket/words.hpp"

namespace gasket {

struct QuasiGreedyExpansion {
  BinaryWord prefix;            // every digit computed
  std::optional<EPSeq> digits;  // set when the remainder orbit closed up
  bool undetermined_tail() const { return !digits.has_value(); }
};

// First n digits of delta(beta) for beta in (1, 2].
BinaryWord quasi_greedy(const AlgebraicReal& beta, std::size_t n);
// Runs until a remainder repeats (exact test) or the horizon is reached.
QuasiGreedyExpansion delta_expansion(const AlgebraicReal& beta, std::size_t horizon = 4096);

// Not ending in 0^inf and every shift <= s.
bool is_parry_valid(const EPSeq& s);

// The unique beta in (1, 2] with delta(beta) = s. NotParryValid otherwise.
AlgebraicReal delta_inverse(const EPSeq& s);

// delta(rho_n) = t_n^inf.
AlgebraicReal rho(int n);
// delta(hat-beta_n) = t_{n+2}^+ Theta(t_{n+2})^inf.
EPSeq hat_beta_sequence(int n);
AlgebraicReal hat_beta(int n);
// delta(beta_a) = 101(001)^inf.
EPSeq beta_a_sequence();
AlgebraicReal beta_a();
// Root of x^3 - 2x^2 + 2x - 2.
AlgebraicReal beta_star();

struct RationalInterval {
  mpq_class lo;
  mpq_class hi;
  int level = 0;  // n used in rho_n < beta_c < hat-beta_n
  mpq_class width() const { return hi - lo; }
  bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
};

// [rho_level, hat-beta_level] with each end enclosed to within precision.
RationalInterval beta_c_bracket(int level, const mpq_class& precision);

// Interval of width <= `width` containing beta_c, from the sandwich
// rho_n < beta_c < hat-beta_n. WidthNotReached past max_level.
RationalInterval approx_beta_c(const mpq_class& width, int max_level = 8);

// Smallest purely periodic Parry-valid sequence strictly above s among all
// periods up to max_period; empty when there is none.
std::optional<EPSeq> next_parry_valid_above(const EPSeq& s, std::size_t max_period);

}  // namespace gasket
