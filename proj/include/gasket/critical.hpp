#pragma once

// The critical bases beta_k: closed forms, the brute-force oracle over
// primitive necklaces, the Sharkovskii comparison and the verification
// reports built on them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gasket/algebraic.hpp"
#include "gasket/config.hpp"
#include "gasket/omega.hpp"
#include "gasket/report.hpp"
#include "gasket/words.hpp"

namespace gasket {

enum class Provenance { ClosedForm, Oracle };
const char* to_string(Provenance p) noexcept;

struct CriticalBaseRecord {
  std::uint64_t k = 0;
  EPSeq delta;
  IntPolynomial poly;
  AlgebraicReal value;
  Provenance provenance = Provenance::ClosedForm;
  // k = 1: beta_1 = 1 with delta = 0^inf by convention. Not an element of
  // (1, 2]; keep it out of comparisons.
  bool sentinel = false;
  std::optional<OmegaWord> witness;  // oracle only: least minimizing necklace
};

struct SharkovskiiKey {
  std::uint64_t odd_part;
  unsigned two_exponent;
};

SharkovskiiKey sharkovskii_key(std::uint64_t k);
// Greater when k comes before l in 3 > 5 > 7 > ... > 2*3 > 2*5 > ... > 4 > 2 > 1.
Ordering sharkovskii_compare(std::uint64_t k, std::uint64_t l);

// delta(beta_k) as a closed form; k >= 1.
EPSeq beta_k_sequence(std::uint64_t k);
CriticalBaseRecord beta_k_closed_form(std::uint64_t k);

struct OracleOptions {
  std::uint64_t budget = 0;  // candidates to visit; 0 means unlimited
  unsigned jobs = 1;
  bool quotient_symmetry = true;
  int max_k = 16;
  static OracleOptions from_config(const Config& c);
};

struct OracleStats {
  std::uint64_t visited = 0;
  std::uint64_t abandoned = 0;
};

// Minimum of hat_sequence over all aperiodic words of length k. CapExceeded
// outside 2..max_k, BudgetExceeded when the budget runs out. The result is
// the same for every job count.
CriticalBaseRecord beta_k_oracle(int k, const OracleOptions& opts = {}, OracleStats* stats = nullptr);

// beta_{3k} > beta_{3l} iff k comes before l, for all k < l <= max_index.
Report verify_sharkovskii_theorem(int max_index);
// delta(beta_{6m+4}) == delta(beta_{3m+2}) for m = 0..max_m.
Report verify_identity_6m4(int max_m);
// Monotone limits of the three families; order checks exact, gaps numeric
// against the given tolerances.
Report asymptotics_report(int l_max, int n_max, int m_max, double gap_a = 1e-5, double gap_hat = 1e-4);
// beta_k_oracle(k) == beta_k_closed_form(k) for k = 2..k_max.
Report verify_oracle_against_closed_form(int k_max, const OracleOptions& opts = {});

}  // namespace gasket
