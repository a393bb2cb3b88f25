#pragma once

#include <cstddef>

namespace gasket {

// Process-wide limits. Every search or construction that can blow up
// exponentially takes one of these as its ceiling.
struct Config {
  int max_t_index = 24;          // t_n is built for n <= this
  int max_oracle_k = 16;         // brute-force oracle ceiling
  int max_representation_zeros = 24;
  int max_beta_c_level = 8;      // deepest rho/hat-beta level for the beta_c sandwich
  int max_sharkovskii_index = 64;
  std::size_t quasi_greedy_horizon = 4096;
  unsigned jobs = 1;
  bool quotient_symmetry = true;
  bool positionwise_chain = false;  // admissibility chain read digit by digit

  // Defaults with GASKET_MAX_ORACLE_K applied when set.
  static Config from_environment();
};

}  // namespace gasket
