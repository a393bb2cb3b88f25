#pragma once

// Admissible blocks and their representations, the subshift X on the
// 3-blocks {000, 001, 100, 101}, the block graph on lambda/gamma blocks, and
// exhaustive checks of the forcing results for admissible blocks that start
// like lambda.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gasket/omega.hpp"
#include "gasket/report.hpp"
#include "gasket/words.hpp"

namespace gasket {

class SFTGraph {
 public:
  SFTGraph(std::vector<BinaryWord> states, std::vector<std::pair<std::size_t, std::size_t>> edges);

  const std::vector<BinaryWord>& states() const { return states_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t label_length() const { return states_.front().size(); }

  std::optional<std::size_t> state_index(const BinaryWord& label) const;
  bool has_edge(const BinaryWord& from, const BinaryWord& to) const;
  // w read as consecutive labels must be a path. InvalidArgument when |w|
  // is not a multiple of the label length.
  bool in_factor_language(const BinaryWord& w) const;
  // One "from -> to" line per edge.
  std::string edge_list() const;

 private:
  std::vector<BinaryWord> states_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// States 000, 001, 100, 101; edges 101->001, 101->000, 100->101, 001->000,
// 000->101, 000->100.
SFTGraph sft_x();
// With L = lambda_1..lambda_{3*2^n} and G = Theta(L): states L G^+, L G,
// G L, G L^-; edges LG+ -> GL, LG+ -> GL-, LG -> LG+, GL -> GL-, GL- -> LG+,
// GL- -> LG.
SFTGraph block_graph(int n);

struct AdmissibleWitness {
  OmegaWord block;
  BinaryWord first;           // d^1, equal to the block a
  BinaryWord second;          // d^2
  BinaryWord complement_sum;  // reflection(d^+)
};

struct AdmissibilityOptions {
  // Read the chain reflection(d^+) <= d^2 <= d^1 digit by digit instead of
  // as words. Off by default.
  bool positionwise_chain = false;
  unsigned jobs = 1;
  int max_zeros = 24;
};

// Direct check that d is a representation of a: aperiodic, d^1 = a, the
// chain, and every cyclic rotation of the three projections <= a.
bool is_representation(const OmegaWord& d, const BinaryWord& a, bool positionwise_chain = false);

// Positions with a_i = 1 carry alpha1; each 0 is alpha0 or alpha2. The tree
// of 2^zeros choices is searched with prefix pruning. CapExceeded past
// max_zeros zeros or length 64.
std::optional<AdmissibleWitness> is_admissible(const BinaryWord& a, const AdmissibilityOptions& opts = {});
// Every representation, in increasing order of the block (alpha0 < alpha2).
std::vector<AdmissibleWitness> representations(const BinaryWord& a, const AdmissibilityOptions& opts = {});

// For every admissible a with 9 <= |a| <= k_max starting with 101001000 and
// l = floor(|a|/3): a_1..a_3l lies in the factor language of X, and every
// representation has d^2 = (010)^l and reflection(d^+) = Theta(a_1..a_3l)
// on the first 3l positions. 9 <= k_max <= 27.
Report verify_key_proposition(int k_max, const AdmissibilityOptions& opts = {});
// For every admissible a of length 3l+2 starting with 101(001)^(m-1)000,
// every representation has d^2 or reflection(d^+) equal to (010)^(m+1) on
// the first 3m+3 positions. 4 <= l <= 7, 1 <= m <= l-1.
Report verify_dichotomy(int l, int m, const AdmissibilityOptions& opts = {});

}  // namespace gasket
