#include "gasket/admissible.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <thread>

#include "gasket/error.hpp"

namespace gasket {

namespace {

BinaryWord block(const char* s) { return BinaryWord::parse(s); }

AdmissibleWitness make_witness(OmegaWord d) {
  Projections p = project(d);
  return {std::move(d), std::move(p.first), std::move(p.second), std::move(p.complement_sum)};
}

// Depth-first search over the choice alpha0/alpha2 at each zero of a,
// pruning as soon as a rotation of d^2 or reflection(d^+) exceeds a on the
// digits placed so far.
class RepresentationSearch {
 public:
  RepresentationSearch(const BinaryWord& a, bool positionwise) : a_(a), k_(a.size()), positionwise_(positionwise) {
    for (std::size_t i = 0; i < k_; ++i) {
      if (a_[i] == 0) zero_index_.push_back(i);
    }
    s_.assign(k_, 0);
    c_.assign(k_, 0);
  }

  std::size_t zeros() const { return zero_index_.size(); }

  // Visits the subtree whose first `forced_count` zero choices are the bits
  // of `forced` (bit t set: alpha2 at the t-th zero). Stops after the first
  // result when first_only.
  void run(std::uint64_t forced, std::size_t forced_count, bool first_only, std::vector<OmegaWord>& out) {
    forced_ = forced;
    forced_count_ = forced_count;
    first_only_ = first_only;
    out_ = &out;
    dfs(0, 0, 0, 0, true);
  }

 private:
  static bool advance(std::uint64_t& ties, const std::uint8_t* x, const BinaryWord& a, std::size_t i) {
    for (std::uint64_t t = ties; t; t &= t - 1) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(t));
      const std::uint8_t ref = a[i - j];
      if (x[i] > ref) return false;
      if (x[i] < ref) ties &= ~(std::uint64_t{1} << j);
    }
    return true;
  }

  // Rotations still tied at the end continue through the wrap-around.
  bool wraps_ok(std::uint64_t ties, const std::vector<std::uint8_t>& x) const {
    for (std::uint64_t t = ties; t; t &= t - 1) {
      const std::size_t j = static_cast<std::size_t>(std::countr_zero(t));
      for (std::size_t i = 0; i < j; ++i) {
        const std::uint8_t ref = a_[k_ - j + i];
        if (x[i] > ref) return false;
        if (x[i] < ref) break;
      }
    }
    return true;
  }

  bool dfs(std::size_t i, std::size_t zi, std::uint64_t tie_s, std::uint64_t tie_c, bool tie_chain) {
    if (i == k_) {
      if (!wraps_ok(tie_s, s_) || !wraps_ok(tie_c, c_)) return false;
      std::vector<std::uint8_t> d(k_);
      for (std::size_t p = 0; p < k_; ++p) d[p] = a_[p] ? 1 : (s_[p] ? 2 : 0);
      OmegaWord w(std::move(d));
      if (smallest_period(w) != k_) return false;
      out_->push_back(std::move(w));
      return first_only_;
    }
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (a_[i] == 1) return place(i, zi, 0, 0, tie_s | bit, tie_c | bit, tie_chain);
    const int lo = zi < forced_count_ ? static_cast<int>((forced_ >> zi) & 1) : 0;
    const int hi = zi < forced_count_ ? lo : 1;
    for (int choice = lo; choice <= hi; ++choice) {
      // choice 0: alpha0 (d^2 = 0, reflected d^+ = 1); choice 1: alpha2.
      if (place(i, zi + 1, choice, 1 - choice, tie_s | bit, tie_c | bit, tie_chain)) return true;
    }
    return false;
  }

  bool place(std::size_t i, std::size_t zi, int sv, int cv, std::uint64_t tie_s, std::uint64_t tie_c, bool tie_chain) {
    s_[i] = static_cast<std::uint8_t>(sv);
    c_[i] = static_cast<std::uint8_t>(cv);
    if (positionwise_ && (cv > sv || sv > a_[i])) return false;
    if (tie_chain) {
      if (cv > sv) return false;
      if (cv < sv) tie_chain = false;
    }
    if (!advance(tie_s, s_.data(), a_, i) || !advance(tie_c, c_.data(), a_, i)) return false;
    return dfs(i + 1, zi, tie_s, tie_c, tie_chain);
  }

  const BinaryWord& a_;
  std::size_t k_;
  bool positionwise_;
  std::vector<std::size_t> zero_index_;
  std::vector<std::uint8_t> s_, c_;
  std::uint64_t forced_ = 0;
  std::size_t forced_count_ = 0;
  bool first_only_ = false;
  std::vector<OmegaWord>* out_ = nullptr;
};

bool rotations_dominated(const BinaryWord& x, const BinaryWord& a) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (compare_words(x.rotated(j), a) == Ordering::Greater) return false;
  }
  return true;
}

std::vector<OmegaWord> search(const BinaryWord& a, const AdmissibilityOptions& opts, bool first_only) {
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "block must be nonempty");
  if (a.size() > 64) throw Error(ErrorCode::CapExceeded, "blocks longer than 64 are not searched");
  const std::size_t zeros = a.size() - a.count_ones();
  if (zeros > static_cast<std::size_t>(opts.max_zeros)) {
    throw Error(ErrorCode::CapExceeded,
                "block has " + std::to_string(zeros) + " zeros; cap is " + std::to_string(opts.max_zeros));
  }
  // d^1 = a, so a itself must dominate its rotations.
  if (!rotations_dominated(a, a)) return {};

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || zeros < 4) {
    std::vector<OmegaWord> out;
    RepresentationSearch(a, opts.positionwise_chain).run(0, 0, first_only, out);
    return out;
  }
  // Fixed split of the choice tree; subtree results are concatenated in
  // subtree order, which is the sequential order.
  const std::size_t depth = std::min<std::size_t>(zeros, 6);
  const std::size_t parts = std::size_t{1} << depth;
  std::vector<std::vector<OmegaWord>> results(parts);
  auto work = [&](unsigned t) {
    RepresentationSearch s(a, opts.positionwise_chain);
    for (std::size_t code = t; code < parts; code += jobs) {
      // Bit t of the forced code is the t-th zero; reverse so that code
      // order matches depth-first order.
      std::uint64_t forced = 0;
      for (std::size_t b = 0; b < depth; ++b) forced |= ((code >> (depth - 1 - b)) & 1) << b;
      s.run(forced, depth, first_only, results[code]);
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work, t);
  for (auto& th : threads) th.join();
  std::vector<OmegaWord> out;
  for (auto& r : results) {
    for (auto& w : r) {
      out.push_back(std::move(w));
      if (first_only) return out;
    }
  }
  return out;
}

BinaryWord bits_word(std::uint64_t bits, std::size_t n) {
  std::vector<std::uint8_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (bits >> (n - 1 - i)) & 1;
  return BinaryWord(std::move(d));
}

}  // namespace

SFTGraph::SFTGraph(std::vector<BinaryWord> states, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : states_(std::move(states)), edges_(std::move(edges)) {
  if (states_.empty()) throw Error(ErrorCode::InvalidArgument, "graph needs at least one state");
  for (const auto& s : states_) {
    if (s.size() != states_.front().size() || s.empty()) {
      throw Error(ErrorCode::InvalidArgument, "state labels must share one positive length");
    }
  }
  for (const auto& [f, t] : edges_) {
    if (f >= states_.size() || t >= states_.size()) throw Error(ErrorCode::InvalidArgument, "edge references no state");
  }
}

std::optional<std::size_t> SFTGraph::state_index(const BinaryWord& label) const {
  const auto it = std::find(states_.begin(), states_.end(), label);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

bool SFTGraph::has_edge(const BinaryWord& from, const BinaryWord& to) const {
  const auto f = state_index(from), t = state_index(to);
  if (!f || !t) return false;
  return std::find(edges_.begin(), edges_.end(), std::make_pair(*f, *t)) != edges_.end();
}

bool SFTGraph::in_factor_language(const BinaryWord& w) const {
  const std::size_t L = label_length();
  if (w.size() % L != 0) {
    throw Error(ErrorCode::InvalidArgument, "word length must be a multiple of " + std::to_string(L));
  }
  std::optional<std::size_t> prev;
  for (std::size_t i = 0; i < w.size(); i += L) {
    const auto cur = state_index(w.slice(i, L));
    if (!cur) return false;
    if (prev && std::find(edges_.begin(), edges_.end(), std::make_pair(*prev, *cur)) == edges_.end()) return false;
    prev = cur;
  }
  return true;
}

std::string SFTGraph::edge_list() const {
  std::ostringstream os;
  for (const auto& [f, t] : edges_) os << states_[f] << " -> " << states_[t] << '\n';
  return os.str();
}

SFTGraph sft_x() {
  // 0: 000, 1: 001, 2: 100, 3: 101
  return SFTGraph({block("000"), block("001"), block("100"), block("101")},
                  {{3, 1}, {3, 0}, {2, 3}, {1, 0}, {0, 3}, {0, 2}});
}

SFTGraph block_graph(int n) {
  if (n < 0 || n > 20) throw Error(ErrorCode::CapExceeded, "block graph level must lie in 0..20");
  const BinaryWord lam = lambda_prefix(3u << n);
  const BinaryWord gam = theta_block(lam);
  // 0: L G^+, 1: L G, 2: G L, 3: G L^-
  return SFTGraph({lam + plus(gam), lam + gam, gam + lam, gam + minus(lam)},
                  {{0, 2}, {0, 3}, {1, 0}, {2, 3}, {3, 0}, {3, 1}});
}

bool is_representation(const OmegaWord& d, const BinaryWord& a, bool positionwise_chain) {
  if (d.size() != a.size() || d.empty() || smallest_period(d) != d.size()) return false;
  const Projections p = project(d);
  if (p.first != a) return false;
  if (positionwise_chain) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (p.complement_sum[i] > p.second[i] || p.second[i] > p.first[i]) return false;
    }
  }
  if (compare_words(p.complement_sum, p.second) == Ordering::Greater) return false;
  if (compare_words(p.second, p.first) == Ordering::Greater) return false;
  return rotations_dominated(p.first, a) && rotations_dominated(p.second, a) && rotations_dominated(p.complement_sum, a);
}

std::optional<AdmissibleWitness> is_admissible(const BinaryWord& a, const AdmissibilityOptions& opts) {
  auto found = search(a, opts, true);
  if (found.empty()) return std::nullopt;
  return make_witness(std::move(found.front()));
}

std::vector<AdmissibleWitness> representations(const BinaryWord& a, const AdmissibilityOptions& opts) {
  std::vector<AdmissibleWitness> out;
  for (auto& d : search(a, opts, false)) out.push_back(make_witness(std::move(d)));
  return out;
}

Report verify_key_proposition(int k_max, const AdmissibilityOptions& opts) {
  // 101001000 carries three ones, so k_max <= 27 keeps every block within
  // the zero cap.
  if (k_max < 9 || k_max > 27) throw Error(ErrorCode::CapExceeded, "k_max must lie in 9..27");
  Report r{"key proposition: admissible blocks starting with 101001000", {}};
  const BinaryWord head = block("101001000");
  const SFTGraph x = sft_x();
  for (int k = 9; k <= k_max; ++k) {
    const std::size_t free = static_cast<std::size_t>(k) - head.size();
    const std::size_t l = static_cast<std::size_t>(k) / 3;
    std::size_t blocks = 0, reps = 0, violations = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free); ++bits) {
      const BinaryWord a = head + bits_word(bits, free);
      if (!rotations_dominated(a, a)) continue;
      const auto rs = representations(a, opts);
      if (rs.empty()) continue;
      ++blocks;
      reps += rs.size();
      const BinaryWord a3 = a.prefix(3 * l);
      if (!x.in_factor_language(a3)) {
        ++violations;
        r.add(a.str(), false, "prefix of length " + std::to_string(3 * l) + " is not a path of X");
        continue;
      }
      const BinaryWord want2 = block("010").repeat(l);
      const BinaryWord wantc = theta_block(a3);
      for (const auto& w : rs) {
        if (w.second.prefix(3 * l) != want2 || w.complement_sum.prefix(3 * l) != wantc) {
          ++violations;
          r.add(a.str(), false, "representation " + w.block.str() + " is not forced");
        }
      }
    }
    r.add("k=" + std::to_string(k), violations == 0,
          std::to_string(blocks) + " admissible blocks, " + std::to_string(reps) + " representations");
  }
  return r;
}

Report verify_dichotomy(int l, int m, const AdmissibilityOptions& opts) {
  if (l < 4 || l > 7) throw Error(ErrorCode::CapExceeded, "l must lie in 4..7");
  if (m < 1 || m > l - 1) throw Error(ErrorCode::InvalidArgument, "m must lie in 1..l-1");
  Report r{"dichotomy for blocks of length 3l+2 starting with 101(001)^(m-1)000", {}};
  const BinaryWord head = block("101") + block("001").repeat(static_cast<std::size_t>(m - 1)) + block("000");
  const std::size_t k = 3 * static_cast<std::size_t>(l) + 2;
  const std::size_t free = k - head.size();
  const std::size_t n = 3 * static_cast<std::size_t>(m) + 3;
  const BinaryWord target = block("010").repeat(static_cast<std::size_t>(m) + 1);
  std::size_t blocks = 0, reps = 0, violations = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free); ++bits) {
    const BinaryWord a = head + bits_word(bits, free);
    if (!rotations_dominated(a, a)) continue;
    const auto rs = representations(a, opts);
    if (rs.empty()) continue;
    ++blocks;
    reps += rs.size();
    for (const auto& w : rs) {
      if (w.second.prefix(n) != target && w.complement_sum.prefix(n) != target) {
        ++violations;
        r.add(a.str(), false, "representation " + w.block.str() + " breaks the dichotomy");
      }
    }
  }
  r.add("l=" + std::to_string(l) + ", m=" + std::to_string(m), violations == 0,
        std::to_string(blocks) + " admissible blocks, " + std::to_string(reps) + " representations");
  return r;
}

}  // namespace gasket
