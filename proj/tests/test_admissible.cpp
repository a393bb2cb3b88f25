#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "gasket/admissible.hpp"
#include "gasket/critical.hpp"
#include "gasket/error.hpp"

using namespace gasket;

namespace {

BinaryWord bw(const char* s) { return BinaryWord::parse(s); }

// Every word over Omega with d^1 = a, filtered by the direct checker.
std::vector<std::string> brute_force(const BinaryWord& a, bool positionwise = false) {
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) zeros.push_back(i);
  }
  std::vector<std::string> out;
  for (std::uint64_t mask = 0; mask < (1ULL << zeros.size()); ++mask) {
    std::vector<std::uint8_t> d(a.size(), 1);
    for (std::size_t j = 0; j < zeros.size(); ++j) d[zeros[j]] = (mask >> j) & 1 ? 2 : 0;
    const OmegaWord w(d);
    if (is_representation(w, a, positionwise)) out.push_back(w.str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> strings(const std::vector<AdmissibleWitness>& v) {
  std::vector<std::string> out;
  for (const auto& w : v) out.push_back(w.block.str());
  return out;
}

BinaryWord word_of(std::uint64_t bits, std::size_t n) {
  std::vector<std::uint8_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (bits >> (n - 1 - i)) & 1;
  return BinaryWord(d);
}

}  // namespace

TEST_CASE("the subshift X") {
  const SFTGraph x = sft_x();
  CHECK(x.states().size() == 4);
  CHECK(x.edges().size() == 6);
  CHECK(x.has_edge(bw("101"), bw("001")));
  CHECK(x.has_edge(bw("000"), bw("100")));
  CHECK_FALSE(x.has_edge(bw("101"), bw("100")));
  CHECK(x.in_factor_language(lambda_prefix(36)));
  CHECK(x.in_factor_language(lambda_prefix(96)));
  CHECK_FALSE(x.in_factor_language(bw("101100")));
  CHECK_THROWS_AS(x.in_factor_language(bw("1010")), Error);
  CHECK(x.edge_list().rfind("101 -> 001\n", 0) == 0);
}

TEST_CASE("Theta maps X onto itself") {
  const SFTGraph x = sft_x();
  for (const auto& [from, to] : x.edges()) {
    CHECK(x.has_edge(theta_block(x.states()[from]), theta_block(x.states()[to])));
  }
  for (std::uint64_t bits = 0; bits < (1ULL << 12); ++bits) {
    const BinaryWord w = word_of(bits, 12);
    bool ok = true;
    for (std::size_t i = 0; i < 12 && ok; i += 3) ok = x.state_index(w.slice(i, 3)).has_value();
    if (!ok) continue;
    CHECK(x.in_factor_language(w) == x.in_factor_language(theta_block(w)));
  }
}

TEST_CASE("block graph at level 0") {
  const SFTGraph g = block_graph(0);
  // L = 101, G = 000.
  CHECK(g.states()[0] == bw("101001"));
  CHECK(g.states()[1] == bw("101000"));
  CHECK(g.states()[2] == bw("000101"));
  CHECK(g.states()[3] == bw("000100"));
  CHECK(g.edges().size() == 6);
  CHECK(g.has_edge(bw("101001"), bw("000101")));
  CHECK_FALSE(g.has_edge(bw("000101"), bw("101001")));
  CHECK(block_graph(2).label_length() == 24);
  CHECK_THROWS_AS(block_graph(-1), Error);
}

TEST_CASE("worked example with two representations") {
  const auto reps = strings(representations(bw("110101000")));
  CHECK(reps.size() == 12);
  CHECK(std::find(reps.begin(), reps.end(), "112101202") != reps.end());
  CHECK(std::find(reps.begin(), reps.end(), "112121020") != reps.end());
  CHECK(reps == brute_force(bw("110101000")));
  CHECK(is_admissible(bw("110101000")).has_value());
}

TEST_CASE("small blocks") {
  CHECK_FALSE(is_admissible(bw("11")).has_value());
  const auto ten = strings(representations(bw("10")));
  REQUIRE(ten.size() == 1);
  CHECK(ten == brute_force(bw("10")));
  const auto w = is_admissible(bw("101001000"));
  REQUIRE(w.has_value());
  CHECK(w->block.str() == "121021020");
  CHECK(w->second == bw("010010010"));
  CHECK_FALSE(is_admissible(bw("101001001")).has_value());
  CHECK_FALSE(is_admissible(bw("101001000101001001")).has_value());
}

TEST_CASE("witness forcing and projections") {
  for (const char* a : {"110101000", "101001000", "10100100", "101001000100"}) {
    for (const AdmissibleWitness& w : representations(bw(a))) {
      const BinaryWord block = bw(a);
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (block[i] == 1) CHECK(w.block[i] == OmegaDigit::A1);
      }
      const Projections p = project(w.block);
      CHECK(p.first == block);
      CHECK(w.first == block);
      CHECK(p.second == w.second);
      CHECK(p.complement_sum == w.complement_sum);
      CHECK(smallest_period(w.block) == w.block.size());
    }
  }
}

TEST_CASE("search agrees with brute force on all short words") {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits) {
      const BinaryWord a = word_of(bits, n);
      CAPTURE(a.str());
      CHECK(strings(representations(a)) == brute_force(a));
    }
  }
  for (std::uint64_t bits = 0; bits < (1ULL << 8); ++bits) {
    const BinaryWord a = word_of(bits, 8);
    AdmissibilityOptions o;
    o.positionwise_chain = true;
    CHECK(strings(representations(a, o)) == brute_force(a, true));
  }
}

TEST_CASE("period blocks of critical bases are admissible") {
  for (std::uint64_t k = 2; k <= 14; ++k) {
    CAPTURE(k);
    const BinaryWord block = beta_k_sequence(k).period().repeat(k / beta_k_sequence(k).period().size());
    CHECK(is_admissible(block).has_value());
  }
}

TEST_CASE("parallel search collects in the same order") {
  AdmissibilityOptions serial, parallel;
  parallel.jobs = 3;
  for (const char* a : {"110101000", "101001000100100", "110100100100"}) {
    CHECK(strings(representations(bw(a), serial)) == strings(representations(bw(a), parallel)));
  }
}

TEST_CASE("caps") {
  AdmissibilityOptions o;
  o.max_zeros = 4;
  CHECK_THROWS_AS(representations(bw("1000001"), o), Error);
  CHECK_THROWS_AS(verify_key_proposition(8), Error);
  CHECK_THROWS_AS(verify_dichotomy(4, 4), Error);
}

TEST_CASE("forcing reports") {
  const Report kp = verify_key_proposition(15);
  CHECK(kp.ok());
  for (int m = 1; m <= 3; ++m) CHECK(verify_dichotomy(4, m).ok());
}
