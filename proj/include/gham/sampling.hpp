#ifndef GHAM_SAMPLING_HPP
#define GHAM_SAMPLING_HPP

#include "gham/skeleton.hpp"
#include "gham/step_graphon.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gham {

// Identifies one reproducible random stream: every (master_seed, trial_index)
// pair gives an independent deterministic sequence on any machine.
struct RngSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;
};

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

std::uint64_t stream_seed(const RngSpec& spec);

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

 private:
  std::uint64_t state_;
};

// ceil(r * 2^64) for r in [0,1]; a 64-bit draw U hits iff U/2^64 < r.
unsigned __int128 scale_threshold(const Rational& r);

// Cumulative thresholds of the partition points; a draw U lands in block i
// iff thresholds[i] <= U < thresholds[i+1], which matches the exact rational
// comparison sigma_i <= U/2^64 < sigma_{i+1}.
std::vector<unsigned __int128> partition_thresholds(const Partition& partition);

int block_from_draw(const std::vector<unsigned __int128>& thresholds, std::uint64_t u);

struct SampledDigraph {
  int n = 0;
  int block_count = 0;
  std::vector<int> block_of;               // node -> block
  std::vector<std::pair<int, int>> edges;  // ordered pairs of distinct nodes, lexicographic
};

struct SampledGraph {
  int n = 0;
  int block_count = 0;
  std::vector<int> block_of;
  std::vector<std::pair<int, int>> edges;  // unordered pairs stored (i, j) with i < j
};

// Assign each node a block by one uniform draw, then draw each ordered pair
// of distinct nodes independently with the block-pair probability. Nodes are
// drawn in index order, pairs in lexicographic order, one draw each.
SampledDigraph sample_directed(const StepGraphon& w, int n, const RngSpec& rng);

// Same for unordered pairs; requires a symmetric graphon.
SampledGraph sample_undirected(const StepGraphon& ws, int n, const RngSpec& rng);

// Orient each undirected edge by the skeleton support: one direction when
// only one of the two block edges exists, both when both exist. Throws when
// an edge's block pair is unsupported.
SampledDigraph orient_symmetric(const SampledGraph& g, const SkeletonGraph& s);

// Drop every edge whose block pair is bidirectional in s but whose reverse
// edge is missing.
SampledDigraph trim_digraph(const SampledDigraph& g, const SkeletonGraph& s);

// Block counts divided by n; throws for n = 0.
std::vector<Rational> empirical_concentration(const SampledDigraph& g);

struct DegreePairReport {
  int block_a = 0;
  int block_b = 0;
  Rational min_ratio_ab;  // min over a in A of e(a,B)/|B|
  Rational min_ratio_ba;  // min over b in B of e(b,A)/|A|
  bool passes = false;    // both ratios strictly above delta
};

struct DegreeRegularityReport {
  std::vector<DegreePairReport> pairs;
  bool all_pass = true;
};

// Minimum cross-degree ratios for every skeleton-supported block pair of an
// undirected sample. Diagnostic only. Throws when a block is empty.
DegreeRegularityReport degree_regularity_report(const SampledGraph& g, const SkeletonGraph& s,
                                                const Rational& delta);

}  // namespace gham

#endif
