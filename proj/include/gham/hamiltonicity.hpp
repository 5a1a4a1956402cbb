#ifndef GHAM_HAMILTONICITY_HPP
#define GHAM_HAMILTONICITY_HPP

#include "gham/sampling.hpp"
#include "gham/skeleton.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gham {

// Nonnegative integer matrix supported on skeleton edges with equal row and
// column sums (a balanced edge flow).
struct FlowMatrix {
  int m = 0;
  std::vector<std::vector<long long>> a;

  std::vector<long long> row_sums() const;
  std::vector<long long> col_sums() const;
};

enum class WitnessKind { Decomposition, Cycle };

// Node-disjoint directed cycles covering every node of the host graph; for
// kind Cycle there is exactly one.
struct HamWitness {
  WitnessKind kind = WitnessKind::Decomposition;
  std::vector<std::vector<int>> cycles;
};

// Spanning disjoint cycle cover, decided by bipartite perfect matching
// between out-copies and in-copies of the nodes.
std::optional<HamWitness> has_ham_decomposition(const SampledDigraph& g);

// Exhaustive permutation search; n <= 10 only.
bool brute_force_ham_decomposition(const SampledDigraph& g);

enum class CycleSearchStatus { Found, Absent, Unknown };

struct CycleSearchResult {
  CycleSearchStatus status = CycleSearchStatus::Unknown;
  std::optional<HamWitness> witness;
};

inline constexpr std::uint64_t kDefaultCycleSearchBudget = 10000000;

// Exact backtracking Hamiltonian-cycle search with reachability and degree
// pruning; Unknown once the node-expansion budget runs out.
CycleSearchResult find_ham_cycle(const SampledDigraph& g,
                                 std::uint64_t budget = kDefaultCycleSearchBudget);

// Integer balanced flow with row and column sums y, supported on skeleton
// edges; nullopt iff none exists. Throws on negative y.
std::optional<FlowMatrix> integer_flow(const SkeletonGraph& s, const std::vector<long long>& y);

// Decompose a balanced flow into cycle multiplicities over the given cycle
// set: sum of c_j times the adjacency of cycle j equals a. Peeling follows
// the lexicographically smallest positive out-edge.
std::vector<long long> peel_cycles(const SkeletonGraph& s, const CycleSet& cycles,
                                   const FlowMatrix& a);

// Can y be written with every cycle multiplicity at least one? Decided as:
// y - Z.1 is nonnegative and admits a balanced integer flow.
bool in_X0(const SkeletonGraph& s, const std::vector<long long>& y,
           std::size_t cycle_cap = kDefaultCycleCap);

// Complete partite graph over the skeleton: y_i nodes per block, numbered
// contiguously block by block, an edge for every skeleton-allowed ordered
// pair of distinct nodes.
SampledDigraph build_complete_partite(const SkeletonGraph& s, const std::vector<long long>& y);

// Decomposition of the complete partite graph whose cycles project onto the
// skeleton cycle multiset peeled from an integer flow for y. Requires a
// loop-free skeleton; throws when y admits no flow.
HamWitness build_ham_decomposition_Ky(const SkeletonGraph& s, const std::vector<long long>& y);

// Base cycle plus ordered ears rebuilding the whole skeleton.
struct EarDecomposition {
  std::vector<int> base_cycle;         // node sequence
  std::vector<std::vector<int>> ears;  // each path u_1..u_r; endpoints already
                                       // covered, interior nodes new
};

// Deterministic ear decomposition of a strongly connected loop-free skeleton
// with at least one edge.
EarDecomposition ear_decomposition(const SkeletonGraph& s);

// Single Hamiltonian cycle of the complete partite graph, built by recursing
// over the ear decomposition and splicing per-cycle tours at shared blocks.
// Requires strong connectivity, no self-loops, and in_X0(s, y).
HamWitness build_ham_cycle_Ky(const SkeletonGraph& s, const std::vector<long long>& y);

// Validates a witness against a host graph: disjoint cycles covering every
// node, every hop an edge, single cycle when kind is Cycle.
bool verify_witness(const SampledDigraph& g, const HamWitness& h);

// Block-level adjacency counts of a witness: entry (a,b) counts witness hops
// from block a to block b.
FlowMatrix witness_flow_matrix(const SampledDigraph& g, const HamWitness& h, int m);

}  // namespace gham

#endif
