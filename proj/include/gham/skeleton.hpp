#ifndef GHAM_SKELETON_HPP
#define GHAM_SKELETON_HPP

#include "gham/step_graphon.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace gham {

inline constexpr std::size_t kDefaultCycleCap = 100000;

// Digraph on partition blocks; self-loops allowed. Nodes are 0-based.
struct SkeletonGraph {
  int m = 0;
  std::vector<std::vector<bool>> adj;  // adj[i][j]: edge i -> j

  bool edge(int i, int j) const { return adj[i][j]; }
  int edge_count() const;
  bool has_self_loop() const;
  std::vector<std::pair<int, int>> edge_list() const;        // lexicographic
  std::vector<std::vector<int>> out_neighbors() const;       // each sorted
  std::vector<std::vector<int>> in_neighbors() const;        // each sorted
};

SkeletonGraph make_skeleton(int m, const std::vector<std::pair<int, int>>& edges);
SkeletonGraph skeleton_of(const StepGraphon& w);

// Components sorted internally and listed by smallest member.
std::vector<std::vector<int>> strongly_connected_components(const SkeletonGraph& s);
bool is_strongly_connected(const SkeletonGraph& s);

// Undirected bipartite graph on out-copies u'_i and in-copies u''_j;
// edge (u'_i, u''_j) iff the directed edge (i,j) exists.
struct BipartiteDouble {
  int m = 0;
  std::vector<std::pair<int, int>> edges;  // (out index, in index)
  int component_count = 0;                 // over all 2m nodes
};
BipartiteDouble bipartite_double(const SkeletonGraph& s);

// Simple directed cycle as its node sequence; canonical rotation puts the
// smallest node first. A self-loop is the length-1 sequence.
using Cycle = std::vector<int>;

struct CycleSet {
  std::vector<Cycle> cycles;  // sorted by length, then lexicographically
  std::size_t size() const { return cycles.size(); }
};

// All simple directed cycles, self-loops included. Throws std::runtime_error
// when the count exceeds cap.
CycleSet enumerate_cycles(const SkeletonGraph& s, std::size_t cap = kDefaultCycleCap);

// m x k 0/1 matrix; column j indicates the blocks cycle j visits.
struct IncidenceMatrix {
  int m = 0;
  std::vector<std::vector<int>> columns;  // k columns of length m
  int k() const { return static_cast<int>(columns.size()); }
};

IncidenceMatrix incidence_matrix(const SkeletonGraph& s, const CycleSet& cycles);

// m - rank(Z), computed both by exact rational elimination and by the
// component formula over the bipartite doubles of the SCCs; the two are
// asserted equal.
int corank(const SkeletonGraph& s, const IncidenceMatrix& z);

// Columns are node-edge incidence vectors of the undirected collapse of a
// symmetric-support skeleton: e_i + e_j for an edge {i,j}, e_i for a loop.
// Throws std::invalid_argument when the support is not symmetric.
IncidenceMatrix node_edge_incidence(const SkeletonGraph& s_sym);

namespace detail {

// Cycle enumeration restricted to the active nodes, keeping original labels.
// out_sorted must hold sorted out-neighbor lists for the full node range.
std::vector<Cycle> enumerate_cycles_masked(const std::vector<std::vector<int>>& out_sorted,
                                           const std::vector<char>& active,
                                           std::size_t cap);

}  // namespace detail

}  // namespace gham

#endif
