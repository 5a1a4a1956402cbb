#include "gham/skeleton.hpp"

#include "gham/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gham {

int SkeletonGraph::edge_count() const {
  int c = 0;
  for (const auto& row : adj) c += static_cast<int>(std::count(row.begin(), row.end(), true));
  return c;
}

bool SkeletonGraph::has_self_loop() const {
  for (int i = 0; i < m; ++i)
    if (adj[i][i]) return true;
  return false;
}

std::vector<std::pair<int, int>> SkeletonGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (adj[i][j]) out.emplace_back(i, j);
  return out;
}

std::vector<std::vector<int>> SkeletonGraph::out_neighbors() const {
  std::vector<std::vector<int>> out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (adj[i][j]) out[i].push_back(j);
  return out;
}

std::vector<std::vector<int>> SkeletonGraph::in_neighbors() const {
  std::vector<std::vector<int>> in(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (adj[i][j]) in[j].push_back(i);
  return in;
}

SkeletonGraph make_skeleton(int m, const std::vector<std::pair<int, int>>& edges) {
  if (m < 0) throw std::invalid_argument("negative node count");
  SkeletonGraph s;
  s.m = m;
  s.adj.assign(m, std::vector<bool>(m, false));
  for (auto [i, j] : edges) {
    if (i < 0 || i >= m || j < 0 || j >= m) throw std::invalid_argument("edge index out of range");
    s.adj[i][j] = true;
  }
  return s;
}

SkeletonGraph skeleton_of(const StepGraphon& w) {
  int m = w.block_count();
  SkeletonGraph s;
  s.m = m;
  s.adj.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s.adj[i][j] = w.value(i, j) != 0;
  return s;
}

namespace {

// Iterative Tarjan; comp ids are assigned in some order, remapped afterwards.
std::vector<int> scc_ids(const SkeletonGraph& s) {
  int m = s.m;
  std::vector<int> index(m, -1), low(m, 0), comp(m, -1);
  std::vector<char> onstack(m, 0);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;
  struct Frame {
    int v, next_child;
  };
  for (int root = 0; root < m; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    onstack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_child < m) {
        int w = f.next_child++;
        if (!s.adj[f.v][w]) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          onstack[w] = 1;
          call.push_back({w, 0});
        } else if (onstack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          for (;;) {
            int u = stack.back();
            stack.pop_back();
            onstack[u] = 0;
            comp[u] = next_comp;
            if (u == v) break;
          }
          ++next_comp;
        }
      }
    }
  }
  return comp;
}

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(const SkeletonGraph& s) {
  auto comp = scc_ids(s);
  int q = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> groups(q);
  for (int v = 0; v < s.m; ++v) groups[comp[v]].push_back(v);
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

bool is_strongly_connected(const SkeletonGraph& s) {
  return strongly_connected_components(s).size() <= 1;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

}  // namespace

BipartiteDouble bipartite_double(const SkeletonGraph& s) {
  BipartiteDouble b;
  b.m = s.m;
  UnionFind uf(2 * s.m);
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.m; ++j)
      if (s.adj[i][j]) {
        b.edges.emplace_back(i, j);
        uf.unite(i, s.m + j);
      }
  b.component_count = uf.components();
  return b;
}

namespace detail {

// Cycle enumeration over an induced subgraph given by sorted adjacency and an
// active-node mask. Each simple cycle is produced once, rooted at its
// smallest node. Used here and by the Hamiltonian-cycle construction.
std::vector<Cycle> enumerate_cycles_masked(const std::vector<std::vector<int>>& out_sorted,
                                           const std::vector<char>& active,
                                           std::size_t cap) {
  int m = static_cast<int>(out_sorted.size());
  std::vector<Cycle> found;
  std::vector<char> onpath(m, 0);
  Cycle path;

  // explicit stack of (node, next-neighbor position)
  struct Frame {
    int v;
    std::size_t pos;
  };
  for (int start = 0; start < m; ++start) {
    if (!active[start]) continue;
    path.clear();
    path.push_back(start);
    onpath[start] = 1;
    std::vector<Frame> st{{start, 0}};
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.pos < out_sorted[f.v].size()) {
        int w = out_sorted[f.v][f.pos++];
        if (!active[w] || w < start) continue;
        if (w == start) {
          found.push_back(path);
          if (found.size() > cap)
            throw std::runtime_error(
                "cycle count exceeds cap (" + std::to_string(cap) +
                "); raise --max-cycles");
          continue;
        }
        if (onpath[w]) continue;
        onpath[w] = 1;
        path.push_back(w);
        st.push_back({w, 0});
      } else {
        onpath[f.v] = 0;
        path.pop_back();
        st.pop_back();
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return found;
}

}  // namespace detail

CycleSet enumerate_cycles(const SkeletonGraph& s, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("cycle cap must be positive");
  std::vector<char> active(s.m, 1);
  CycleSet cs;
  cs.cycles = detail::enumerate_cycles_masked(s.out_neighbors(), active, cap);
  return cs;
}

IncidenceMatrix incidence_matrix(const SkeletonGraph& s, const CycleSet& cycles) {
  IncidenceMatrix z;
  z.m = s.m;
  z.columns.reserve(cycles.size());
  for (const auto& c : cycles.cycles) {
    std::vector<int> col(s.m, 0);
    for (int v : c) col[v] = 1;
    z.columns.push_back(std::move(col));
  }
  return z;
}

int corank(const SkeletonGraph& s, const IncidenceMatrix& z) {
  RationalMatrix zm(z.m, z.k());
  for (int j = 0; j < z.k(); ++j)
    for (int i = 0; i < z.m; ++i) zm.at(i, j) = z.columns[j][i];
  int by_rank = z.m - rank(zm);

  // Lemma-style formula: sum over SCCs of (components of the SCC's bipartite
  // double - 1), the double taken over edges internal to the SCC.
  int by_formula = 0;
  for (const auto& group : strongly_connected_components(s)) {
    int p = static_cast<int>(group.size());
    std::vector<int> local(s.m, -1);
    for (int idx = 0; idx < p; ++idx) local[group[idx]] = idx;
    UnionFind uf(2 * p);
    for (int a : group)
      for (int b : group)
        if (s.adj[a][b]) uf.unite(local[a], p + local[b]);
    by_formula += uf.components() - 1;
  }

  if (by_rank != by_formula)
    throw std::logic_error("co-rank mismatch between rank computation and component formula");
  return by_rank;
}

IncidenceMatrix node_edge_incidence(const SkeletonGraph& s_sym) {
  for (int i = 0; i < s_sym.m; ++i)
    for (int j = i + 1; j < s_sym.m; ++j)
      if (s_sym.adj[i][j] != s_sym.adj[j][i])
        throw std::invalid_argument("skeleton support is not symmetric");
  IncidenceMatrix z;
  z.m = s_sym.m;
  for (int i = 0; i < s_sym.m; ++i)
    for (int j = i; j < s_sym.m; ++j)
      if (s_sym.adj[i][j]) {
        std::vector<int> col(s_sym.m, 0);
        col[i] = 1;
        col[j] = 1;  // i == j leaves a single 1
        z.columns.push_back(std::move(col));
      }
  return z;
}

}  // namespace gham
