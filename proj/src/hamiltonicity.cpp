#include "gham/hamiltonicity.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace gham {

std::vector<long long> FlowMatrix::row_sums() const {
  std::vector<long long> r(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) r[i] += a[i][j];
  return r;
}

std::vector<long long> FlowMatrix::col_sums() const {
  std::vector<long long> c(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c[j] += a[i][j];
  return c;
}

namespace {

std::vector<std::vector<int>> out_adjacency(const SampledDigraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [i, j] : g.edges) adj[i].push_back(j);
  return adj;  // sorted because edges are lexicographic
}

struct HopcroftKarp {
  int n;
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_l, match_r, dist;
  static constexpr int kInf = 1 << 30;

  HopcroftKarp(int n_, const std::vector<std::vector<int>>& adj_)
      : n(n_), adj(adj_), match_l(n_, -1), match_r(n_, -1), dist(n_) {}

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < n; ++u) {
      if (match_l[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = match_r[v];
        if (w < 0)
          found = true;
        else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      int w = match_r[v];
      if (w < 0 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }

  int run() {
    int matched = 0;
    for (int u = 0; u < n; ++u)
      for (int v : adj[u])
        if (match_r[v] < 0) {
          match_l[u] = v;
          match_r[v] = u;
          ++matched;
          break;
        }
    while (bfs())
      for (int u = 0; u < n; ++u)
        if (match_l[u] < 0 && dfs(u)) ++matched;
    return matched;
  }
};

}  // namespace

std::optional<HamWitness> has_ham_decomposition(const SampledDigraph& g) {
  auto adj = out_adjacency(g);
  HopcroftKarp hk(g.n, adj);
  if (hk.run() != g.n) return std::nullopt;

  // The matching is a permutation without fixed points; read off its cycles.
  HamWitness h;
  h.kind = WitnessKind::Decomposition;
  std::vector<char> done(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (done[v]) continue;
    std::vector<int> cycle;
    int u = v;
    do {
      done[u] = 1;
      cycle.push_back(u);
      u = hk.match_l[u];
    } while (u != v);
    h.cycles.push_back(std::move(cycle));
  }
  return h;
}

bool brute_force_ham_decomposition(const SampledDigraph& g) {
  if (g.n > 10) throw std::invalid_argument("brute force limited to 10 nodes");
  if (g.n == 0) return true;
  auto adj = out_adjacency(g);
  std::vector<char> used(g.n, 0);

  // assign a distinct successor to each node in turn
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == g.n) return true;
    for (int w : adj[v]) {
      if (used[w]) continue;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

CycleSearchResult find_ham_cycle(const SampledDigraph& g, std::uint64_t budget) {
  CycleSearchResult res;
  const int n = g.n;
  if (n == 0) {
    res.status = CycleSearchStatus::Absent;
    return res;
  }
  auto adj = out_adjacency(g);
  std::vector<std::vector<int>> radj(n);
  for (auto [i, j] : g.edges) radj[j].push_back(i);
  for (int v = 0; v < n; ++v)
    if (adj[v].empty() || radj[v].empty()) {
      res.status = CycleSearchStatus::Absent;
      return res;
    }
  if (n == 1) {  // nonempty adjacency is impossible without self-loops
    res.status = CycleSearchStatus::Absent;
    return res;
  }

  std::vector<char> visited(n, 0);
  std::vector<int> path{0};
  visited[0] = 1;
  struct Frame {
    int v;
    std::size_t pos;
  };
  std::vector<Frame> st{{0, 0}};
  std::uint64_t used = 0;

  std::vector<int> queue_buf;
  std::vector<char> seen(n, 0);

  // completion must route head -> every unvisited node -> node 0; prune any
  // partial path that cannot
  auto prune_ok = [&](int head) {
    const int need = n - static_cast<int>(path.size());
    std::fill(seen.begin(), seen.end(), 0);
    queue_buf.clear();
    queue_buf.push_back(head);
    seen[head] = 1;
    int got = 0;
    bool reach_start = false;
    for (std::size_t h = 0; h < queue_buf.size(); ++h)
      for (int w : adj[queue_buf[h]]) {
        if (w == 0) reach_start = true;
        if (!visited[w] && !seen[w]) {
          seen[w] = 1;
          ++got;
          queue_buf.push_back(w);
        }
      }
    if (got != need || !reach_start) return false;

    std::fill(seen.begin(), seen.end(), 0);
    queue_buf.clear();
    queue_buf.push_back(0);
    seen[0] = 1;
    got = 0;
    for (std::size_t h = 0; h < queue_buf.size(); ++h)
      for (int w : radj[queue_buf[h]])
        if (!visited[w] && !seen[w]) {
          seen[w] = 1;
          ++got;
          queue_buf.push_back(w);
        }
    return got == need;
  };

  while (!st.empty()) {
    Frame& f = st.back();
    if (f.pos < adj[f.v].size()) {
      const int w = adj[f.v][f.pos++];
      if (visited[w]) continue;
      if (static_cast<int>(path.size()) + 1 == n) {
        if (std::binary_search(adj[w].begin(), adj[w].end(), 0)) {
          path.push_back(w);
          HamWitness h;
          h.kind = WitnessKind::Cycle;
          h.cycles.push_back(path);
          res.status = CycleSearchStatus::Found;
          res.witness = std::move(h);
          return res;
        }
        continue;
      }
      if (used++ >= budget) {
        res.status = CycleSearchStatus::Unknown;
        return res;
      }
      visited[w] = 1;
      path.push_back(w);
      if (!prune_ok(w)) {
        visited[w] = 0;
        path.pop_back();
        continue;
      }
      st.push_back({w, 0});
    } else {
      st.pop_back();
      if (!st.empty()) {
        visited[f.v] = 0;
        path.pop_back();
      }
    }
  }
  res.status = CycleSearchStatus::Absent;
  return res;
}

namespace {

struct Dinic {
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<Arc>> g;
  std::vector<int> level, iter;

  explicit Dinic(int n) : g(n), level(n), iter(n) {}

  void add(int u, int v, long long cap) {
    g[u].push_back({v, cap, static_cast<int>(g[v].size())});
    g[v].push_back({u, 0, static_cast<int>(g[u].size()) - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : g[u])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[u] + 1;
          q.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  long long dfs(int u, int t, long long f) {
    if (u == t) return f;
    for (int& i = iter[u]; i < static_cast<int>(g[u].size()); ++i) {
      Arc& a = g[u][i];
      if (a.cap <= 0 || level[a.to] != level[u] + 1) continue;
      long long d = dfs(a.to, t, std::min(f, a.cap));
      if (d > 0) {
        a.cap -= d;
        g[a.to][a.rev].cap += d;
        return d;
      }
    }
    return 0;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      long long f;
      while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
    }
    return flow;
  }
};

}  // namespace

std::optional<FlowMatrix> integer_flow(const SkeletonGraph& s, const std::vector<long long>& y) {
  if (static_cast<int>(y.size()) != s.m) throw std::invalid_argument("dimension mismatch");
  long long total = 0;
  for (long long v : y) {
    if (v < 0) throw std::invalid_argument("negative entry in throughput vector");
    total += v;
  }

  const int m = s.m;
  const int src = 2 * m, sink = 2 * m + 1;
  Dinic din(2 * m + 2);
  for (int i = 0; i < m; ++i) din.add(src, i, y[i]);
  struct ArcRef {
    int i, j, index;
  };
  std::vector<ArcRef> refs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (s.adj[i][j]) {
        refs.push_back({i, j, static_cast<int>(din.g[i].size())});
        din.add(i, m + j, total);
      }
  for (int j = 0; j < m; ++j) din.add(m + j, sink, y[j]);

  if (din.max_flow(src, sink) != total) return std::nullopt;

  FlowMatrix a;
  a.m = m;
  a.a.assign(m, std::vector<long long>(m, 0));
  for (const auto& r : refs) a.a[r.i][r.j] = total - din.g[r.i][r.index].cap;
  return a;
}

std::vector<long long> peel_cycles(const SkeletonGraph& s, const CycleSet& cycles,
                                   const FlowMatrix& a) {
  if (a.m != s.m) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < s.m; ++i)
    for (int j = 0; j < s.m; ++j) {
      if (a.a[i][j] < 0) throw std::invalid_argument("negative flow entry");
      if (a.a[i][j] > 0 && !s.adj[i][j])
        throw std::invalid_argument("flow outside skeleton support");
    }
  if (a.row_sums() != a.col_sums()) throw std::invalid_argument("unbalanced flow");

  std::map<Cycle, int> index;
  for (std::size_t j = 0; j < cycles.cycles.size(); ++j)
    index[cycles.cycles[j]] = static_cast<int>(j);

  auto work = a.a;
  std::vector<long long> c(cycles.size(), 0);
  for (;;) {
    int start = -1;
    for (int i = 0; i < s.m && start < 0; ++i)
      for (int j = 0; j < s.m; ++j)
        if (work[i][j] > 0) {
          start = i;
          break;
        }
    if (start < 0) break;

    // walk the smallest positive out-edge until a node repeats
    std::vector<int> pos(s.m, -1);
    std::vector<int> walk;
    int cur = start;
    while (pos[cur] < 0) {
      pos[cur] = static_cast<int>(walk.size());
      walk.push_back(cur);
      int next = -1;
      for (int j = 0; j < s.m; ++j)
        if (work[cur][j] > 0) {
          next = j;
          break;
        }
      if (next < 0) throw std::logic_error("balanced flow walk stalled");
      cur = next;
    }
    std::vector<int> cyc(walk.begin() + pos[cur], walk.end());

    long long delta = std::numeric_limits<long long>::max();
    for (std::size_t i = 0; i < cyc.size(); ++i)
      delta = std::min(delta, work[cyc[i]][cyc[(i + 1) % cyc.size()]]);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      work[cyc[i]][cyc[(i + 1) % cyc.size()]] -= delta;

    auto smallest = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), smallest, cyc.end());
    auto it = index.find(cyc);
    if (it == index.end()) throw std::logic_error("peeled a cycle missing from the cycle set");
    c[it->second] += delta;
  }
  return c;
}

namespace {

// number of cycles through each node
std::vector<long long> cycle_count_per_node(const SkeletonGraph& s, const CycleSet& cycles) {
  std::vector<long long> z1(s.m, 0);
  for (const auto& c : cycles.cycles)
    for (int v : c) ++z1[v];
  return z1;
}

}  // namespace

bool in_X0(const SkeletonGraph& s, const std::vector<long long>& y, std::size_t cycle_cap) {
  if (static_cast<int>(y.size()) != s.m) throw std::invalid_argument("dimension mismatch");
  bool any = false;
  for (long long v : y) {
    if (v < 0) return false;
    any = any || v > 0;
  }
  if (!any) return false;
  CycleSet cycles = enumerate_cycles(s, cycle_cap);
  if (cycles.size() == 0) return false;
  auto z1 = cycle_count_per_node(s, cycles);
  std::vector<long long> rest(s.m);
  for (int i = 0; i < s.m; ++i) {
    rest[i] = y[i] - z1[i];
    if (rest[i] < 0) return false;
  }
  return integer_flow(s, rest).has_value();
}

SampledDigraph build_complete_partite(const SkeletonGraph& s, const std::vector<long long>& y) {
  if (static_cast<int>(y.size()) != s.m) throw std::invalid_argument("dimension mismatch");
  SampledDigraph g;
  g.block_count = s.m;
  for (int b = 0; b < s.m; ++b) {
    if (y[b] < 0) throw std::invalid_argument("negative entry in throughput vector");
    for (long long t = 0; t < y[b]; ++t) g.block_of.push_back(b);
  }
  g.n = static_cast<int>(g.block_of.size());
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (u != v && s.adj[g.block_of[u]][g.block_of[v]]) g.edges.emplace_back(u, v);
  return g;
}

namespace {

std::vector<std::vector<int>> block_pools(const std::vector<long long>& y) {
  std::vector<std::vector<int>> pools(y.size());
  int next = 0;
  for (std::size_t b = 0; b < y.size(); ++b)
    for (long long t = 0; t < y[b]; ++t) pools[b].push_back(next++);
  for (auto& p : pools) std::reverse(p.begin(), p.end());  // pop_back gives ascending ids
  return pools;
}

int pool_pop(std::vector<std::vector<int>>& pools, int block) {
  if (pools[block].empty()) throw std::logic_error("block pool exhausted");
  int id = pools[block].back();
  pools[block].pop_back();
  return id;
}

}  // namespace

HamWitness build_ham_decomposition_Ky(const SkeletonGraph& s, const std::vector<long long>& y) {
  if (s.has_self_loop())
    throw std::invalid_argument("skeleton has a self-loop; apply the loop-free reduction first");
  auto flow = integer_flow(s, y);
  if (!flow) throw std::domain_error("throughput vector admits no balanced flow");
  CycleSet cycles = enumerate_cycles(s);
  auto c = peel_cycles(s, cycles, *flow);

  auto pools = block_pools(y);
  HamWitness h;
  h.kind = WitnessKind::Decomposition;
  for (std::size_t j = 0; j < cycles.cycles.size(); ++j)
    for (long long copy = 0; copy < c[j]; ++copy) {
      std::vector<int> nodes;
      nodes.reserve(cycles.cycles[j].size());
      for (int b : cycles.cycles[j]) nodes.push_back(pool_pop(pools, b));
      h.cycles.push_back(std::move(nodes));
    }
  for (const auto& p : pools)
    if (!p.empty()) throw std::logic_error("unconsumed nodes after decomposition build");
  return h;
}

EarDecomposition ear_decomposition(const SkeletonGraph& s) {
  if (s.has_self_loop()) throw std::invalid_argument("skeleton has a self-loop");
  if (!is_strongly_connected(s) || s.edge_count() == 0)
    throw std::invalid_argument("skeleton is not strongly connected with a cycle");

  auto out = s.out_neighbors();

  // deterministic starting cycle: follow smallest out-neighbors from node 0
  std::vector<int> pos(s.m, -1), walk;
  int cur = 0;
  while (pos[cur] < 0) {
    pos[cur] = static_cast<int>(walk.size());
    walk.push_back(cur);
    cur = out[cur].front();
  }
  EarDecomposition ed;
  ed.base_cycle.assign(walk.begin() + pos[cur], walk.end());
  auto smallest = std::min_element(ed.base_cycle.begin(), ed.base_cycle.end());
  std::rotate(ed.base_cycle.begin(), smallest, ed.base_cycle.end());

  std::vector<char> covered_node(s.m, 0);
  std::vector<std::vector<char>> covered_edge(s.m, std::vector<char>(s.m, 0));
  int edges_left = s.edge_count();
  for (std::size_t i = 0; i < ed.base_cycle.size(); ++i) {
    int a = ed.base_cycle[i], b = ed.base_cycle[(i + 1) % ed.base_cycle.size()];
    covered_node[a] = 1;
    covered_edge[a][b] = 1;
    --edges_left;
  }

  while (edges_left > 0) {
    int ea = -1, eb = -1;
    for (int a = 0; a < s.m && ea < 0; ++a) {
      if (!covered_node[a]) continue;
      for (int b : out[a])
        if (!covered_edge[a][b]) {
          ea = a;
          eb = b;
          break;
        }
    }
    if (ea < 0) throw std::logic_error("uncovered edges unreachable from covered part");

    std::vector<int> ear{ea, eb};
    if (!covered_node[eb]) {
      // BFS from eb over uncovered nodes to the first edge back into cover
      std::vector<int> parent(s.m, -1), queue_buf{eb};
      std::vector<char> seen(s.m, 0);
      seen[eb] = 1;
      int tail = -1, target = -1;
      for (std::size_t h = 0; h < queue_buf.size() && tail < 0; ++h) {
        int u = queue_buf[h];
        for (int w : out[u]) {
          if (covered_node[w]) {
            tail = u;
            target = w;
            break;
          }
          if (!seen[w]) {
            seen[w] = 1;
            parent[w] = u;
            queue_buf.push_back(w);
          }
        }
      }
      if (tail < 0) throw std::logic_error("ear cannot return to covered part");
      std::vector<int> back;
      for (int u = tail; u != eb; u = parent[u]) back.push_back(u);
      std::reverse(back.begin(), back.end());
      ear.insert(ear.end(), back.begin(), back.end());
      ear.push_back(target);
    }
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) {
      covered_node[ear[i]] = 1;
      covered_edge[ear[i]][ear[i + 1]] = 1;
      --edges_left;
    }
    covered_node[ear.back()] = 1;
    ed.ears.push_back(std::move(ear));
  }
  return ed;
}

HamWitness build_ham_cycle_Ky(const SkeletonGraph& s, const std::vector<long long>& y) {
  if (static_cast<int>(y.size()) != s.m) throw std::invalid_argument("dimension mismatch");
  if (s.has_self_loop())
    throw std::invalid_argument("skeleton has a self-loop; apply the loop-free reduction first");
  if (!is_strongly_connected(s))
    throw std::invalid_argument("skeleton is not strongly connected");

  CycleSet cycles = enumerate_cycles(s);
  if (cycles.size() == 0) throw std::domain_error("skeleton has no cycle");
  auto z1 = cycle_count_per_node(s, cycles);
  std::vector<long long> rest(s.m);
  for (int i = 0; i < s.m; ++i) {
    rest[i] = y[i] - z1[i];
    if (rest[i] < 0)
      throw std::domain_error("throughput vector admits no all-positive cycle certificate");
  }
  auto flow = integer_flow(s, rest);
  if (!flow) throw std::domain_error("throughput vector admits no all-positive cycle certificate");
  auto c = peel_cycles(s, cycles, *flow);
  for (auto& v : c) ++v;  // one mandatory copy of every cycle

  EarDecomposition ed = ear_decomposition(s);

  // level 0 = base cycle edges, level t = edges of ear t
  std::vector<std::vector<int>> edge_level(s.m, std::vector<int>(s.m, -1));
  for (std::size_t i = 0; i < ed.base_cycle.size(); ++i)
    edge_level[ed.base_cycle[i]][ed.base_cycle[(i + 1) % ed.base_cycle.size()]] = 0;
  for (std::size_t t = 0; t < ed.ears.size(); ++t)
    for (std::size_t i = 0; i + 1 < ed.ears[t].size(); ++i)
      edge_level[ed.ears[t][i]][ed.ears[t][i + 1]] = static_cast<int>(t) + 1;

  // a cycle enters at the level of its latest edge, where it must contain
  // that ear entirely, hence also the ear's start block
  std::vector<std::vector<int>> cycles_at_level(ed.ears.size() + 1);
  for (std::size_t j = 0; j < cycles.cycles.size(); ++j) {
    const auto& cyc = cycles.cycles[j];
    int lvl = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int l = edge_level[cyc[i]][cyc[(i + 1) % cyc.size()]];
      if (l < 0) throw std::logic_error("cycle edge missing from ear decomposition");
      lvl = std::max(lvl, l);
    }
    cycles_at_level[lvl].push_back(static_cast<int>(j));
  }
  if (cycles_at_level[0].size() != 1)
    throw std::logic_error("base level must contain exactly the base cycle");

  auto pools = block_pools(y);
  std::vector<int> block_of;
  for (int b = 0; b < s.m; ++b)
    for (long long t = 0; t < y[b]; ++t) block_of.push_back(b);

  auto emit_copies = [&](const Cycle& blocks, int start_block, long long copies,
                         std::vector<int>& seq) {
    auto rotated = blocks;
    auto at = std::find(rotated.begin(), rotated.end(), start_block);
    if (at == rotated.end()) throw std::logic_error("cycle misses its splice block");
    std::rotate(rotated.begin(), at, rotated.end());
    for (long long t = 0; t < copies; ++t)
      for (int b : rotated) seq.push_back(pool_pop(pools, b));
  };

  std::vector<int> seq;
  {
    int j = cycles_at_level[0].front();
    emit_copies(cycles.cycles[j], cycles.cycles[j].front(), c[j], seq);
  }
  for (std::size_t t = 1; t <= ed.ears.size(); ++t) {
    // rotate the running tour to start at a node of the ear's first block,
    // then splice in every cycle that enters at this level
    const int splice_block = ed.ears[t - 1].front();
    std::size_t idx = seq.size();
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (block_of[seq[i]] == splice_block) {
        idx = i;
        break;
      }
    if (idx == seq.size()) throw std::logic_error("running tour misses the splice block");
    std::rotate(seq.begin(), seq.begin() + idx, seq.end());
    for (int j : cycles_at_level[t]) emit_copies(cycles.cycles[j], splice_block, c[j], seq);
  }
  for (const auto& p : pools)
    if (!p.empty()) throw std::logic_error("unconsumed nodes after cycle build");

  HamWitness h;
  h.kind = WitnessKind::Cycle;
  h.cycles.push_back(std::move(seq));
  return h;
}

bool verify_witness(const SampledDigraph& g, const HamWitness& h) {
  if (h.kind == WitnessKind::Cycle && h.cycles.size() != 1) return false;
  std::vector<char> covered(g.n, 0);
  std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
  int total = 0;
  for (const auto& cyc : h.cycles) {
    if (cyc.empty()) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      if (u < 0 || u >= g.n) return false;
      if (covered[u]) return false;
      covered[u] = 1;
      ++total;
      if (!edges.count({u, v})) return false;
    }
  }
  return total == g.n;
}

FlowMatrix witness_flow_matrix(const SampledDigraph& g, const HamWitness& h, int m) {
  FlowMatrix a;
  a.m = m;
  a.a.assign(m, std::vector<long long>(m, 0));
  for (const auto& cyc : h.cycles)
    for (std::size_t i = 0; i < cyc.size(); ++i)
      ++a.a[g.block_of[cyc[i]]][g.block_of[cyc[(i + 1) % cyc.size()]]];
  return a;
}

}  // namespace gham
