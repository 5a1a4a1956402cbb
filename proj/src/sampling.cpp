#include "gham/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace gham {

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(const RngSpec& spec) {
  return mix64(mix64(spec.master_seed) ^ spec.trial_index);
}

unsigned __int128 scale_threshold(const Rational& r) {
  if (r < 0 || r > 1) throw std::invalid_argument("probability outside [0,1]");
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  BigInt t = ((num << 64) + den - 1) / den;
  return t.convert_to<unsigned __int128>();
}

std::vector<unsigned __int128> partition_thresholds(const Partition& partition) {
  std::vector<unsigned __int128> out;
  out.reserve(partition.size());
  for (const auto& p : partition) out.push_back(scale_threshold(p));
  return out;
}

int block_from_draw(const std::vector<unsigned __int128>& thresholds, std::uint64_t u) {
  const auto v = static_cast<unsigned __int128>(u);
  // largest i with thresholds[i] <= v; v < thresholds.back() always
  int lo = 0, hi = static_cast<int>(thresholds.size()) - 1;
  while (lo + 1 < hi) {
    int mid = (lo + hi) / 2;
    if (thresholds[mid] <= v)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

namespace {

std::vector<int> draw_blocks(const StepGraphon& w, int n, SplitMix64& gen) {
  auto thresholds = partition_thresholds(w.partition);
  std::vector<int> blocks(n);
  for (int v = 0; v < n; ++v) blocks[v] = block_from_draw(thresholds, gen.next());
  return blocks;
}

std::vector<std::vector<unsigned __int128>> value_thresholds(const StepGraphon& w) {
  const int m = w.block_count();
  std::vector<std::vector<unsigned __int128>> thr(m, std::vector<unsigned __int128>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) thr[i][j] = scale_threshold(w.value(i, j));
  return thr;
}

}  // namespace

SampledDigraph sample_directed(const StepGraphon& w, int n, const RngSpec& rng) {
  if (n < 0) throw std::invalid_argument("negative node count");
  SplitMix64 gen(stream_seed(rng));
  SampledDigraph g;
  g.n = n;
  g.block_count = w.block_count();
  g.block_of = draw_blocks(w, n, gen);
  auto thr = value_thresholds(w);
  for (int i = 0; i < n; ++i) {
    const auto& row = thr[g.block_of[i]];
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::uint64_t u = gen.next();
      if (static_cast<unsigned __int128>(u) < row[g.block_of[j]]) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

SampledGraph sample_undirected(const StepGraphon& ws, int n, const RngSpec& rng) {
  if (n < 0) throw std::invalid_argument("negative node count");
  if (!ws.is_symmetric()) throw std::invalid_argument("graphon is not symmetric");
  SplitMix64 gen(stream_seed(rng));
  SampledGraph g;
  g.n = n;
  g.block_count = ws.block_count();
  g.block_of = draw_blocks(ws, n, gen);
  auto thr = value_thresholds(ws);
  for (int i = 0; i < n; ++i) {
    const auto& row = thr[g.block_of[i]];
    for (int j = i + 1; j < n; ++j) {
      std::uint64_t u = gen.next();
      if (static_cast<unsigned __int128>(u) < row[g.block_of[j]]) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

SampledDigraph orient_symmetric(const SampledGraph& g, const SkeletonGraph& s) {
  SampledDigraph out;
  out.n = g.n;
  out.block_count = g.block_count;
  out.block_of = g.block_of;
  for (auto [i, j] : g.edges) {
    const int a = g.block_of[i], b = g.block_of[j];
    if (a >= s.m || b >= s.m) throw std::invalid_argument("block outside skeleton");
    const bool ab = s.adj[a][b], ba = s.adj[b][a];
    if (ab) out.edges.emplace_back(i, j);
    if (ba) out.edges.emplace_back(j, i);
    if (!ab && !ba) throw std::invalid_argument("edge outside skeleton support");
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

SampledDigraph trim_digraph(const SampledDigraph& g, const SkeletonGraph& s) {
  std::vector<bool> present(static_cast<std::size_t>(g.n) * g.n, false);
  for (auto [i, j] : g.edges)
    present[static_cast<std::size_t>(i) * g.n + j] = true;
  SampledDigraph out;
  out.n = g.n;
  out.block_count = g.block_count;
  out.block_of = g.block_of;
  for (auto [i, j] : g.edges) {
    const int a = g.block_of[i], b = g.block_of[j];
    const bool bidirectional = a < s.m && b < s.m && s.adj[a][b] && s.adj[b][a];
    if (bidirectional && !present[static_cast<std::size_t>(j) * g.n + i]) continue;
    out.edges.emplace_back(i, j);
  }
  return out;
}

std::vector<Rational> empirical_concentration(const SampledDigraph& g) {
  if (g.n == 0) throw std::invalid_argument("empty graph has no concentration");
  std::vector<int> counts(g.block_count, 0);
  for (int b : g.block_of) ++counts[b];
  std::vector<Rational> x(g.block_count);
  for (int b = 0; b < g.block_count; ++b) x[b] = Rational(counts[b], g.n);
  return x;
}

DegreeRegularityReport degree_regularity_report(const SampledGraph& g, const SkeletonGraph& s,
                                                const Rational& delta) {
  std::vector<std::vector<int>> members(s.m);
  for (int v = 0; v < g.n; ++v)
    if (g.block_of[v] < s.m) members[g.block_of[v]].push_back(v);
  for (int b = 0; b < s.m; ++b)
    if (members[b].empty()) throw std::domain_error("empty block");

  std::vector<std::vector<int>> adj(g.n);
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }

  DegreeRegularityReport rep;
  for (int a = 0; a < s.m; ++a)
    for (int b = a; b < s.m; ++b) {
      if (!s.adj[a][b] && !s.adj[b][a]) continue;
      auto min_ratio = [&](int from, int to) {
        const auto& target = members[to];
        Rational best = 2;  // above any possible ratio
        for (int v : members[from]) {
          int count = 0;
          for (int w : adj[v])
            if (g.block_of[w] == to) ++count;
          Rational ratio(count, static_cast<int>(target.size()));
          if (ratio < best) best = ratio;
        }
        return best;
      };
      DegreePairReport pair;
      pair.block_a = a;
      pair.block_b = b;
      pair.min_ratio_ab = min_ratio(a, b);
      pair.min_ratio_ba = a == b ? pair.min_ratio_ab : min_ratio(b, a);
      pair.passes = pair.min_ratio_ab > delta && pair.min_ratio_ba > delta;
      rep.all_pass = rep.all_pass && pair.passes;
      rep.pairs.push_back(std::move(pair));
    }
  return rep;
}

}  // namespace gham
