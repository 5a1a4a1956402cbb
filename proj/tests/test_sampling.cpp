#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gham/presets.hpp"
#include "gham/sampling.hpp"
#include "gham/skeleton.hpp"

using namespace gham;

TEST_CASE("splitmix64 reference sequence") {
  // well-known outputs for seed 0; pins cross-platform determinism
  SplitMix64 g(0);
  std::uint64_t a = g.next();
  std::uint64_t b = g.next();
  std::uint64_t c = g.next();
  CHECK(a == 16294208416658607535ULL);
  CHECK(b == 7960286522194355700ULL);
  CHECK(c == 487617019471545679ULL);
  CHECK(mix64(0) == 0ULL);
  CHECK(mix64(1) == 6238072747940578789ULL);
  CHECK(stream_seed({42, 0}) == 10946711343035318437ULL);
  CHECK(stream_seed({42, 1}) == 10383193879983958260ULL);
  CHECK(stream_seed({42, 0}) != stream_seed({43, 0}));
}

TEST_CASE("thresholds are exact ceilings") {
  const unsigned __int128 one64 = static_cast<unsigned __int128>(1) << 64;
  CHECK(scale_threshold(Rational(0)) == 0);
  CHECK(scale_threshold(Rational(1)) == one64);
  CHECK(scale_threshold(Rational(1, 2)) == one64 / 2);
  CHECK(scale_threshold(Rational(1, 4)) == one64 / 4);
  CHECK(scale_threshold(Rational(1, 3)) == (one64 + 2) / 3);  // ceil(2^64 / 3)
  CHECK(scale_threshold(Rational(1, 5)) == (one64 + 4) / 5);
  CHECK_THROWS_AS(scale_threshold(Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(scale_threshold(Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("block lookup matches exact rational comparison") {
  auto wa = preset_graphon("case-a");
  auto th = partition_thresholds(wa.partition);
  REQUIRE(th.size() == 5);
  CHECK(th[0] == 0);
  CHECK(th[4] == static_cast<unsigned __int128>(1) << 64);

  // boundaries: a draw equal to a threshold belongs to the right-hand block
  for (int i = 1; i < 4; ++i) {
    auto u = static_cast<std::uint64_t>(th[i]);
    CHECK(block_from_draw(th, u) == i);
    CHECK(block_from_draw(th, u - 1) == i - 1);
  }

  SplitMix64 rng(11);
  const Rational two64 = Rational(BigInt(1) << 64);
  for (int t = 0; t < 1000; ++t) {
    std::uint64_t u = rng.next();
    Rational point = Rational(BigInt(u)) / two64;
    CHECK(block_from_draw(th, u) == wa.block_of_point(point));
  }
}

TEST_CASE("directed sampling is reproducible and respects the support") {
  auto wa = preset_graphon("case-a");
  auto g1 = sample_directed(wa, 60, RngSpec{7, 5});
  auto g2 = sample_directed(wa, 60, RngSpec{7, 5});
  CHECK(g1.block_of == g2.block_of);
  CHECK(g1.edges == g2.edges);
  auto g3 = sample_directed(wa, 60, RngSpec{7, 6});
  CHECK(g1.edges != g3.edges);

  auto s = skeleton_of(wa);
  CHECK(std::is_sorted(g1.edges.begin(), g1.edges.end()));
  for (auto [u, v] : g1.edges) {
    CHECK(u != v);
    CHECK(s.edge(g1.block_of[u], g1.block_of[v]));
  }
  CHECK_THROWS_AS(sample_directed(wa, -1, RngSpec{0, 0}), std::invalid_argument);
}

TEST_CASE("all-or-nothing values produce the full S-partite edge set") {
  auto wb = preset_graphon("case-b");  // every supported value is 1
  auto g = sample_directed(wb, 40, RngSpec{3, 0});
  auto s = skeleton_of(wb);
  std::set<std::pair<int, int>> seen(g.edges.begin(), g.edges.end());
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) {
      if (u == v) continue;
      CHECK(seen.count({u, v}) ==
            static_cast<std::size_t>(s.edge(g.block_of[u], g.block_of[v]) ? 1 : 0));
    }
}

TEST_CASE("undirected sampling needs symmetry") {
  auto wa = preset_graphon("case-a");
  CHECK_THROWS_AS(sample_undirected(wa, 10, RngSpec{0, 0}), std::invalid_argument);

  auto ws = symmetrize(wa);
  auto g = sample_undirected(ws, 50, RngSpec{9, 2});
  CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
  for (auto [u, v] : g.edges) {
    CHECK(u < v);
    CHECK(ws.value(g.block_of[u], g.block_of[v]) != 0);
  }
}

TEST_CASE("orientation by skeleton support") {
  auto s = make_skeleton(3, {{0, 1}, {1, 2}, {2, 1}});
  SampledGraph g;
  g.n = 3;
  g.block_count = 3;
  g.block_of = {0, 1, 2};
  g.edges = {{0, 1}, {1, 2}};
  auto d = orient_symmetric(g, s);
  CHECK(d.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 1}});

  SampledGraph bad = g;
  bad.edges = {{0, 2}};
  CHECK_THROWS_AS(orient_symmetric(bad, s), std::invalid_argument);
}

TEST_CASE("trimming drops unreciprocated edges of two-way block pairs") {
  auto s = make_skeleton(3, {{0, 1}, {1, 2}, {2, 1}});
  SampledDigraph d;
  d.n = 4;
  d.block_count = 3;
  d.block_of = {0, 1, 2, 2};
  // (0,1): one-way block pair, kept as is; (1,2): two-way, needs the reverse
  d.edges = {{0, 1}, {1, 2}, {1, 3}, {3, 1}};
  auto t = trim_digraph(d, s);
  CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}, {3, 1}});
}

TEST_CASE("empirical concentration is exact") {
  SampledDigraph g;
  g.n = 4;
  g.block_count = 3;
  g.block_of = {0, 0, 2, 1};
  auto x = empirical_concentration(g);
  CHECK(x == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  SampledDigraph empty;
  CHECK_THROWS_AS(empirical_concentration(empty), std::invalid_argument);
}

TEST_CASE("degree regularity report on a saturated sample") {
  auto wq = symmetrize(preset_graphon("case-b"));
  auto s = skeleton_of(wq);
  auto g = sample_undirected(wq, 200, RngSpec{21, 4});
  auto rep = degree_regularity_report(g, s, Rational(1, 2));
  CHECK(rep.pairs.size() == 5);  // {0,1} {0,3} {1,2} {2,3} and the loop pair {3,3}
  CHECK(rep.all_pass);
  const long long b3 = std::count(g.block_of.begin(), g.block_of.end(), 3);
  for (const auto& p : rep.pairs) {
    CHECK(p.passes);
    // supported values are all 1, so samples saturate; within a block a node
    // is not its own neighbour, which caps the loop-pair ratio
    const Rational expect =
        p.block_a == p.block_b ? Rational(b3 - 1, b3) : Rational(1);
    CHECK(p.min_ratio_ab == expect);
    CHECK(p.min_ratio_ba == expect);
  }
  // a strict threshold of 1 can never pass
  CHECK_FALSE(degree_regularity_report(g, s, Rational(1)).all_pass);

  auto tiny = sample_undirected(wq, 1, RngSpec{0, 0});
  CHECK_THROWS_AS(degree_regularity_report(tiny, s, Rational(1, 2)), std::domain_error);
}
