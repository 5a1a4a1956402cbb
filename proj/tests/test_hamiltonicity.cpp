#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>

#include "gham/hamiltonicity.hpp"
#include "gham/presets.hpp"
#include "gham/sampling.hpp"
#include "gham/skeleton.hpp"

using namespace gham;

namespace {

SampledDigraph digraph(int n, std::vector<std::pair<int, int>> edges) {
  SampledDigraph g;
  g.n = n;
  g.block_count = 1;
  g.block_of.assign(n, 0);
  std::sort(edges.begin(), edges.end());
  g.edges = std::move(edges);
  return g;
}

SkeletonGraph study_skeleton(bool with_loop) {
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}};
  if (with_loop) edges.push_back({3, 3});
  return make_skeleton(4, edges);
}

}  // namespace

TEST_CASE("matching-based cycle cover") {
  auto two = digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  auto h = has_ham_decomposition(two);
  REQUIRE(h.has_value());
  CHECK(h->kind == WitnessKind::Decomposition);
  CHECK(h->cycles.size() == 2);
  CHECK(verify_witness(two, *h));

  CHECK_FALSE(has_ham_decomposition(digraph(3, {{0, 1}, {1, 2}})).has_value());

  // augmenting-path case: the greedy matching must get repaired
  auto tri = digraph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
  auto ht = has_ham_decomposition(tri);
  REQUIRE(ht.has_value());
  CHECK(verify_witness(tri, *ht));

  auto empty = digraph(0, {});
  auto he = has_ham_decomposition(empty);
  REQUIRE(he.has_value());
  CHECK(he->cycles.empty());
  CHECK(verify_witness(empty, *he));
}

TEST_CASE("brute force agrees with the matching oracle") {
  CHECK(brute_force_ham_decomposition(digraph(0, {})));
  CHECK(brute_force_ham_decomposition(digraph(2, {{0, 1}, {1, 0}})));
  CHECK_FALSE(brute_force_ham_decomposition(digraph(2, {{0, 1}})));
  CHECK_THROWS_AS(brute_force_ham_decomposition(digraph(11, {})), std::invalid_argument);

  auto wa = preset_graphon("case-a");
  auto wb = preset_graphon("case-b");
  for (int t = 0; t < 150; ++t) {
    auto g = sample_directed(t % 2 ? wa : wb, 4 + t % 5, RngSpec{17, (std::uint64_t)t});
    CHECK(brute_force_ham_decomposition(g) == has_ham_decomposition(g).has_value());
  }
}

TEST_CASE("exact cycle search") {
  auto cyc = digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto found = find_ham_cycle(cyc);
  REQUIRE(found.status == CycleSearchStatus::Found);
  REQUIRE(found.witness.has_value());
  CHECK(found.witness->kind == WitnessKind::Cycle);
  CHECK(found.witness->cycles[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(verify_witness(cyc, *found.witness));

  // a perfect cycle cover that is not a single cycle
  auto two = digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  CHECK(find_ham_cycle(two).status == CycleSearchStatus::Absent);
  CHECK(has_ham_decomposition(two).has_value());

  CHECK(find_ham_cycle(digraph(3, {{0, 1}, {1, 2}, {2, 1}})).status ==
        CycleSearchStatus::Absent);
  CHECK(find_ham_cycle(digraph(1, {})).status == CycleSearchStatus::Absent);
  CHECK(find_ham_cycle(digraph(0, {})).status == CycleSearchStatus::Absent);

  CHECK(find_ham_cycle(cyc, 0).status == CycleSearchStatus::Unknown);
}

TEST_CASE("integer flow on the skeleton") {
  auto s = study_skeleton(true);
  auto flow = integer_flow(s, {1, 2, 3, 4});
  REQUIRE(flow.has_value());
  CHECK(flow->row_sums() == std::vector<long long>{1, 2, 3, 4});
  CHECK(flow->col_sums() == std::vector<long long>{1, 2, 3, 4});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (flow->a[i][j] > 0) CHECK(s.edge(i, j));

  // the unit vector has exactly one balanced realization: the long cycle
  auto unit = integer_flow(s, {1, 1, 1, 1});
  REQUIRE(unit.has_value());
  CHECK(unit->a == std::vector<std::vector<long long>>{
                       {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}});

  auto chain = make_skeleton(2, {{0, 1}});
  CHECK_FALSE(integer_flow(chain, {1, 1}).has_value());
  CHECK(integer_flow(chain, {0, 0}).has_value());
  CHECK_THROWS_AS(integer_flow(s, {1, -1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(integer_flow(s, {1, 1}), std::invalid_argument);
}

TEST_CASE("cycle peeling recovers multiplicities") {
  auto s = study_skeleton(true);
  auto cycles = enumerate_cycles(s);

  FlowMatrix a;
  a.m = 4;
  a.a = {{0, 1, 0, 0}, {0, 0, 2, 0}, {0, 1, 0, 2}, {1, 0, 1, 2}};
  CHECK(peel_cycles(s, cycles, a) == std::vector<long long>{2, 1, 1, 1});

  FlowMatrix zero;
  zero.m = 4;
  zero.a.assign(4, std::vector<long long>(4, 0));
  CHECK(peel_cycles(s, cycles, zero) == std::vector<long long>{0, 0, 0, 0});

  FlowMatrix unbalanced = zero;
  unbalanced.a[0][1] = 1;
  CHECK_THROWS_AS(peel_cycles(s, cycles, unbalanced), std::invalid_argument);

  FlowMatrix off_support = zero;
  off_support.a[1][0] = 1;
  off_support.a[0][1] = 1;
  CHECK_THROWS_AS(peel_cycles(s, cycles, off_support), std::invalid_argument);
}

TEST_CASE("membership in the constructible set") {
  auto sd = study_skeleton(false);
  CHECK(in_X0(sd, {1, 2, 3, 2}));
  CHECK(in_X0(sd, {2, 4, 6, 4}));
  CHECK_FALSE(in_X0(sd, {1, 1, 1, 1}));  // below the all-cycles minimum
  CHECK_FALSE(in_X0(sd, {0, 0, 0, 0}));
  CHECK_FALSE(in_X0(sd, {1, 2, 3, -2}));
  CHECK_THROWS_AS(in_X0(sd, {1, 2}), std::invalid_argument);

  auto chain = make_skeleton(2, {{0, 1}});
  CHECK_FALSE(in_X0(chain, {1, 1}));  // no cycles at all
}

TEST_CASE("complete multipartite graph of a skeleton") {
  auto sd = study_skeleton(false);
  auto k = build_complete_partite(sd, {1, 2, 3, 2});
  CHECK(k.n == 8);
  CHECK(k.block_of == std::vector<int>{0, 1, 1, 2, 2, 2, 3, 3});
  CHECK(k.edges.size() == 28);
  CHECK(std::is_sorted(k.edges.begin(), k.edges.end()));
  for (auto [u, v] : k.edges) CHECK(sd.edge(k.block_of[u], k.block_of[v]));

  // empty blocks are fine
  auto k2 = build_complete_partite(sd, {0, 1, 1, 0});
  CHECK(k2.n == 2);
  CHECK(k2.edges.size() == 2);  // the two-cycle between blocks 1 and 2

  CHECK_THROWS_AS(build_complete_partite(sd, {1, -1, 0, 0}), std::invalid_argument);
}

TEST_CASE("decomposition builder") {
  auto sd = study_skeleton(false);
  auto h = build_ham_decomposition_Ky(sd, {1, 2, 3, 2});
  CHECK(h.kind == WitnessKind::Decomposition);
  CHECK(h.cycles.size() == 3);
  CHECK(verify_witness(build_complete_partite(sd, {1, 2, 3, 2}), h));

  auto flow = witness_flow_matrix(build_complete_partite(sd, {1, 2, 3, 2}), h, 4);
  CHECK(flow.row_sums() == std::vector<long long>{1, 2, 3, 2});
  CHECK(flow.col_sums() == std::vector<long long>{1, 2, 3, 2});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (flow.a[i][j] > 0) CHECK(sd.edge(i, j));

  CHECK_THROWS_AS(build_ham_decomposition_Ky(study_skeleton(true), {1, 1, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_ham_decomposition_Ky(sd, {5, 0, 0, 0}), std::domain_error);
}

TEST_CASE("ear decomposition covers every edge exactly once") {
  auto sd = study_skeleton(false);
  auto ed = ear_decomposition(sd);
  CHECK(ed.base_cycle == std::vector<int>{1, 2});
  REQUIRE(ed.ears.size() == 2);
  CHECK(ed.ears[0] == std::vector<int>{2, 3, 2});
  CHECK(ed.ears[1] == std::vector<int>{3, 0, 1});

  std::map<std::pair<int, int>, int> covered;
  for (std::size_t i = 0; i < ed.base_cycle.size(); ++i)
    ++covered[{ed.base_cycle[i], ed.base_cycle[(i + 1) % ed.base_cycle.size()]}];
  for (const auto& ear : ed.ears)
    for (std::size_t i = 0; i + 1 < ear.size(); ++i) ++covered[{ear[i], ear[i + 1]}];
  CHECK(covered.size() == static_cast<std::size_t>(sd.edge_count()));
  for (auto [e, cnt] : covered) {
    CHECK(cnt == 1);
    CHECK(sd.edge(e.first, e.second));
  }

  CHECK_THROWS_AS(ear_decomposition(study_skeleton(true)), std::invalid_argument);
  CHECK_THROWS_AS(ear_decomposition(make_skeleton(2, {{0, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(ear_decomposition(make_skeleton(1, {})), std::invalid_argument);
}

TEST_CASE("cycle builder splices ears deterministically") {
  auto sd = study_skeleton(false);
  auto h = build_ham_cycle_Ky(sd, {1, 2, 3, 2});
  REQUIRE(h.kind == WitnessKind::Cycle);
  REQUIRE(h.cycles.size() == 1);
  CHECK(h.cycles[0] == std::vector<int>{6, 3, 1, 4, 7, 0, 2, 5});
  CHECK(verify_witness(build_complete_partite(sd, {1, 2, 3, 2}), h));

  auto big = build_ham_cycle_Ky(sd, {3, 5, 8, 6});
  CHECK(verify_witness(build_complete_partite(sd, {3, 5, 8, 6}), big));

  CHECK_THROWS_AS(build_ham_cycle_Ky(sd, {1, 1, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(build_ham_cycle_Ky(study_skeleton(true), {1, 2, 3, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_ham_cycle_Ky(make_skeleton(2, {{0, 1}}), {1, 1}),
                  std::invalid_argument);
}

TEST_CASE("witness verification rejects broken covers") {
  auto g = digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  HamWitness h;
  h.kind = WitnessKind::Cycle;
  h.cycles = {{0, 1, 2, 3}};
  CHECK(verify_witness(g, h));

  HamWitness missing = h;
  missing.cycles = {{0, 1, 2}};
  CHECK_FALSE(verify_witness(g, missing));

  HamWitness dup = h;
  dup.cycles = {{0, 1, 2, 2}};
  CHECK_FALSE(verify_witness(g, dup));

  HamWitness nonedge = h;
  nonedge.cycles = {{0, 2, 1, 3}};
  CHECK_FALSE(verify_witness(g, nonedge));

  HamWitness twocycles = h;
  twocycles.cycles = {{0, 1}, {2, 3}};
  CHECK_FALSE(verify_witness(g, twocycles));  // kind says single cycle

  HamWitness out_of_range = h;
  out_of_range.cycles = {{0, 1, 2, 7}};
  CHECK_FALSE(verify_witness(g, out_of_range));
}

TEST_CASE("random feasible vectors build verified witnesses") {
  SplitMix64 rng(404);
  auto sd = study_skeleton(false);
  auto cycles = enumerate_cycles(sd);
  for (int t = 0; t < 30; ++t) {
    std::vector<long long> y(4, 0);
    for (std::size_t j = 0; j < cycles.size(); ++j) {
      long long c = 1 + static_cast<long long>(rng.next() % 3);
      for (int v : cycles.cycles[j]) y[v] += c;
    }
    REQUIRE(in_X0(sd, y));
    auto h = build_ham_cycle_Ky(sd, y);
    CHECK(verify_witness(build_complete_partite(sd, y), h));
    auto hd = build_ham_decomposition_Ky(sd, y);
    CHECK(verify_witness(build_complete_partite(sd, y), hd));
  }
}
