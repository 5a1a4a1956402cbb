#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "gham/presets.hpp"
#include "gham/skeleton.hpp"

using namespace gham;

namespace {

SkeletonGraph study_skeleton(bool with_loop) {
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}};
  if (with_loop) edges.push_back({3, 3});
  return make_skeleton(4, edges);
}

}  // namespace

TEST_CASE("skeleton of a graphon keeps exactly the support") {
  auto s = skeleton_of(preset_graphon("case-a"));
  CHECK(s.m == 4);
  CHECK(s.edge_count() == 7);
  CHECK(s.edge(0, 1));
  CHECK(s.edge(3, 3));
  CHECK_FALSE(s.edge(1, 0));
  CHECK(s.has_self_loop());
  CHECK(s.edge_list() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 0}, {3, 2}, {3, 3}});

  auto sd = skeleton_of(preset_graphon("case-d"));
  CHECK(sd.edge_count() == 6);
  CHECK_FALSE(sd.has_self_loop());

  CHECK_THROWS_AS(make_skeleton(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("strongly connected components in canonical order") {
  auto s = study_skeleton(true);
  auto sccs = strongly_connected_components(s);
  REQUIRE(sccs.size() == 1);
  CHECK(sccs[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(is_strongly_connected(s));

  auto chain = make_skeleton(3, {{0, 1}, {1, 2}});
  auto cs = strongly_connected_components(chain);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == std::vector<int>{0});
  CHECK_FALSE(is_strongly_connected(chain));

  auto split = make_skeleton(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}});
  auto ss = strongly_connected_components(split);
  REQUIRE(ss.size() == 2);
  CHECK(ss[0] == std::vector<int>{0, 1});
  CHECK(ss[1] == std::vector<int>{2, 3});
}

TEST_CASE("bipartite double counts its components") {
  auto s = study_skeleton(true);
  auto b = bipartite_double(s);
  CHECK(b.m == 4);
  CHECK(b.edges.size() == 7);
  CHECK(b.component_count == 1);

  auto sd = study_skeleton(false);
  CHECK(bipartite_double(sd).component_count == 2);

  auto empty = make_skeleton(2, {});
  CHECK(bipartite_double(empty).component_count == 4);
}

TEST_CASE("cycle enumeration is canonical and capped") {
  auto s = study_skeleton(true);
  auto cycles = enumerate_cycles(s);
  REQUIRE(cycles.size() == 4);
  CHECK(cycles.cycles[0] == Cycle{3});
  CHECK(cycles.cycles[1] == Cycle{1, 2});
  CHECK(cycles.cycles[2] == Cycle{2, 3});
  CHECK(cycles.cycles[3] == Cycle{0, 1, 2, 3});

  auto tri = make_skeleton(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}});
  auto tc = enumerate_cycles(tri);
  REQUIRE(tc.size() == 3);
  CHECK(tc.cycles[0] == Cycle{0, 1});
  CHECK(tc.cycles[1] == Cycle{1, 2});
  CHECK(tc.cycles[2] == Cycle{0, 1, 2});

  // complete digraph on five nodes holds 84 simple cycles
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) all.push_back({i, j});
  auto k5 = make_skeleton(5, all);
  CHECK(enumerate_cycles(k5).size() == 84);
  CHECK(enumerate_cycles(k5, 84).size() == 84);
  CHECK_THROWS_AS(enumerate_cycles(k5, 50), std::runtime_error);
}

TEST_CASE("incidence matrix columns mark visited blocks") {
  auto s = study_skeleton(true);
  auto cycles = enumerate_cycles(s);
  auto z = incidence_matrix(s, cycles);
  REQUIRE(z.k() == 4);
  CHECK(z.columns[0] == std::vector<int>{0, 0, 0, 1});
  CHECK(z.columns[1] == std::vector<int>{0, 1, 1, 0});
  CHECK(z.columns[2] == std::vector<int>{0, 0, 1, 1});
  CHECK(z.columns[3] == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("corank agrees between elimination and component formula") {
  auto s = study_skeleton(true);
  CHECK(corank(s, incidence_matrix(s, enumerate_cycles(s))) == 0);

  auto sd = study_skeleton(false);
  CHECK(corank(sd, incidence_matrix(sd, enumerate_cycles(sd))) == 1);

  // no cycles at all: rank zero, and each singleton component contributes one
  auto chain = make_skeleton(2, {{0, 1}});
  CHECK(corank(chain, incidence_matrix(chain, enumerate_cycles(chain))) == 2);

  // two disjoint two-cycles: each double splits in two components, so each
  // component contributes one
  auto pair2 = make_skeleton(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  CHECK(corank(pair2, incidence_matrix(pair2, enumerate_cycles(pair2))) == 2);
}

TEST_CASE("undirected collapse generators") {
  auto s = make_skeleton(2, {{0, 1}, {1, 0}, {1, 1}});
  auto a = node_edge_incidence(s);
  REQUIRE(a.k() == 2);
  CHECK(a.columns[0] == std::vector<int>{1, 1});  // the edge {0,1}
  CHECK(a.columns[1] == std::vector<int>{0, 1});  // the loop at 1

  auto bad = make_skeleton(2, {{0, 1}});
  CHECK_THROWS_AS(node_edge_incidence(bad), std::invalid_argument);
}
