#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "gham/conditions.hpp"
#include "gham/estimate.hpp"
#include "gham/io.hpp"
#include "gham/presets.hpp"

using namespace gham;

TEST_CASE("graphon json round trip") {
  for (const char* name : {"case-a", "case-b", "case-c", "case-d"}) {
    auto w = preset_graphon(name);
    std::istringstream in(graphon_to_json(w));
    auto back = read_graphon_json(in);
    CHECK(back.partition == w.partition);
    CHECK(back.values == w.values);
  }
}

TEST_CASE("accepts fraction strings, exact decimals, and integers") {
  std::istringstream in(
      R"({"partition": ["0", "0.25", 1], "values": [["1/2", "0.5"], [0, 1]]})");
  auto w = read_graphon_json(in);
  CHECK(w.block_count() == 2);
  CHECK(w.partition[1] == Rational(1, 4));
  CHECK(w.value(0, 0) == Rational(1, 2));
  CHECK(w.value(0, 1) == Rational(1, 2));
  CHECK(w.value(1, 0) == Rational(0));
  CHECK(w.value(1, 1) == Rational(1));
}

TEST_CASE("rejects malformed documents") {
  auto read = [](const char* text) {
    std::istringstream in(text);
    return read_graphon_json(in);
  };
  CHECK_THROWS_AS(read("not json"), std::invalid_argument);
  CHECK_THROWS_AS(read("{}"), std::invalid_argument);
  CHECK_THROWS_AS(read(R"({"partition": ["0", "1"]})"), std::invalid_argument);
  // floating point literals are ambiguous; the reader demands strings
  CHECK_THROWS_AS(read(R"({"partition": [0, 0.25, 1], "values": [[0,0],[0,0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read(R"({"partition": ["0", "1"], "values": [["2"]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read(R"({"partition": ["0", "1"], "values": "x"})"), std::invalid_argument);
}

TEST_CASE("file reading") {
  const char* path = "/tmp/gham_io_test_graphon.json";
  {
    std::ofstream f(path);
    f << graphon_to_json(preset_graphon("case-d"));
  }
  auto w = read_graphon_file(path);
  CHECK(w.values == preset_graphon("case-d").values);
  std::remove(path);
  CHECK_THROWS_AS(read_graphon_file("/tmp/gham_definitely_missing.json"),
                  std::invalid_argument);
}

TEST_CASE("condition report serialization") {
  auto rep = check_conditions(preset_graphon("case-b"));
  auto j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j["blocks"] == 4);
  CHECK(j["concentration"][0] == "1/8");
  CHECK(j["strongly_connected"] == true);
  CHECK(j["corank"] == 0);
  CHECK(j["full_cycle_rank"] == true);
  CHECK(j["cone_member"] == true);
  CHECK(j["interior_member"] == false);
  CHECK(j["interior_certificate"].is_null());
  CHECK(j["cone_certificate"].is_array());
  CHECK(j["limit_decomposition"] == "Indeterminate");
  CHECK(j["limit_cycle"] == "Indeterminate");
  CHECK(j["cycles"].size() == 4);
}

TEST_CASE("witness serialization") {
  HamWitness h;
  h.kind = WitnessKind::Cycle;
  h.cycles = {{0, 1, 2}};
  auto j = nlohmann::json::parse(witness_to_json(h));
  CHECK(j["kind"] == "cycle");
  CHECK(j["cycles"][0] == nlohmann::json::array({0, 1, 2}));

  h.kind = WitnessKind::Decomposition;
  CHECK(nlohmann::json::parse(witness_to_json(h))["kind"] == "decomposition");
}

TEST_CASE("edge list format") {
  SampledDigraph g;
  g.n = 3;
  g.block_count = 2;
  g.block_of = {0, 1, 1};
  g.edges = {{0, 1}, {2, 0}};
  CHECK(digraph_to_edge_list(g) == "n 3\nblocks 0 1 1\n0 1\n2 0\n");
}

TEST_CASE("csv formatting") {
  EstimateRow a;
  a.n = 10;
  a.successes = 10;
  a.trials = 10;
  a.p_hat = 1.0;
  a.std_err = 0.0;
  EstimateRow b;
  b.n = 20;
  b.successes = 5;
  b.trials = 10;
  b.p_hat = 0.5;
  b.std_err = 0.15811388300841897;
  b.unknown = 2;
  CHECK(rows_to_csv({a, b}) ==
        "n,successes,trials,p_hat,stderr,unknown\n"
        "10,10,10,1.000000,0.000000,0\n"
        "20,5,10,0.500000,0.158114,2\n");
}
