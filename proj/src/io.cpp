#include "gham/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gham {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw std::invalid_argument("expected a fraction string or integer, got " + v.dump());
}

json fraction_array(const std::vector<Rational>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(format_rational(x));
  return arr;
}

}  // namespace

StepGraphon read_graphon_json(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("partition") || !j.contains("values"))
    throw std::invalid_argument("graphon JSON must have 'partition' and 'values'");
  if (!j["partition"].is_array() || !j["values"].is_array())
    throw std::invalid_argument("'partition' and 'values' must be arrays");

  Partition part;
  for (const auto& v : j["partition"]) part.push_back(rational_from_json(v));
  std::vector<std::vector<Rational>> vals;
  for (const auto& row : j["values"]) {
    if (!row.is_array()) throw std::invalid_argument("'values' must be an array of rows");
    vals.emplace_back();
    for (const auto& v : row) vals.back().push_back(rational_from_json(v));
  }
  return new_step_graphon(std::move(part), std::move(vals));
}

StepGraphon read_graphon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_graphon_json(in);
}

std::string graphon_to_json(const StepGraphon& w) {
  json j;
  j["partition"] = fraction_array(w.partition);
  json rows = json::array();
  for (const auto& row : w.values) rows.push_back(fraction_array(row));
  j["values"] = rows;
  return j.dump(2);
}

std::string report_to_json(const ConditionReport& r) {
  json j;
  j["blocks"] = r.concentration.size();
  j["concentration"] = fraction_array(r.concentration);
  j["degenerate_zero"] = r.degenerate_zero;
  j["single_block"] = r.single_block;
  j["strongly_connected"] = r.condC;
  j["sccs"] = r.sccs;
  j["cycles"] = r.cycles.cycles;
  j["corank"] = r.corank;
  j["full_cycle_rank"] = r.condA;
  j["cone_member"] = r.condBprime;
  j["interior_member"] = r.condB;
  j["cone_certificate"] =
      r.cone_certificate ? fraction_array(r.cone_certificate->coefficients) : json();
  j["interior_certificate"] =
      r.interior_certificate ? fraction_array(r.interior_certificate->coefficients) : json();
  j["limit_decomposition"] = verdict_name(r.verdict_H);
  j["limit_cycle"] = verdict_name(r.verdict_strongH);
  return j.dump(2);
}

std::string witness_to_json(const HamWitness& h) {
  json j;
  j["kind"] = h.kind == WitnessKind::Cycle ? "cycle" : "decomposition";
  j["cycles"] = h.cycles;
  return j.dump(2);
}

std::string digraph_to_edge_list(const SampledDigraph& g) {
  std::ostringstream os;
  os << "n " << g.n << "\n";
  os << "blocks";
  for (int b : g.block_of) os << ' ' << b;
  os << "\n";
  for (auto [i, j] : g.edges) os << i << ' ' << j << "\n";
  return os.str();
}

}  // namespace gham
