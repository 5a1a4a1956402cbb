#ifndef GHAM_IO_HPP
#define GHAM_IO_HPP

#include "gham/conditions.hpp"
#include "gham/hamiltonicity.hpp"
#include "gham/sampling.hpp"
#include "gham/step_graphon.hpp"

#include <iosfwd>
#include <string>

namespace gham {

// JSON object with "partition" (m+1 entries) and "values" (m x m). Entries
// are fraction strings ("9/16"), decimal strings ("0.5625", read exactly),
// or JSON integers. Floating point literals are rejected; write a string.
// Throws std::invalid_argument on malformed input.
StepGraphon read_graphon_json(std::istream& in);
StepGraphon read_graphon_file(const std::string& path);

std::string graphon_to_json(const StepGraphon& w);

std::string report_to_json(const ConditionReport& r);

std::string witness_to_json(const HamWitness& h);

// Plain text: "n <count>", "blocks <b_0> ... <b_{n-1}>", then one "i j" line
// per directed edge in lexicographic order.
std::string digraph_to_edge_list(const SampledDigraph& g);

}  // namespace gham

#endif
