#ifndef GHAM_CONDITIONS_HPP
#define GHAM_CONDITIONS_HPP

#include "gham/geometry.hpp"
#include "gham/skeleton.hpp"
#include "gham/step_graphon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gham {

enum class Verdict { Zero, One, Indeterminate };

std::string verdict_name(Verdict v);

// Full analysis of one step graphon: the four structural conditions, the
// certificates behind them, and the limit verdicts they imply.
struct ConditionReport {
  bool condA = false;       // co-rank of the node-cycle matrix is zero
  bool condB = false;       // concentration lies in the relative interior of the cone
  bool condBprime = false;  // concentration lies in the cone
  bool condC = false;       // skeleton strongly connected (m = 1 by convention)
  int corank = 0;
  std::optional<ConeCertificate> cone_certificate;      // witness for condBprime
  std::optional<ConeCertificate> interior_certificate;  // witness for condB
  Verdict verdict_H = Verdict::Indeterminate;
  Verdict verdict_strongH = Verdict::Indeterminate;
  bool degenerate_zero = false;  // graphon identically zero
  bool single_block = false;     // condC holds by the one-node convention
  ConcentrationVector concentration;
  std::vector<std::vector<int>> sccs;
  CycleSet cycles;
};

ConditionReport check_conditions(const StepGraphon& w,
                                 std::size_t cycle_cap = kDefaultCycleCap);

}  // namespace gham

#endif
