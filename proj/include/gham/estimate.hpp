#ifndef GHAM_ESTIMATE_HPP
#define GHAM_ESTIMATE_HPP

#include "gham/hamiltonicity.hpp"
#include "gham/step_graphon.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gham {

enum class EstimateMode { Decomposition, Cycle };

struct EstimateConfig {
  StepGraphon graphon;
  std::vector<int> n_values;
  int trials = 2000;
  std::uint64_t master_seed = 42;
  int workers = 1;
  EstimateMode mode = EstimateMode::Decomposition;
  std::uint64_t cycle_budget = kDefaultCycleSearchBudget;
};

struct EstimateRow {
  int n = 0;
  long long successes = 0;
  int trials = 0;
  double p_hat = 0.0;
  double std_err = 0.0;
  long long unknown = 0;  // cycle searches that hit the budget
};

// Monte Carlo success frequencies, one row per n. Trial (row r, index t)
// always uses the stream for global index r * trials + t, so results are
// identical for every worker count.
std::vector<EstimateRow> run_estimate(const EstimateConfig& cfg);

// "n,successes,trials,p_hat,stderr,unknown" header and one row per line;
// p_hat and stderr with six decimal digits.
std::string rows_to_csv(const std::vector<EstimateRow>& rows);

}  // namespace gham

#endif
