#ifndef GHAM_STEP_GRAPHON_HPP
#define GHAM_STEP_GRAPHON_HPP

#include "gham/rational.hpp"

#include <vector>

namespace gham {

// Piecewise-constant edge-probability kernel on [0,1]^2. The partition
// 0 = s_0 < ... < s_m = 1 induces blocks R_ij = [s_{i-1}, s_i) x [s_{j-1}, s_j)
// and the kernel takes the constant value values[i][j] on R_ij (0-based here).
struct StepGraphon {
  std::vector<Rational> partition;             // m+1 points, 0 .. 1
  std::vector<std::vector<Rational>> values;   // m x m, entries in [0,1]

  int block_count() const { return static_cast<int>(values.size()); }
  const Rational& value(int i, int j) const { return values[i][j]; }
  Rational block_length(int i) const { return partition[i + 1] - partition[i]; }

  bool is_zero() const;
  bool is_symmetric() const;
  bool has_self_loop_block() const;

  // Block containing u: s_i <= u < s_{i+1}; u = 1 belongs to the last block.
  int block_of_point(const Rational& u) const;
  Rational evaluate(const Rational& s, const Rational& t) const;
};

using Partition = std::vector<Rational>;
using ConcentrationVector = std::vector<Rational>;

// Validates and builds. Throws std::invalid_argument on bad input.
StepGraphon new_step_graphon(Partition partition,
                             std::vector<std::vector<Rational>> values);

// Block lengths s_i - s_{i-1}; positive, sum exactly 1.
ConcentrationVector concentration_vector(const StepGraphon& w);

// Splits the block containing new_point in both axes, duplicating values.
// Represents the same function on [0,1]^2 over a finer grid.
StepGraphon refine_partition(const StepGraphon& w, const Rational& new_point);

// q_ij = max(p_ij, p_ji) when p_ij * p_ji = 0, else p_ij * p_ji.
StepGraphon symmetrize(const StepGraphon& w);

// Every nonzero value becomes 1; support unchanged.
StepGraphon saturate(const StepGraphon& w);

// Splits the given block's interval at its midpoint and zeroes the two new
// diagonal sub-blocks, removing that node's skeleton self-loop. When the
// block's strongly connected component is a singleton, one refinement of the
// block is applied first so the component has two nodes before the cut.
// Throws std::domain_error when the block has no self-loop.
StepGraphon surgery_remove_self_loop(const StepGraphon& w, int block);

// Applies surgery to the lowest-indexed self-loop block until none remain.
StepGraphon loop_free_reduction(StepGraphon w);

}  // namespace gham

#endif
