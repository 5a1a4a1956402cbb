#include "gham/step_graphon.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gham {

namespace {

// Tarjan over the nonzero-value adjacency; returns the component id per block.
// Local helper: the graphon module must not depend on the skeleton module.
std::vector<int> value_scc_ids(const StepGraphon& w) {
  int m = w.block_count();
  std::vector<int> index(m, -1), low(m, 0), comp(m, -1);
  std::vector<char> onstack(m, 0);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    int v;
    int next_child;
  };
  for (int root = 0; root < m; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    onstack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_child < m) {
        int wv = f.next_child++;
        if (w.value(f.v, wv) == 0) continue;
        if (index[wv] == -1) {
          index[wv] = low[wv] = next_index++;
          stack.push_back(wv);
          onstack[wv] = 1;
          call.push_back({wv, 0});
        } else if (onstack[wv]) {
          low[f.v] = std::min(low[f.v], index[wv]);
        }
      } else {
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          for (;;) {
            int u = stack.back();
            stack.pop_back();
            onstack[u] = 0;
            comp[u] = next_comp;
            if (u == v) break;
          }
          ++next_comp;
        }
      }
    }
  }
  return comp;
}

}  // namespace

bool StepGraphon::is_zero() const {
  for (const auto& row : values)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

bool StepGraphon::is_symmetric() const {
  int m = block_count();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (values[i][j] != values[j][i]) return false;
  return true;
}

bool StepGraphon::has_self_loop_block() const {
  for (int i = 0; i < block_count(); ++i)
    if (values[i][i] != 0) return true;
  return false;
}

int StepGraphon::block_of_point(const Rational& u) const {
  if (u < 0 || u > 1) throw std::invalid_argument("point outside [0,1]");
  int m = block_count();
  for (int i = 0; i < m; ++i)
    if (u < partition[i + 1]) return i;
  return m - 1;  // u == 1
}

Rational StepGraphon::evaluate(const Rational& s, const Rational& t) const {
  return values[block_of_point(s)][block_of_point(t)];
}

StepGraphon new_step_graphon(Partition partition,
                             std::vector<std::vector<Rational>> values) {
  if (partition.size() < 2) throw std::invalid_argument("partition needs at least two points");
  if (partition.front() != 0 || partition.back() != 1)
    throw std::invalid_argument("partition must start at 0 and end at 1");
  for (size_t i = 0; i + 1 < partition.size(); ++i)
    if (!(partition[i] < partition[i + 1]))
      throw std::invalid_argument("partition must be strictly increasing");
  size_t m = partition.size() - 1;
  if (values.size() != m) throw std::invalid_argument("value matrix dimension mismatch");
  for (const auto& row : values) {
    if (row.size() != m) throw std::invalid_argument("value matrix dimension mismatch");
    for (const auto& v : row)
      if (v < 0 || v > 1) throw std::invalid_argument("value outside [0,1]");
  }
  return StepGraphon{std::move(partition), std::move(values)};
}

ConcentrationVector concentration_vector(const StepGraphon& w) {
  ConcentrationVector x;
  x.reserve(w.block_count());
  for (int i = 0; i < w.block_count(); ++i) x.push_back(w.block_length(i));
  return x;
}

StepGraphon refine_partition(const StepGraphon& w, const Rational& new_point) {
  if (!(new_point > 0 && new_point < 1))
    throw std::invalid_argument("refinement point must lie strictly inside (0,1)");
  for (const auto& p : w.partition)
    if (p == new_point)
      throw std::invalid_argument("refinement point duplicates an existing boundary");

  int b = w.block_of_point(new_point);
  int m = w.block_count();

  Partition part;
  part.reserve(m + 2);
  for (int i = 0; i <= b; ++i) part.push_back(w.partition[i]);
  part.push_back(new_point);
  for (int i = b + 1; i <= m; ++i) part.push_back(w.partition[i]);

  // old block r maps to new row(s); block b is duplicated
  auto src = [&](int r) { return r <= b ? r : r - 1; };
  std::vector<std::vector<Rational>> vals(m + 1, std::vector<Rational>(m + 1));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) vals[i][j] = w.value(src(i), src(j));
  return StepGraphon{std::move(part), std::move(vals)};
}

StepGraphon symmetrize(const StepGraphon& w) {
  int m = w.block_count();
  std::vector<std::vector<Rational>> q(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const Rational& pij = w.value(i, j);
      const Rational& pji = w.value(j, i);
      Rational v = (pij * pji == 0) ? std::max(pij, pji) : pij * pji;
      q[i][j] = v;
      q[j][i] = v;
    }
  return StepGraphon{w.partition, std::move(q)};
}

StepGraphon saturate(const StepGraphon& w) {
  StepGraphon out = w;
  for (auto& row : out.values)
    for (auto& v : row)
      if (v != 0) v = 1;
  return out;
}

StepGraphon surgery_remove_self_loop(const StepGraphon& w, int block) {
  if (block < 0 || block >= w.block_count())
    throw std::invalid_argument("block index out of range");
  if (w.value(block, block) == 0)
    throw std::domain_error("block has no self-loop");

  StepGraphon cur = w;
  // the cut below needs the block's SCC to have at least two nodes;
  // a lone self-loop node gets there by one refinement of its own block
  auto comp = value_scc_ids(cur);
  bool singleton = true;
  for (int j = 0; j < cur.block_count() && singleton; ++j)
    if (j != block && comp[j] == comp[block]) singleton = false;
  if (singleton) {
    Rational mid = (cur.partition[block] + cur.partition[block + 1]) / 2;
    cur = refine_partition(cur, mid);
  }

  Rational mid = (cur.partition[block] + cur.partition[block + 1]) / 2;
  StepGraphon out = refine_partition(cur, mid);
  out.values[block][block] = 0;
  out.values[block + 1][block + 1] = 0;
  return out;
}

StepGraphon loop_free_reduction(StepGraphon w) {
  int guard = 2 * w.block_count() + 64;
  for (int iter = 0; iter < guard; ++iter) {
    int target = -1;
    for (int i = 0; i < w.block_count(); ++i)
      if (w.value(i, i) != 0) {
        target = i;
        break;
      }
    if (target < 0) return w;
    w = surgery_remove_self_loop(w, target);
  }
  throw std::logic_error("loop_free_reduction failed to terminate");
}

}  // namespace gham
