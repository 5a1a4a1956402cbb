#include "gham/geometry.hpp"

#include "gham/skeleton.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gham {

RationalMatrix to_rational_matrix(const IncidenceMatrix& z) {
  RationalMatrix out(z.m, z.k());
  for (int j = 0; j < z.k(); ++j)
    for (int i = 0; i < z.m; ++i) out.at(i, j) = z.columns[j][i];
  return out;
}

int rank(RationalMatrix a) {
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int p = -1;
    for (int i = r; i < a.rows; ++i)
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = c; j < a.cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    for (int i = r + 1; i < a.rows; ++i) {
      if (a.at(i, c) == 0) continue;
      Rational f = a.at(i, c) / a.at(r, c);
      for (int j = c; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

// Tableau simplex for max cost.v over Av = b, v >= 0, Bland's rule. The
// pivot budget backs the no-cycling guarantee; blowing it is a logic error.
struct Simplex {
  int m = 0, n = 0;
  std::vector<std::vector<Rational>> t;  // m rows of n+1, rhs last
  std::vector<Rational> red;             // n reduced costs
  Rational obj = 0;
  std::vector<int> basis;
  std::size_t budget = 0;
  std::size_t pivots = 0;

  void pivot(int pr, int pc) {
    if (++pivots > budget) throw std::logic_error("simplex exceeded its pivot budget");
    auto& prow = t[pr];
    const Rational piv = prow[pc];
    for (auto& v : prow) v /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == pr) continue;
      const Rational f = t[r][pc];
      if (f == 0) continue;
      for (int c = 0; c <= n; ++c) t[r][c] -= f * prow[c];
    }
    const Rational f = red[pc];
    if (f != 0) {
      for (int c = 0; c < n; ++c) red[c] -= f * prow[c];
      obj += f * prow[n];
    }
    basis[pr] = pc;
  }

  void maximize() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (red[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return;
      int leave = -1;
      Rational best;
      for (int r = 0; r < m; ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = t[r][n] / t[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) throw std::logic_error("unbounded linear program");
      pivot(leave, enter);
    }
  }
};

// max cost.v over a v = rhs, v >= 0; nullopt when infeasible.
std::optional<std::vector<Rational>> solve_lp(std::vector<std::vector<Rational>> a,
                                              std::vector<Rational> rhs,
                                              const std::vector<Rational>& cost,
                                              std::size_t budget) {
  const int n = static_cast<int>(cost.size());
  int m = static_cast<int>(rhs.size());
  for (int r = 0; r < m; ++r)
    if (rhs[r] < 0) {
      for (auto& v : a[r]) v = -v;
      rhs[r] = -rhs[r];
    }

  Simplex s;
  s.m = m;
  s.n = n + m;
  s.budget = budget;
  s.t.assign(m, std::vector<Rational>(s.n + 1));
  s.basis.resize(m);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) s.t[r][j] = std::move(a[r][j]);
    s.t[r][n + r] = 1;
    s.t[r][s.n] = rhs[r];
    s.basis[r] = n + r;
  }

  // Phase one: artificial basis, maximize minus the artificial sum.
  s.red.assign(s.n, Rational(0));
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) s.red[j] += s.t[r][j];
    s.obj -= s.t[r][s.n];
  }
  s.maximize();
  if (s.obj != 0) return std::nullopt;

  // Kick leftover artificials out of the basis; a row with no eligible
  // pivot is redundant and gets dropped.
  for (int r = 0; r < s.m; ++r) {
    if (s.basis[r] < n) continue;
    int pc = -1;
    for (int j = 0; j < n; ++j)
      if (s.t[r][j] != 0) {
        pc = j;
        break;
      }
    if (pc >= 0) {
      s.pivot(r, pc);
    } else {
      s.t.erase(s.t.begin() + r);
      s.basis.erase(s.basis.begin() + r);
      --s.m;
      --r;
    }
  }
  m = s.m;

  // Phase two: strip artificial columns, install the real objective.
  for (int r = 0; r < m; ++r) s.t[r].erase(s.t[r].begin() + n, s.t[r].begin() + s.n);
  s.n = n;
  s.red = cost;
  s.obj = 0;
  for (int r = 0; r < m; ++r) {
    const Rational& cb = cost[s.basis[r]];
    if (cb == 0) continue;
    for (int j = 0; j < n; ++j) s.red[j] -= cb * s.t[r][j];
    s.obj += cb * s.t[r][n];
  }
  s.maximize();

  std::vector<Rational> v(n, Rational(0));
  for (int r = 0; r < m; ++r) v[s.basis[r]] = s.t[r][n];
  return v;
}

bool all_zero(const std::vector<Rational>& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; });
}

std::size_t pivot_budget(int m, int k) {
  return static_cast<std::size_t>(m) * static_cast<std::size_t>(k) *
         static_cast<std::size_t>(m + k);
}

}  // namespace

std::optional<ConeCertificate> cone_membership(const RationalMatrix& z,
                                               const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != z.rows) throw std::invalid_argument("dimension mismatch");
  const int m = z.rows, k = z.cols;
  if (k == 0) {
    if (!all_zero(x)) return std::nullopt;
    return ConeCertificate{{}, true};
  }
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j < k; ++j) a[r][j] = z.at(r, j);
  auto v = solve_lp(std::move(a), x, std::vector<Rational>(k, Rational(0)),
                    pivot_budget(m, k));
  if (!v) return std::nullopt;
  ConeCertificate cert;
  cert.coefficients = std::move(*v);
  cert.strict = std::all_of(cert.coefficients.begin(), cert.coefficients.end(),
                            [](const Rational& c) { return c > 0; });
  return cert;
}

std::optional<ConeCertificate> relative_interior_membership(const RationalMatrix& z,
                                                            const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != z.rows) throw std::invalid_argument("dimension mismatch");
  const int m = z.rows, k = z.cols;
  if (k == 0) {
    if (!all_zero(x)) return std::nullopt;
    return ConeCertificate{{}, true};
  }

  // Variables: t+ , t- , s_1..s_k with c = (t+ - t-) 1 + s. Maximize t+ - t-.
  const int n = k + 2;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
  for (int r = 0; r < m; ++r) {
    Rational rowsum = 0;
    for (int j = 0; j < k; ++j) {
      a[r][2 + j] = z.at(r, j);
      rowsum += z.at(r, j);
    }
    a[r][0] = rowsum;
    a[r][1] = -rowsum;
  }
  std::vector<Rational> cost(n, Rational(0));
  cost[0] = 1;
  cost[1] = -1;
  auto v = solve_lp(std::move(a), x, cost, pivot_budget(m, k));
  if (!v) return std::nullopt;
  const Rational t = (*v)[0] - (*v)[1];
  if (t <= 0) return std::nullopt;
  ConeCertificate cert;
  cert.strict = true;
  cert.coefficients.reserve(k);
  for (int j = 0; j < k; ++j) cert.coefficients.push_back(t + (*v)[2 + j]);
  return cert;
}

}  // namespace gham
