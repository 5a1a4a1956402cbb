#ifndef GHAM_GEOMETRY_HPP
#define GHAM_GEOMETRY_HPP

#include "gham/rational.hpp"

#include <optional>
#include <vector>

namespace gham {

struct IncidenceMatrix;

// Dense matrix of exact rationals, row-major.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> entries;

  RationalMatrix() = default;
  RationalMatrix(int r, int c)
      : rows(r), cols(c), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

  Rational& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * cols + j];
  }
};

RationalMatrix to_rational_matrix(const IncidenceMatrix& z);

// Rank over the rationals, exact elimination.
int rank(RationalMatrix a);

struct ConeCertificate {
  std::vector<Rational> coefficients;  // one per generator column
  bool strict = false;                 // every coefficient > 0
};

// Is x a nonnegative combination of the columns of z? Exact feasibility LP;
// nullopt when infeasible, otherwise coefficients with z.c = x.
std::optional<ConeCertificate> cone_membership(const RationalMatrix& z,
                                               const std::vector<Rational>& x);

// Is x in the relative interior of the cone spanned by the columns of z?
// Maximizes t subject to z.c = x, c_j >= t; member iff the optimum is
// positive, in which case every returned coefficient is > 0.
std::optional<ConeCertificate> relative_interior_membership(const RationalMatrix& z,
                                                            const std::vector<Rational>& x);

}  // namespace gham

#endif
