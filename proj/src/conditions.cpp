#include "gham/conditions.hpp"

namespace gham {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Zero:
      return "Zero";
    case Verdict::One:
      return "One";
    default:
      return "Indeterminate";
  }
}

ConditionReport check_conditions(const StepGraphon& w, std::size_t cycle_cap) {
  ConditionReport rep;
  rep.concentration = concentration_vector(w);

  SkeletonGraph s = skeleton_of(w);
  rep.sccs = strongly_connected_components(s);
  rep.cycles = enumerate_cycles(s, cycle_cap);
  IncidenceMatrix z = incidence_matrix(s, rep.cycles);
  rep.corank = corank(s, z);
  rep.condA = rep.corank == 0;
  rep.single_block = s.m == 1;
  rep.condC = rep.sccs.size() <= 1;

  RationalMatrix zr = to_rational_matrix(z);
  rep.cone_certificate = cone_membership(zr, rep.concentration);
  rep.condBprime = rep.cone_certificate.has_value();
  rep.interior_certificate = relative_interior_membership(zr, rep.concentration);
  rep.condB = rep.interior_certificate.has_value();

  if (w.is_zero()) {
    // No edges ever get sampled, so no cycle cover exists for any n >= 1.
    rep.degenerate_zero = true;
    rep.verdict_H = Verdict::Zero;
    rep.verdict_strongH = Verdict::Zero;
    return rep;
  }

  if (!rep.condA || !rep.condBprime) {
    rep.verdict_H = Verdict::Zero;
    rep.verdict_strongH = Verdict::Zero;
  } else if (rep.condB && rep.condC) {
    rep.verdict_H = Verdict::One;
    rep.verdict_strongH = Verdict::One;
  } else if (rep.condB) {
    rep.verdict_H = Verdict::One;
    rep.verdict_strongH = Verdict::Zero;
  } else {
    rep.verdict_H = Verdict::Indeterminate;
    rep.verdict_strongH = Verdict::Indeterminate;
  }
  return rep;
}

}  // namespace gham
