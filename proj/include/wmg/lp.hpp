// Exact-rational linear programming (dense two-phase simplex).
//
// Small helper used by the lattice-convexity test (convex-hull membership)
// and the separating-region search.  All variables are implicitly >= 0;
// callers encode free variables or strict inequalities themselves.
#pragma once

#include <vector>

#include "wmg/rational.hpp"

namespace wmg {

// coeff . x  (>= | ==)  rhs.   "<=" rows are negated by the caller.
struct LinearConstraint {
  std::vector<Rat> coeff;
  Rat rhs;
  bool equality = false;
};

struct LpResult {
  bool feasible = false;
  std::vector<Rat> solution;  // one value per variable when feasible
  Rat objective;              // value of the minimized objective, if any
};

// Finds x >= 0 satisfying the constraints; when `minimize` is non-empty it
// is the objective vector and the returned solution attains the minimum.
// Uses Bland's rule, so it always terminates; objectives passed by this
// library are bounded below by construction.
LpResult solve_lp(int num_vars, const std::vector<LinearConstraint>& constraints,
                  const std::vector<Rat>& minimize = {});

}  // namespace wmg
