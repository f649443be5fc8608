#pragma once

#include <utility>
#include <vector>

#include "tropica/rational.hpp"

namespace tropica::lp {

struct Constraint {
  std::vector<std::pair<int, Rational>> coeffs;  // (free variable index, coefficient)
  bool is_equality = true;
  Rational rhs;  // "= rhs" or ">= rhs"
};

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> x;             // a feasible point when feasible
  std::vector<int> infeasible_rows;    // constraint indices left unsatisfied
};

// Exact rational phase-1 simplex (Bland's rule) over free variables.
FeasibilityResult solve_feasibility(int num_vars,
                                    const std::vector<Constraint>& constraints);

}  // namespace tropica::lp
