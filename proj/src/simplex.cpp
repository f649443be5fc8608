#include "simplex.hpp"

#include <cassert>

namespace tropica::lp {

// Dense tableau phase-1 simplex. Free variables are split v = v+ - v-,
// ">=" rows get a surplus column, every row gets an artificial column, and
// we minimize the artificial sum; a positive optimum means infeasible and
// the rows whose artificials stay positive are reported.
FeasibilityResult solve_feasibility(int num_vars,
                                    const std::vector<Constraint>& constraints) {
  const int m = static_cast<int>(constraints.size());
  int surplus = 0;
  for (const auto& c : constraints)
    if (!c.is_equality) ++surplus;

  const int n_split = 2 * num_vars;
  const int n_total = n_split + surplus + m;  // + artificials
  // tableau: m rows of [coeffs | rhs], plus objective row
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(n_total + 1, Rational(0)));
  std::vector<int> basis(m);

  int surplus_at = n_split;
  for (int r = 0; r < m; ++r) {
    const Constraint& c = constraints[r];
    Rational rhs = c.rhs;
    std::vector<Rational> row(n_total, Rational(0));
    for (const auto& [v, coef] : c.coeffs) {
      row[2 * v] += coef;
      row[2 * v + 1] -= coef;
    }
    if (!c.is_equality) row[surplus_at++] = Rational(-1);
    // normalize rhs >= 0 so the artificial basis is feasible
    if (rhs < 0) {
      for (auto& q : row) q = -q;
      rhs = -rhs;
    }
    int art = n_split + surplus + r;
    row[art] = Rational(1);
    basis[r] = art;
    for (int c2 = 0; c2 < n_total; ++c2) T[r][c2] = row[c2];
    T[r][n_total] = rhs;
  }

  // objective: minimize sum of artificials -> reduced costs start as the
  // negated sum of the constraint rows over non-artificial columns
  for (int r = 0; r < m; ++r)
    for (int c2 = 0; c2 <= n_total; ++c2) T[m][c2] -= T[r][c2];
  for (int r = 0; r < m; ++r) T[m][basis[r]] = Rational(0);

  auto pivot = [&](int pr, int pc) {
    Rational piv = T[pr][pc];
    for (int c2 = 0; c2 <= n_total; ++c2) T[pr][c2] /= piv;
    for (int r = 0; r <= m; ++r) {
      if (r == pr) continue;
      Rational f = T[r][pc];
      if (f == 0) continue;
      for (int c2 = 0; c2 <= n_total; ++c2) T[r][c2] -= f * T[pr][c2];
    }
    basis[pr] = pc;
  };

  while (true) {
    int enter = -1;  // Bland: smallest index with negative reduced cost
    for (int c2 = 0; c2 < n_total; ++c2)
      if (T[m][c2] < 0) {
        enter = c2;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int r = 0; r < m; ++r) {
      if (T[r][enter] <= 0) continue;
      Rational ratio = T[r][n_total] / T[r][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded in phase 1: cannot happen, objective >= 0
    pivot(leave, enter);
  }

  FeasibilityResult out;
  Rational obj = -T[m][n_total];
  if (obj == 0) {
    out.feasible = true;
    out.x.assign(num_vars, Rational(0));
    for (int r = 0; r < m; ++r) {
      int b = basis[r];
      if (b < n_split) {
        int v = b / 2;
        if (b % 2 == 0) out.x[v] += T[r][n_total];
        else out.x[v] -= T[r][n_total];
      }
    }
  } else {
    for (int r = 0; r < m; ++r)
      if (basis[r] >= n_split + surplus && T[r][n_total] > 0)
        out.infeasible_rows.push_back(basis[r] - n_split - surplus);
  }
  return out;
}

}  // namespace tropica::lp
