#include "wmg/lp.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace wmg {

namespace {

// Dense simplex state.  Columns: original variables, then surplus variables
// for inequality rows, then one artificial per row; the right-hand side is
// stored separately.  Bland's anti-cycling rule throughout.
struct Tableau {
  std::vector<std::vector<Rat>> a;  // m rows, each `cols` wide
  std::vector<Rat> rhs;
  std::vector<int> basis;  // basic column of each row
  int cols = 0;

  void pivot(int row, int col) {
    Rat p = a[row][col];
    assert(!p.is_zero());
    for (int j = 0; j < cols; ++j) a[row][j] /= p;
    rhs[row] /= p;
    for (size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      Rat f = a[i][col];
      if (f.is_zero()) continue;
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[row][j];
      rhs[i] -= f * rhs[row];
    }
    basis[row] = col;
  }

  // Minimizes cost over the allowed columns; returns the objective value.
  Rat minimize(const std::vector<Rat>& cost, int allowed_cols) {
    for (;;) {
      // Reduced cost of column j: cost[j] - sum_i cost[basis[i]] * a[i][j].
      int enter = -1;
      for (int j = 0; j < allowed_cols && enter < 0; ++j) {
        Rat reduced = cost[j];
        for (size_t i = 0; i < a.size(); ++i) {
          if (!a[i][j].is_zero()) reduced -= cost[basis[i]] * a[i][j];
        }
        if (reduced < Rat(0)) enter = j;  // Bland: first eligible column
      }
      if (enter < 0) break;
      int leave = -1;
      Rat best;
      for (size_t i = 0; i < a.size(); ++i) {
        if (!(a[i][enter] > Rat(0))) continue;
        Rat ratio = rhs[i] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = static_cast<int>(i);
        }
      }
      if (leave < 0) {
        throw std::logic_error("linear program unbounded below");
      }
      pivot(leave, enter);
    }
    Rat value(0);
    for (size_t i = 0; i < a.size(); ++i) value += cost[basis[i]] * rhs[i];
    return value;
  }
};

}  // namespace

LpResult solve_lp(int num_vars,
                  const std::vector<LinearConstraint>& constraints,
                  const std::vector<Rat>& minimize) {
  int m = static_cast<int>(constraints.size());
  int surplus = 0;
  for (const auto& c : constraints) {
    if (!c.equality) ++surplus;
  }
  int art_base = num_vars + surplus;
  Tableau t;
  t.cols = art_base + m;
  t.a.assign(m, std::vector<Rat>(t.cols, Rat(0)));
  t.rhs.assign(m, Rat(0));
  t.basis.assign(m, 0);

  int next_surplus = num_vars;
  for (int i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    assert(static_cast<int>(c.coeff.size()) <= num_vars);
    for (size_t j = 0; j < c.coeff.size(); ++j) t.a[i][j] = c.coeff[j];
    t.rhs[i] = c.rhs;
    if (!c.equality) t.a[i][next_surplus++] = Rat(-1);
    if (t.rhs[i] < Rat(0)) {
      for (int j = 0; j < t.cols; ++j) t.a[i][j] = -t.a[i][j];
      t.rhs[i] = -t.rhs[i];
    }
    t.a[i][art_base + i] = Rat(1);
    t.basis[i] = art_base + i;
  }

  // Phase I: drive the artificial variables to zero.
  std::vector<Rat> phase1(t.cols, Rat(0));
  for (int i = 0; i < m; ++i) phase1[art_base + i] = Rat(1);
  if (!t.minimize(phase1, t.cols).is_zero()) {
    return {};  // infeasible
  }
  // Pivot surviving artificials out of the basis; a row with no structural
  // coefficient left is redundant and can be dropped.
  for (int i = static_cast<int>(t.a.size()) - 1; i >= 0; --i) {
    if (t.basis[i] < art_base) continue;
    int col = -1;
    for (int j = 0; j < art_base && col < 0; ++j) {
      if (!t.a[i][j].is_zero()) col = j;
    }
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      t.a.erase(t.a.begin() + i);
      t.rhs.erase(t.rhs.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }

  LpResult result;
  result.feasible = true;
  if (!minimize.empty()) {
    std::vector<Rat> cost(t.cols, Rat(0));
    for (size_t j = 0; j < minimize.size(); ++j) cost[j] = minimize[j];
    // Artificial columns are excluded from Phase II.
    result.objective = t.minimize(cost, art_base);
  }
  result.solution.assign(num_vars, Rat(0));
  for (size_t i = 0; i < t.a.size(); ++i) {
    if (t.basis[i] < num_vars) result.solution[t.basis[i]] = t.rhs[i];
  }
  return result;
}

}  // namespace wmg
