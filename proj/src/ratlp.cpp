#include "ghilb/ratlp.hpp"

#include <stdexcept>

namespace ghilb {

namespace {

// Phase-one simplex: minimize the sum of artificial variables for
// T y = d, y >= 0, d >= 0.  The artificials occupy the last m columns and
// form the initial basis.  Returns the basic solution of the first `ncols`
// columns when the optimum is zero, nullopt otherwise.  Bland's rule keeps
// the iteration finite.
std::optional<std::vector<Rat>> phase_one(std::vector<std::vector<Rat>> T, std::vector<Rat> d,
                                          int ncols) {
  const int m = (int)T.size();
  const int total = ncols + m;
  for (int i = 0; i < m; ++i) {
    T[i].resize(total, 0);
    T[i][ncols + i] = 1;
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = ncols + i;

  // reduced costs for the phase-one objective: c = (0,...,0, 1,...,1)
  std::vector<Rat> cost(total, 0);
  for (int j = ncols; j < total; ++j) cost[j] = 1;
  // z_j - c_j with the artificial basis: column sums minus cost
  std::vector<Rat> red(total, 0);
  Rat objective = 0;
  for (int j = 0; j < total; ++j) {
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += T[i][j];
    red[j] = s - cost[j];
  }
  for (int i = 0; i < m; ++i) objective += d[i];

  while (true) {
    int enter = -1;
    for (int j = 0; j < total; ++j)
      if (red[j] > 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = d[i] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) throw std::runtime_error("phase-one objective unbounded");
    // pivot
    Rat piv = T[leave][enter];
    for (int j = 0; j < total; ++j) T[leave][j] /= piv;
    d[leave] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      Rat f = T[i][enter];
      if (f == 0) continue;
      for (int j = 0; j < total; ++j) T[i][j] -= f * T[leave][j];
      d[i] -= f * d[leave];
    }
    Rat f = red[enter];
    for (int j = 0; j < total; ++j) red[j] -= f * T[leave][j];
    objective -= f * d[leave];
    basis[leave] = enter;
  }

  if (objective != 0) return std::nullopt;
  std::vector<Rat> y(ncols, 0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < ncols) y[basis[i]] = d[i];
  return y;
}

}  // namespace

std::optional<std::vector<Rat>> solve_feasibility(int nvars,
                                                  const std::vector<LinearConstraint>& cons) {
  const int m = (int)cons.size();
  // columns: x = u - v with u,v >= 0, then one surplus per inequality
  int nsurplus = 0;
  for (const auto& c : cons)
    if (!c.equality) ++nsurplus;
  const int ncols = 2 * nvars + nsurplus;
  std::vector<std::vector<Rat>> T(m, std::vector<Rat>(ncols, 0));
  std::vector<Rat> d(m);
  int s = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nvars; ++j) {
      T[i][j] = cons[i].a[j];
      T[i][nvars + j] = -cons[i].a[j];
    }
    if (!cons[i].equality) T[i][2 * nvars + s++] = -1;
    d[i] = cons[i].b;
    if (d[i] < 0) {
      for (auto& t : T[i]) t = -t;
      d[i] = -d[i];
    }
  }
  auto y = phase_one(std::move(T), std::move(d), ncols);
  if (!y) return std::nullopt;
  std::vector<Rat> x(nvars);
  for (int j = 0; j < nvars; ++j) x[j] = (*y)[j] - (*y)[nvars + j];
  return x;
}

std::optional<std::vector<Rat>> conic_combination(const std::vector<std::vector<Rat>>& gens,
                                                  const std::vector<Rat>& target) {
  const int n = (int)target.size();
  const int k = (int)gens.size();
  std::vector<std::vector<Rat>> T(n, std::vector<Rat>(k, 0));
  std::vector<Rat> d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) T[i][j] = gens[j][i];
    d[i] = target[i];
    if (d[i] < 0) {
      for (auto& t : T[i]) t = -t;
      d[i] = -d[i];
    }
  }
  return phase_one(std::move(T), std::move(d), k);
}

}  // namespace ghilb
