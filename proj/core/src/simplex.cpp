#include "boolmeas/simplex.hpp"

#include <optional>

#include "boolmeas/error.hpp"

namespace boolmeas {

LpSolution solve_packing_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                            const std::vector<Rational>& c) {
  const std::size_t m = b.size();
  const std::size_t n = c.size();
  if (a.size() != m) throw ValidationError("simplex: row count mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw ValidationError("simplex: column count mismatch");
  }
  for (const auto& bi : b) {
    if (bi < 0) throw ValidationError("simplex: right-hand side must be nonnegative");
  }

  // Columns 0..n-1 structural, n..n+m-1 slack, n+m the right-hand side.
  // Row m holds reduced costs in the form z - c.x = 0.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  LpSolution sol;
  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < n + m && !enter; ++j) {
      if (t[m][j] < 0) enter = j;
    }
    if (!enter) break;

    std::optional<std::size_t> leave;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][*enter] <= 0) continue;
      const Rational ratio = t[i][n + m] / t[i][*enter];
      if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (!leave) {
      sol.status = LpSolution::Status::unbounded;
      return sol;
    }

    const std::size_t r = *leave, e = *enter;
    const Rational pivot = t[r][e];
    for (auto& v : t[r]) v /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r || t[i][e] == 0) continue;
      const Rational f = t[i][e];
      for (std::size_t j = 0; j < width; ++j) {
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
      }
    }
    basis[r] = e;
    ++sol.pivots;
  }

  sol.objective = t[m][n + m];
  sol.primal.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) sol.primal[basis[i]] = t[i][n + m];
  }
  sol.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) sol.dual[i] = t[m][n + i];
  return sol;
}

}  // namespace boolmeas
