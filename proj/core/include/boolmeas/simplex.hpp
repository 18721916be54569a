#pragma once

#include <vector>

#include "boolmeas/rational.hpp"

namespace boolmeas {

// Dense exact simplex for  max c.x  s.t.  A x <= b, x >= 0  with b >= 0, so
// the slack basis is feasible and no phase one is needed. Pivoting follows
// Bland's rule, which rules out cycling.
struct LpSolution {
  enum class Status { optimal, unbounded };

  Status status = Status::optimal;
  Rational objective;
  std::vector<Rational> primal;  // x
  std::vector<Rational> dual;    // y >= 0 with A^T y >= c, b.y = objective
  std::size_t pivots = 0;
};

LpSolution solve_packing_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                            const std::vector<Rational>& c);

}  // namespace boolmeas
