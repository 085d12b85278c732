#pragma once

#include <gmpxx.h>

#include <vector>

namespace goldilocks {

/// One inequality coeffs . y >= rhs over a free rational vector y.
struct lp_row {
  std::vector<mpq_class> coeffs;
  mpq_class rhs;
};

struct lp_result {
  bool feasible = false;
  /// When feasible: a y satisfying every row exactly.
  std::vector<mpq_class> solution;
  /// When infeasible: row multipliers lambda >= 0 with
  /// sum lambda_k row_k = 0 and sum lambda_k rhs_k > 0.
  std::vector<mpq_class> farkas;
};

/*! \brief Exact feasibility of a system of linear inequalities.
 *
 * Runs a simplex with Bland's rule on the polar cone
 * max b.lambda s.t. A^T lambda = 0, lambda >= 0: an optimum certifies a
 * solution y through the reduced costs, an unbounded ray is a Farkas
 * certificate. All arithmetic is exact rational; there are no tolerances.
 */
lp_result solve_inequalities(int dim, const std::vector<lp_row>& rows);

} // namespace goldilocks
