#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "goldilocks/boolfn.hpp"

namespace goldilocks {

/// Which side constraints find_realization should enforce.
struct constraint_set {
  bool positive = false;
  bool small = false;
  bool ample = false;
};

/*! \brief An exact rational realization (w, theta) of a threshold function,
 * under the sgn(0) = 0 convention: f(x) = 1 iff w.x > theta.
 *
 * The positivity/smallness/ampleness flags are derived from the numbers and
 * never stored.
 */
class realization {
public:
  realization(std::vector<mpq_class> w, mpq_class theta);

  const std::vector<mpq_class>& w() const { return w_; }
  const mpq_class& theta() const { return theta_; }
  int arity() const { return static_cast<int>(w_.size()); }

  /// Exact check over the full cube.
  bool realizes(const boolean_function& f) const;

  bool positive() const; // all w_i > 0
  bool small() const;    // all w_i <= theta
  bool ample() const;    // sum w_i > 2 theta

private:
  std::vector<mpq_class> w_;
  mpq_class theta_;
};

/*! \brief A certificate that a function is not linearly separable:
 * nonnegative integers c indexed by cube code with equal counts and equal
 * weighted point sums over the true and false sets, not all zero.
 */
struct asummability_witness {
  std::vector<mpz_class> c;

  bool verify(const boolean_function& f) const;
};

struct realization_result {
  std::optional<realization> value;
  /// Present exactly when the unconstrained problem is infeasible.
  std::optional<asummability_witness> witness;
};

/*! \brief Finds an exact rational realization of f subject to the requested
 * side constraints, or reports infeasibility.
 *
 * Strictness is encoded without tolerances: w.x >= theta + 1 on the true
 * set, w.x <= theta on the false set, w_i >= 1 for positivity and
 * sum w >= 2 theta + 1 for ampleness (rational realizations scale, so unit
 * margins lose no generality). For the unconstrained case an infeasibility
 * comes with an asummability witness extracted from the Farkas dual.
 */
realization_result find_realization(const boolean_function& f, constraint_set cs = {});

/// Linear separability, decided by exact LP feasibility.
bool is_threshold(const boolean_function& f);

/*! \brief Bias-lowering construction: from any realization of an ample f,
 * produces an ample realization with the same weights by dropping theta to
 * the maximum of w.x over the false set (theta unchanged when the input is
 * already ample; const1 gets theta' = (sum w - 1)/2 when needed).
 */
realization amplify(const realization& r, const boolean_function& f);

/*! \brief The degree-raising bijection from Semi-Goldilocks LTFs to
 * nondegenerate positive LTFs: h is 1 wherever a weak coordinate of f is
 * set, and agrees with f elsewhere.
 */
boolean_function phi_nondegenerate(const boolean_function& f);

/// Inverse of phi_nondegenerate: zeroes the coordinates whose singleton is true.
boolean_function phi_inverse(const boolean_function& h);

/// Renders an exact rational as "p/q" (or "p" for integers).
std::string rational_to_string(const mpq_class& q);

/// Parses "p", "p/q", or a plain decimal like "0.75" into an exact rational.
mpq_class rational_from_string(const std::string& text);

} // namespace goldilocks
