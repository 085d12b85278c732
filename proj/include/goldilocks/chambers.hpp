#pragma once

#include <gmpxx.h>

#include <vector>

#include "goldilocks/boolfn.hpp"
#include "goldilocks/enumerate.hpp"

namespace goldilocks {

/*! \brief An admissible weight vector: 0 < w_i <= 1 for all i, and for genus
 * zero additionally sum w_i > 2.
 */
struct weight_vector {
  std::vector<mpq_class> w;
  genus_class genus = genus_class::positive;

  int arity() const { return static_cast<int>(w.size()); }
};

/// Throws admissibility_error when wv violates its genus constraints.
void check_admissible(const weight_vector& wv);

/*! \brief The threshold function of a weight vector: f(x) = 1 iff w.x > 1,
 * by exact rational comparison. Weights in the same chamber give the same
 * function.
 */
boolean_function phi_map(const weight_vector& wv);

/// True when some nonempty subset sum equals 1 exactly (the weight lies on a wall).
bool on_wall(const weight_vector& wv);

bool same_chamber(const weight_vector& a, const weight_vector& b);

/*! \brief The walls separating two admissible weights: every nonempty subset
 * S whose sum is on the closed side (<= 1) for one weight and the open side
 * (> 1) for the other. Empty exactly when the weights share a chamber.
 */
std::vector<std::vector<int>> separating_walls(const weight_vector& a,
                                               const weight_vector& b);

/*! \brief A weight vector whose chamber corresponds to f: the normalized
 * w/theta of a positive small (and ample, for genus zero) realization.
 * Requires f Semi-Goldilocks (genus positive) or Goldilocks (genus zero).
 */
weight_vector chamber_representative(const boolean_function& f, genus_class genus);

struct count_row {
  int n = 0;
  genus_class genus = genus_class::positive;
  std::uint64_t count = 0;
  std::uint64_t orbit_count = 0;
};

/// Chamber counts for (n, genus) via the requested engine; `both` insists on
/// engine agreement and throws engine_mismatch_error otherwise.
count_row count_chambers(int n, genus_class genus, engine_kind engine = engine_kind::both,
                         const enumeration_budget& budget = {});

struct identity_report {
  mpz_class lhs; // separable functions on n variables, exhaustive LP scan
  mpz_class rhs; // sum_k C(n,k) 2^k Gold_{g+}(k)
  bool ok = false;
};

/*! \brief Checks the exact identity LTF(n) = sum_k C(n,k) 2^k Gold_{g+}(k),
 * with the left side produced by running all 2^{2^n} functions through the
 * LP separability oracle (n <= 4).
 */
identity_report ltf_identity_check(int n, const enumeration_budget& budget = {});

/// The binomial-sum estimate 2 * sum_{i=0}^n C(2^n - 1, i), exactly.
mpz_class irmatov_estimate(int n);

struct asymptotics_report {
  int n = 0;
  mpz_class estimate;      // irmatov_estimate(n)
  mpq_class genus_ratio;   // Gold_0(n) / Gold_{g+}(n)
  mpq_class estimate_ratio; // 2^n Gold_{g+}(n) / estimate
};

/// Exact ratios for the available n; reported, never asserted against limits.
asymptotics_report ratio_report(int n, const enumeration_budget& budget = {});

} // namespace goldilocks
