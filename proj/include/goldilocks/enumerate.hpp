#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "goldilocks/boolfn.hpp"
#include "goldilocks/chow.hpp"

namespace goldilocks {

enum class genus_class { zero, positive };
enum class engine_kind { direct, sd, both };

struct enumeration_budget {
  int max_n_direct = 7;
  int max_n_sd = 7;
  int workers = 1;
};

struct count_result {
  std::uint64_t count = 0;
  std::uint64_t orbit_count = 0;

  friend bool operator==(const count_result&, const count_result&) = default;
};

/*! \brief Streams every monotone function on n variables exactly once, by
 * the recursive pair construction f = (f0, f1) with f0 <= f1 pointwise.
 *
 * Exhaustive streaming is capped at n <= 6.
 */
void monotone_functions(int n, const std::function<void(const boolean_function&)>& sink);

std::uint64_t count_monotone(int n);

/*! \brief Truth tables (packed in the low 2^n bits) of every positive
 * threshold function on n <= 6 variables, in a deterministic order.
 */
const std::vector<std::uint64_t>& positive_ltf_level(int n);

/*! \brief Positivity-constrained separability test for monotone functions:
 * an exact LP over the minimal-true and maximal-false points only.
 *
 * Equivalent to is_threshold on monotone inputs (a monotone threshold
 * function always has a positive realization); callers must not pass
 * non-monotone functions.
 */
bool monotone_threshold_test(const boolean_function& f);

/*! \brief A canonical class representative for the counting recursion: a
 * positive self-dual LTF on n+1 variables with nonincreasing a-vector.
 */
struct sd_representative {
  boolean_function fn;
  chow_parameters chow;
};

/*! \brief One canonical representative per self-dualization class containing
 * any n-variable threshold function, built by self-dualizing the canonical
 * positive LTFs on n variables and renormalizing.
 */
std::vector<sd_representative> sd_representatives(int n,
                                                  const enumeration_budget& budget = {});

/// Number of Semi-Goldilocks n-variable functions in the class of rep.
std::uint64_t sgold_sd(const sd_representative& rep);

/// Number of Goldilocks n-variable functions in the class of rep.
std::uint64_t gold_sd(const sd_representative& rep);

/*! \brief Direct engine: filters the monotone stream by smallness (and
 * ampleness for genus zero) and separability; counts functions and their
 * S_n classes.
 */
count_result count_direct(int n, genus_class genus, const enumeration_budget& budget = {});

/*! \brief Class-recursion engine: sums sgold_sd / gold_sd over the canonical
 * representatives; orbit_count adds one per qualifying distinct reduction.
 */
count_result count_sd(int n, genus_class genus, const enumeration_budget& budget = {});

} // namespace goldilocks
