#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "goldilocks/boolfn.hpp"

namespace goldilocks {

/*! \brief The Chow parameters (m, a_1..a_n) of a boolean function.
 *
 * m is the size of the true set; a_i counts true points with x_i = 1 plus
 * false points with x_i = 0. For linear threshold functions these are a
 * complete invariant.
 */
struct chow_parameters {
  std::int64_t m = 0;
  std::vector<std::int64_t> a;

  friend bool operator==(const chow_parameters&, const chow_parameters&) = default;

  /// "m;a_1,a_2,...,a_n" — the CLI serialization.
  std::string to_string() const;
};

chow_parameters chow(const boolean_function& f);

/// Indices i with a_i = 2^{n-1} (1-based).
std::set<int> weak_variables(const boolean_function& f);

/// Number of variables that are not weak.
int degree(const boolean_function& f);

/*! \brief Canonical form of a positive LTF under the S_n action.
 *
 * The representative's a-vector is nonincreasing; applying
 * sorting_permutation to the original function recovers the representative.
 */
struct canonical_form {
  boolean_function representative;
  std::vector<int> sorting_permutation;
  std::vector<int> multiplicities; // repeat counts of equal a-values
};

/*! \brief Canonicalizes a positive LTF by stably sorting its a-vector in
 * nonincreasing order (ties broken by original index).
 *
 * Callers that have already established LTF-ness should pass
 * check_threshold = false; with the check enabled a non-LTF input raises
 * not_threshold_error.
 */
canonical_form canonicalize(const boolean_function& f, bool check_threshold = true);

/// n! / prod(multiplicity!) over the distinct a-values of a positive LTF.
std::uint64_t orbit_size(const boolean_function& f, bool check_threshold = true);

/// Orbit size computed directly from an a-vector (any order).
std::uint64_t orbit_size_from_a(std::vector<std::int64_t> a);

} // namespace goldilocks
