#pragma once

#include <optional>
#include <variant>

#include "goldilocks/boolfn.hpp"
#include "goldilocks/chow.hpp"
#include "goldilocks/ltf.hpp"

namespace goldilocks {

/// Witness that f is not linearly separable.
struct not_separable_certificate {
  asummability_witness witness;
};

/// Points x <= y componentwise with f(x) > f(y).
struct not_positive_certificate {
  std::uint32_t x_code = 0;
  std::uint32_t y_code = 0;
};

/// A variable index i with f(e_i) = 1.
struct not_small_certificate {
  int index = 0;
};

/// A point x with f(x) = 0 = f(negation of x).
struct not_ample_certificate {
  std::uint32_t x_code = 0;
};

using certificate = std::variant<not_separable_certificate, not_positive_certificate,
                                 not_small_certificate, not_ample_certificate>;

/// Checks a claimed non-membership certificate against f.
bool verify_certificate(const boolean_function& f, const certificate& c);

struct class_report {
  bool is_ltf = false;
  bool positive = false;
  bool small = false;
  bool ample = false;
  bool semi_goldilocks = false;
  bool goldilocks = false;
  int degree = 0;
  chow_parameters chow;
  std::optional<realization> witness_realization; // present iff semi_goldilocks
  std::optional<certificate> failure_certificate; // present iff not goldilocks
};

/*! \brief Full classification of a boolean function against the Goldilocks
 * criteria.
 *
 * Combinatorial screens run before the LP. A Semi-Goldilocks function comes
 * with a positive small realization (ample too when Goldilocks); any
 * non-Goldilocks function comes with the lexicographically least certificate
 * for its first failing criterion, checked in the order separability,
 * positivity, smallness, ampleness.
 */
class_report classify(const boolean_function& f);

bool is_semi_goldilocks(const boolean_function& f);
bool is_goldilocks(const boolean_function& f);

/*! \brief The separability-to-Semi-Goldilocks transformation: negates the
 * strictly decreasing variables (by Chow sign) and pins the variables whose
 * singleton is true to zero.
 *
 * The output is Semi-Goldilocks iff f is a threshold function. Two guard
 * branches keep that equivalence exact on degenerate inputs: a
 * non-monotonizable f is returned as its own sign-corrected (non-positive)
 * form, and a function that monotonizes to const1 yields const0.
 */
boolean_function reduce_thres_to_sgold(const boolean_function& f);

/// The dual-pair disjunction Gold(f) or Gold(dual f), evaluated verbatim.
bool reduce_sgold_to_gold(const boolean_function& f);

} // namespace goldilocks
