#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "goldilocks/errors.hpp"

namespace goldilocks {

/// Hard cap on the number of variables; guards 2^n truth-table allocations.
inline constexpr int arity_max = 12;

/*! \brief A point of the boolean cube {0,1}^n.
 *
 * Points are addressed by their code \f$\sum_i x_i 2^{i-1}\f$, so variable
 * x_1 sits in the least significant bit.
 */
class point {
public:
  point(int arity, std::uint32_t code);

  static point from_bits(const std::vector<bool>& bits);

  int arity() const { return arity_; }
  std::uint32_t code() const { return code_; }

  /// Value of x_i (1-based variable index).
  bool bit(int i) const;

  /// The negation pair partner: code 2^n - 1 - code.
  point negated() const;

  std::vector<bool> bits() const;

  friend bool operator==(const point&, const point&) = default;

private:
  int arity_;
  std::uint32_t code_;
};

/*! \brief A boolean function as a packed truth table.
 *
 * Bit k of the table is f evaluated at the point with code k. Immutable
 * after construction except through the named builders; all operators below
 * return new values.
 */
class boolean_function {
public:
  /// The all-false function on `arity` variables.
  explicit boolean_function(int arity);

  /// Parses the canonical binary form: character at position k is f(code k).
  static boolean_function from_binary(std::string_view text);

  /// Parses the "0x..." big-endian nibble form (tables of 4 bits or more).
  static boolean_function from_hex(std::string_view text);

  /// Accepts either text form.
  static boolean_function parse(std::string_view text);

  int arity() const { return arity_; }
  std::uint32_t table_size() const { return std::uint32_t{1} << arity_; }

  bool bit(std::uint32_t code) const;
  void set_bit(std::uint32_t code, bool value);

  std::string to_binary() const;
  std::string to_hex() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const boolean_function&, const boolean_function&) = default;
  friend std::strong_ordering operator<=>(const boolean_function&,
                                          const boolean_function&) = default;

private:
  int arity_;
  std::vector<std::uint64_t> words_;
};

bool evaluate(const boolean_function& f, const point& x);

/// f^d(x) = NOT f(NOT x).
boolean_function dual(const boolean_function& f);

bool is_self_dual(const boolean_function& f);

/*! \brief The self-dualization of f: the (n+1)-variable self-dual function
 * whose new variable occupies index 1, with the index-1 = 0 slice equal to f
 * and the index-1 = 1 slice equal to dual(f).
 */
boolean_function self_dualize(const boolean_function& f);

/// Inverse of self_dualize; requires a self-dual input.
boolean_function anti_self_dualize(const boolean_function& f);

/// result(x) = f(x XOR u), negating the variables where u is 1.
boolean_function u_complement(const boolean_function& f, const point& u);
boolean_function u_complement(const boolean_function& f, std::uint32_t u_code);

/*! \brief result(x_1..x_n) = f(x_{sigma(1)}, ..., x_{sigma(n)}).
 *
 * `sigma` is 1-based: sigma[i-1] holds sigma(i). Composition law:
 * permute(permute(f, sigma), tau) = permute(f, compose(sigma, tau)).
 */
boolean_function permute(const boolean_function& f, const std::vector<int>& sigma);

/// compose(sigma, tau)(i) = tau(sigma(i)); matches the permute law above.
std::vector<int> compose(const std::vector<int>& sigma, const std::vector<int>& tau);

/// Pins variable i (1-based) to the bit s; remaining variables keep order.
boolean_function reduce(const boolean_function& f, int i, bool s);

/// Monotone nondecreasing in every coordinate.
bool is_positive(const boolean_function& f);

/// Every singleton evaluates to 0.
bool is_small(const boolean_function& f);

/// No negation pair is doubly false.
bool is_ample(const boolean_function& f);

} // namespace goldilocks
