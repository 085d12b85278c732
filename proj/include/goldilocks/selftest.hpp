#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace goldilocks {

/*! \brief Independent separability oracle: marks every truth table on n
 * variables that some integer weight vector in [-bound, bound]^n realizes
 * (theta sweeps the attained dot values, so all biases are covered).
 *
 * Exhaustive search, no LP involved. Complete for n <= 5: minimal integer
 * realizations at these arities stay well inside bound = 8. Capped at
 * n <= 4 because the bitmap has 2^{2^n} entries.
 */
std::vector<bool> separable_table_oracle(int n, int weight_bound = 8);

struct selftest_report {
  int checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/*! \brief The exhaustive n <= 4 oracle suites backing the `selftest` CLI
 * command: classification against the integer-weight oracle, the structural
 * operator laws, the Chow transformation laws, certificate verification and
 * the small counting rows under both engines.
 */
selftest_report run_selftest(int workers = 1);

} // namespace goldilocks
