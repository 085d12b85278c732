#include "goldilocks/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "goldilocks/chambers.hpp"
#include "goldilocks/classify.hpp"
#include "goldilocks/enumerate.hpp"

namespace goldilocks {

namespace {

boolean_function function_from_mask(int n, std::uint64_t mask) {
  boolean_function f(n);
  for (std::uint32_t c = 0; c < f.table_size(); ++c) {
    if ((mask >> c) & 1u) f.set_bit(c, true);
  }
  return f;
}

struct check_sink {
  selftest_report* report;
  std::mutex mu;

  void operator()(const std::string& name, bool passed) {
    std::lock_guard lock(mu);
    ++report->checks;
    if (!passed) report->failures.push_back(name);
  }
};

} // namespace

std::vector<bool> separable_table_oracle(int n, int weight_bound) {
  if (n < 0 || n > 4) {
    throw budget_error("oracle bitmaps are capped at n = 4");
  }
  const int size = 1 << n;
  const std::uint64_t tables = std::uint64_t{1} << size;
  std::vector<bool> separable(tables, false);

  const int span = 2 * weight_bound + 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(span);

  std::vector<int> w(n), dot(size);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < n; ++i) {
      w[i] = static_cast<int>(rest % span) - weight_bound;
      rest /= span;
    }
    dot[0] = 0;
    for (int c = 1; c < size; ++c) {
      dot[c] = dot[c & (c - 1)] + w[std::countr_zero(static_cast<unsigned>(c))];
    }
    // theta between consecutive attained dot values; sweeping the values
    // themselves (plus one below the minimum) hits every function.
    for (int pick = -1; pick < size; ++pick) {
      int theta;
      if (pick < 0) {
        theta = *std::min_element(dot.begin(), dot.end()) - 1;
      } else {
        theta = dot[pick];
      }
      std::uint64_t table = 0;
      for (int c = 0; c < size; ++c) {
        if (dot[c] > theta) table |= std::uint64_t{1} << c;
      }
      separable[table] = true;
    }
  }
  return separable;
}

selftest_report run_selftest(int workers) {
  selftest_report report;
  check_sink check{&report, {}};

  const std::vector<bool> oracle3 = separable_table_oracle(3);
  const std::vector<bool> oracle4 = separable_table_oracle(4);

  check("oracle counts 104 separable functions at n=3",
        std::count(oracle3.begin(), oracle3.end(), true) == 104);
  check("oracle counts 1882 separable functions at n=4",
        std::count(oracle4.begin(), oracle4.end(), true) == 1882);

  // LP separability against the oracle, every function on 3 variables.
  {
    bool agree = true;
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
      const boolean_function f = function_from_mask(3, mask);
      if (is_threshold(f) != oracle3[mask]) agree = false;
    }
    check("LP agrees with the integer-weight oracle at n=3", agree);
  }

  // Full classification against the oracle, every function on 4 variables.
  {
    std::atomic<bool> agree{true};
    const int nthreads = std::max(1, workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (65536 + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min<std::uint64_t>(65536, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          const boolean_function f = function_from_mask(4, mask);
          const class_report r = classify(f);
          const bool expect_sgold = oracle4[mask] && is_positive(f) && is_small(f);
          const bool expect_gold = expect_sgold && is_ample(f);
          if (r.is_ltf != oracle4[mask] || r.semi_goldilocks != expect_sgold ||
              r.goldilocks != expect_gold) {
            agree = false;
          }
          if (r.semi_goldilocks &&
              !(r.witness_realization && r.witness_realization->realizes(f) &&
                r.witness_realization->positive() && r.witness_realization->small())) {
            agree = false;
          }
          if (!r.goldilocks &&
              !(r.failure_certificate && verify_certificate(f, *r.failure_certificate))) {
            agree = false;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    check("classification agrees with the oracle on all 65536 functions at n=4",
          agree.load());
  }

  // Structural operator laws, exhaustive at n = 4.
  {
    bool involution = true, roundtrip = true, slices = true, red_dual = true;
    for (std::uint64_t mask = 0; mask < 65536; ++mask) {
      const boolean_function f = function_from_mask(4, mask);
      if (dual(dual(f)) != f) involution = false;
      const boolean_function sd = self_dualize(f);
      if (!is_self_dual(sd)) slices = false;
      if (anti_self_dualize(sd) != f) roundtrip = false;
      if (reduce(sd, 1, false) != f || reduce(sd, 1, true) != dual(f)) slices = false;
      for (int i = 1; i <= 5 && red_dual; ++i) {
        if (reduce(sd, i, true) != dual(reduce(sd, i, false))) red_dual = false;
      }
    }
    check("dual is an involution at n=4", involution);
    check("anti-self-dualization inverts self-dualization at n=4", roundtrip);
    check("self-dualization slice laws at n=4", slices);
    check("reduction pairs of self-dual functions are dual pairs at n=4", red_dual);
  }

  // Chow transformation laws on every separable function at n = 4.
  {
    bool laws = true;
    for (std::uint64_t mask = 0; mask < 65536 && laws; ++mask) {
      if (!oracle4[mask]) continue;
      const boolean_function f = function_from_mask(4, mask);
      const chow_parameters cp = chow(f);
      const chow_parameters cd = chow(dual(f));
      if (cd.m != 16 - cp.m || cd.a != cp.a) laws = false;
      const chow_parameters cs = chow(self_dualize(f));
      if (cs.m != 16 || cs.a[0] != 32 - 2 * cp.m) laws = false;
      for (int i = 0; i < 4; ++i) {
        if (cs.a[i + 1] != 2 * cp.a[i]) laws = false;
      }
      const chow_parameters cu = chow(u_complement(f, std::uint32_t{5}));
      for (int i = 0; i < 4; ++i) {
        const std::int64_t expect = (i == 0 || i == 2) ? 16 - cp.a[i] : cp.a[i];
        if (cu.a[i] != expect) laws = false;
      }
    }
    check("Chow transformation laws hold on all separable functions at n=4", laws);
  }

  // Counting rows under both engines.
  {
    const enumeration_budget budget{7, 7, std::max(1, workers)};
    struct row {
      int n;
      genus_class genus;
      std::uint64_t count, orbits;
    };
    const row expected[] = {
        {1, genus_class::positive, 1, 1},  {2, genus_class::positive, 2, 2},
        {3, genus_class::positive, 9, 5},  {4, genus_class::positive, 96, 17},
        {3, genus_class::zero, 1, 1},      {4, genus_class::zero, 27, 5},
    };
    bool counts = true;
    for (const row& r : expected) {
      const count_result direct = count_direct(r.n, r.genus, budget);
      const count_result sd = count_sd(r.n, r.genus, budget);
      if (direct.count != r.count || direct.orbit_count != r.orbits || direct != sd) {
        counts = false;
      }
    }
    check("both engines reproduce the small counting rows", counts);

    const identity_report identity = ltf_identity_check(3, budget);
    check("separable-function identity holds at n=3", identity.ok && identity.lhs == 104);
  }

  // Positive self-dual non-small census and the ample/dual interaction.
  {
    bool census_ok = true, dual_small = true;
    for (int n = 3; n <= 4; ++n) {
      const std::vector<bool>& oracle = n == 3 ? oracle3 : oracle4;
      int census = 0;
      for (std::uint64_t mask = 0; mask < oracle.size(); ++mask) {
        if (!oracle[mask]) continue;
        const boolean_function f = function_from_mask(n, mask);
        if (!is_positive(f)) continue;
        if (is_self_dual(f) && !is_small(f)) ++census;
        if (is_ample(f) && !is_self_dual(f) && !is_small(dual(f))) dual_small = false;
      }
      if (census != n) census_ok = false;
    }
    check("exactly n positive self-dual non-small separable functions", census_ok);
    check("duals of positive ample non-self-dual functions are small", dual_small);
  }

  return report;
}

} // namespace goldilocks
