#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goldilocks/chambers.hpp"
#include "goldilocks/classify.hpp"
#include "support/oracles.hpp"

using namespace goldilocks;
using testsupport::function_from_mask;

namespace {

weight_vector weights(std::vector<mpq_class> w, genus_class genus) {
  weight_vector wv;
  wv.w = std::move(w);
  wv.genus = genus;
  return wv;
}

const mpq_class third(1, 3);
const mpq_class quarter3(3, 4);

} // namespace

TEST_CASE("admissibility") {
  CHECK_THROWS_AS(check_admissible(weights({mpq_class(0)}, genus_class::positive)),
                  admissibility_error);
  CHECK_THROWS_AS(check_admissible(weights({mpq_class(2)}, genus_class::positive)),
                  admissibility_error);
  CHECK_THROWS_AS(check_admissible(weights({third, third}, genus_class::zero)),
                  admissibility_error);
  CHECK_NOTHROW(check_admissible(weights({third, third}, genus_class::positive)));
  CHECK_NOTHROW(
      check_admissible(weights({quarter3, quarter3, quarter3}, genus_class::zero)));
}

TEST_CASE("weight-to-function map examples") {
  CHECK(phi_map(weights({quarter3, quarter3, quarter3}, genus_class::zero)) ==
        boolean_function::from_binary("00010111"));
  CHECK(phi_map(weights({third, third}, genus_class::positive)) ==
        boolean_function::from_binary("0000"));
  // Singleton sums equal to 1 stay on the closed side.
  CHECK(phi_map(weights({mpq_class(1), mpq_class(1)}, genus_class::positive)) ==
        boolean_function::from_binary("0001"));
  CHECK(on_wall(weights({mpq_class(1), mpq_class(1)}, genus_class::positive)));
  CHECK(!on_wall(weights({third, third}, genus_class::positive)));
}

TEST_CASE("same chamber and separating walls") {
  const weight_vector a = weights({third, third}, genus_class::positive);
  const weight_vector b = weights({mpq_class(2, 5), mpq_class(2, 5)}, genus_class::positive);
  const weight_vector c = weights({mpq_class(1), mpq_class(1)}, genus_class::positive);
  CHECK(same_chamber(a, b));
  CHECK(!same_chamber(a, c));
  CHECK(same_chamber(a, a));
  CHECK(separating_walls(a, a).empty());
  CHECK(separating_walls(c, a) == std::vector<std::vector<int>>{{1, 2}});

  const weight_vector big = weights({mpq_class(1), mpq_class(1), mpq_class(1)},
                                    genus_class::positive);
  const weight_vector tiny = weights({third, third, third}, genus_class::positive);
  const auto walls = separating_walls(big, tiny);
  CHECK(walls.size() == 4); // every subset of size >= 2 crosses
  for (const auto& wall : walls) CHECK(wall.size() >= 2);

  CHECK_THROWS_AS(
      same_chamber(a, weights({third, third}, genus_class::zero)),
      admissibility_error);
}

TEST_CASE("chamber representatives round trip") {
  const boolean_function maj3 = boolean_function::from_binary("00010111");
  const weight_vector wv = chamber_representative(maj3, genus_class::zero);
  CHECK(phi_map(wv) == maj3);

  const boolean_function const0 = boolean_function::from_binary("0000");
  const weight_vector wc = chamber_representative(const0, genus_class::positive);
  CHECK(phi_map(wc) == const0);

  CHECK_THROWS_AS(
      chamber_representative(boolean_function::from_binary("0001"), genus_class::zero),
      class_error);
  CHECK_THROWS_AS(
      chamber_representative(boolean_function::from_binary("0111"), genus_class::positive),
      class_error);
}

TEST_CASE("chamber representatives round trip, exhaustive n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const std::vector<bool> oracle = separable_table_oracle(n);
    for (std::uint64_t mask = 0; mask < oracle.size(); ++mask) {
      if (!oracle[mask]) continue;
      const boolean_function f = function_from_mask(n, mask);
      if (!is_positive(f) || !is_small(f)) continue;
      REQUIRE(phi_map(chamber_representative(f, genus_class::positive)) == f);
      if (is_ample(f)) {
        REQUIRE(phi_map(chamber_representative(f, genus_class::zero)) == f);
      }
    }
  }
}

TEST_CASE("weight map well-definedness, randomized") {
  std::mt19937 rng(31415);
  std::uniform_int_distribution<int> numer(1, 12);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    weight_vector a, b;
    a.genus = b.genus = genus_class::positive;
    for (int i = 0; i < n; ++i) {
      a.w.emplace_back(numer(rng), 12);
      b.w.emplace_back(numer(rng), 12);
    }
    const bool same = same_chamber(a, b);
    const bool no_walls = separating_walls(a, b).empty();
    const bool equal_fn = phi_map(a) == phi_map(b);
    REQUIRE(same == no_walls);
    REQUIRE(same == equal_fn);
  }
}

TEST_CASE("count_chambers dispatches and validates") {
  enumeration_budget budget;
  const count_row row = count_chambers(4, genus_class::zero, engine_kind::both, budget);
  CHECK(row.count == 27);
  CHECK(row.orbit_count == 5);
  const count_row first = count_chambers(1, genus_class::positive, engine_kind::both, budget);
  CHECK(first.count == 1);
  CHECK(first.orbit_count == 1);
  for (const testsupport::reference_row& ref : testsupport::reference_rows()) {
    if (ref.n > 5) continue;
    const count_row r = count_chambers(ref.n, ref.genus, engine_kind::direct, budget);
    CHECK(r.count == ref.count);
    CHECK(r.orbit_count == ref.orbit_count);
    CHECK(r.orbit_count <= r.count);
  }
}

TEST_CASE("separable-count identity at small n") {
  CHECK(ltf_identity_check(0).ok);
  const identity_report r1 = ltf_identity_check(1);
  CHECK(r1.ok);
  CHECK(r1.lhs == 4);
  const identity_report r2 = ltf_identity_check(2);
  CHECK(r2.ok);
  CHECK(r2.lhs == 14);
  const identity_report r3 = ltf_identity_check(3);
  CHECK(r3.ok);
  CHECK(r3.lhs == 104);
  CHECK_THROWS_AS(ltf_identity_check(5), budget_error);
}

TEST_CASE("binomial-sum estimate") {
  CHECK(irmatov_estimate(0) == 2);
  CHECK(irmatov_estimate(4) == 3882);
  CHECK(irmatov_estimate(1) == 2 * (1 + 1));
  // 2 * (C(7,0) + C(7,1) + C(7,2) + C(7,3)) = 2 * (1 + 7 + 21 + 35)
  CHECK(irmatov_estimate(3) == 128);
  CHECK_THROWS_AS(irmatov_estimate(31), budget_error);
}

TEST_CASE("ratio report") {
  const asymptotics_report r4 = ratio_report(4);
  CHECK(r4.estimate == 3882);
  CHECK(r4.genus_ratio == mpq_class(9, 32));       // 27/96 reduced
  CHECK(r4.estimate_ratio == mpq_class(256, 647)); // 16*96/3882 reduced
}

TEST_CASE("recorded ratios trend toward one half") {
  // Chamber-count ratios from the reference tables (n <= 6 computed rows,
  // n = 7..9 recorded constants); the sequence increases toward 1/2.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> rows = {
      {1, 9},
      {27, 96},
      {1087, 2690},
      {105123, 226360},
      {31562520, 64646855},
      {33924554539ull, 68339572672ull},
      {140306938682875ull, 281196831947304ull},
  };
  mpq_class prev(0);
  for (const auto& [zero_count, positive_count] : rows) {
    mpq_class ratio(zero_count, positive_count);
    ratio.canonicalize();
    CHECK(ratio > prev);
    CHECK(ratio < mpq_class(1, 2));
    prev = ratio;
  }
}
