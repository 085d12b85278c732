#include "goldilocks/chambers.hpp"

#include <cassert>

#include "goldilocks/classify.hpp"
#include "goldilocks/ltf.hpp"

namespace goldilocks {

namespace {

mpq_class subset_sum(const weight_vector& wv, std::uint32_t code) {
  mpq_class sum = 0;
  for (int i = 0; i < wv.arity(); ++i) {
    if ((code >> i) & 1u) sum += wv.w[i];
  }
  return sum;
}

std::uint64_t factorial64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

} // namespace

void check_admissible(const weight_vector& wv) {
  if (wv.arity() > arity_max) {
    throw admissibility_error("too many weights");
  }
  mpq_class sum = 0;
  for (const mpq_class& wi : wv.w) {
    if (wi <= 0 || wi > 1) {
      throw admissibility_error("weights must satisfy 0 < w <= 1");
    }
    sum += wi;
  }
  if (wv.genus == genus_class::zero && sum <= 2) {
    throw admissibility_error("genus zero requires total weight > 2");
  }
}

boolean_function phi_map(const weight_vector& wv) {
  check_admissible(wv);
  boolean_function f(wv.arity());
  for (std::uint32_t c = 0; c < f.table_size(); ++c) {
    if (subset_sum(wv, c) > 1) f.set_bit(c, true);
  }
  return f;
}

bool on_wall(const weight_vector& wv) {
  check_admissible(wv);
  const std::uint32_t size = std::uint32_t{1} << wv.arity();
  for (std::uint32_t c = 1; c < size; ++c) {
    if (subset_sum(wv, c) == 1) return true;
  }
  return false;
}

bool same_chamber(const weight_vector& a, const weight_vector& b) {
  if (a.genus != b.genus) {
    throw admissibility_error("weights belong to different genus domains");
  }
  if (a.arity() != b.arity()) {
    throw admissibility_error("weights have different lengths");
  }
  return phi_map(a) == phi_map(b);
}

std::vector<std::vector<int>> separating_walls(const weight_vector& a,
                                               const weight_vector& b) {
  check_admissible(a);
  check_admissible(b);
  if (a.arity() != b.arity()) {
    throw admissibility_error("weights have different lengths");
  }
  std::vector<std::vector<int>> walls;
  const std::uint32_t size = std::uint32_t{1} << a.arity();
  for (std::uint32_t c = 1; c < size; ++c) {
    const bool side_a = subset_sum(a, c) > 1;
    const bool side_b = subset_sum(b, c) > 1;
    if (side_a == side_b) continue;
    std::vector<int> subset;
    for (int i = 0; i < a.arity(); ++i) {
      if ((c >> i) & 1u) subset.push_back(i + 1);
    }
    walls.push_back(std::move(subset));
  }
  return walls;
}

weight_vector chamber_representative(const boolean_function& f, genus_class genus) {
  constraint_set cs;
  cs.positive = true;
  cs.small = true;
  cs.ample = genus == genus_class::zero;
  if (genus == genus_class::zero ? !is_goldilocks(f) : !is_semi_goldilocks(f)) {
    throw class_error(genus == genus_class::zero
                          ? "chamber representatives for genus zero need a Goldilocks function"
                          : "chamber representatives need a Semi-Goldilocks function");
  }
  realization_result res = find_realization(f, cs);
  assert(res.value.has_value());
  const realization& r = *res.value;
  // Positivity and smallness force theta >= w_i >= 1 > 0, so the scaling is
  // well defined.
  weight_vector wv;
  wv.genus = genus;
  wv.w.reserve(r.arity());
  for (const mpq_class& wi : r.w()) wv.w.push_back(wi / r.theta());
  check_admissible(wv);
  assert(phi_map(wv) == f);
  return wv;
}

count_row count_chambers(int n, genus_class genus, engine_kind engine,
                         const enumeration_budget& budget) {
  count_result result;
  switch (engine) {
    case engine_kind::direct:
      result = count_direct(n, genus, budget);
      break;
    case engine_kind::sd:
      result = count_sd(n, genus, budget);
      break;
    case engine_kind::both: {
      const count_result direct = count_direct(n, genus, budget);
      const count_result sd = count_sd(n, genus, budget);
      if (direct != sd) {
        throw engine_mismatch_error(
            "direct engine (" + std::to_string(direct.count) + ", " +
            std::to_string(direct.orbit_count) + ") disagrees with sd engine (" +
            std::to_string(sd.count) + ", " + std::to_string(sd.orbit_count) +
            ") at n = " + std::to_string(n));
      }
      result = direct;
      break;
    }
  }
  count_row row{n, genus, result.count, result.orbit_count};
  assert(row.orbit_count <= row.count);
  assert(n > 12 || row.count <= row.orbit_count * factorial64(n));
  return row;
}

identity_report ltf_identity_check(int n, const enumeration_budget& budget) {
  if (n < 0 || n > 4) {
    throw budget_error("the exhaustive identity check is capped at n = 4");
  }
  identity_report report;

  const std::uint64_t total = std::uint64_t{1} << (std::uint64_t{1} << n);
  std::uint64_t separable = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    boolean_function f(n);
    for (std::uint32_t c = 0; c < f.table_size(); ++c) {
      if ((mask >> c) & 1u) f.set_bit(c, true);
    }
    if (is_threshold(f)) ++separable;
  }
  report.lhs = static_cast<unsigned long>(separable);

  mpz_class rhs = 0;
  for (int k = 0; k <= n; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, k);
    const count_result gold = count_direct(k, genus_class::positive, budget);
    mpz_class term = binom;
    term <<= k;
    term *= static_cast<unsigned long>(gold.count);
    rhs += term;
  }
  report.rhs = rhs;
  report.ok = report.lhs == report.rhs;
  return report;
}

mpz_class irmatov_estimate(int n) {
  if (n < 0 || n > 30) {
    throw budget_error("estimate is evaluated for 0 <= n <= 30");
  }
  const unsigned long cube = (1ul << n) - 1ul;
  mpz_class sum = 0;
  for (int i = 0; i <= n; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), cube, static_cast<unsigned long>(i));
    sum += binom;
  }
  return 2 * sum;
}

asymptotics_report ratio_report(int n, const enumeration_budget& budget) {
  asymptotics_report report;
  report.n = n;
  report.estimate = irmatov_estimate(n);
  const count_result gplus = count_direct(n, genus_class::positive, budget);
  const count_result gzero = count_direct(n, genus_class::zero, budget);
  if (gplus.count == 0) {
    throw budget_error("no chambers to compare at n = " + std::to_string(n));
  }
  report.genus_ratio = mpq_class(static_cast<unsigned long>(gzero.count),
                                 static_cast<unsigned long>(gplus.count));
  report.genus_ratio.canonicalize();
  mpz_class numer = mpz_class(static_cast<unsigned long>(gplus.count)) << n;
  report.estimate_ratio = mpq_class(numer) / mpq_class(report.estimate);
  report.estimate_ratio.canonicalize();
  return report;
}

} // namespace goldilocks
