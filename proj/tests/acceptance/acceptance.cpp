// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 3 (the n = 7 stretch rows) is not CI-gating; set
// GOLDILOCKS_ACCEPTANCE_STRETCH=1 to run it (multi-hour budget).

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "goldilocks/chambers.hpp"
#include "goldilocks/classify.hpp"
#include "goldilocks/selftest.hpp"
#include "support/oracles.hpp"

using namespace goldilocks;
using testsupport::function_from_mask;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what
            << std::endl;
  if (!ok) ++failures;
}

void skip(int criterion, const std::string& what) {
  std::cout << "SKIP criterion " << criterion << ": " << what << std::endl;
}

int level_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

enumeration_budget budget() {
  enumeration_budget b;
  b.workers = level_workers();
  return b;
}

// --- criteria 1 and 2: table reproduction -----------------------------------

void table_reproduction() {
  bool ok_positive = true, ok_zero = true;
  for (const testsupport::reference_row& row : testsupport::reference_rows()) {
    const count_result direct = count_direct(row.n, row.genus, budget());
    const count_result sd = count_sd(row.n, row.genus, budget());
    const bool match = direct.count == row.count && direct.orbit_count == row.orbit_count &&
                       sd.count == row.count && sd.orbit_count == row.orbit_count;
    (row.genus == genus_class::positive ? ok_positive : ok_zero) &= match;
    if (!match) {
      std::cout << "  mismatch at n=" << row.n << ": direct (" << direct.count << ","
                << direct.orbit_count << "), sd (" << sd.count << "," << sd.orbit_count
                << ")" << std::endl;
    }
  }
  report(1, "genus positive rows n=1..6, both engines, exact", ok_positive);
  report(2, "genus zero rows n=3..6, both engines, exact", ok_zero);
}

void stretch_tier() {
  if (std::getenv("GOLDILOCKS_ACCEPTANCE_STRETCH") == nullptr) {
    skip(3, "n=7 stretch rows (set GOLDILOCKS_ACCEPTANCE_STRETCH=1; multi-hour budget; "
            "n=8,9 are reference constants only)");
    return;
  }
  bool ok = true;
  for (const testsupport::reference_row& row : testsupport::stretch_rows()) {
    const count_result sd = count_sd(row.n, row.genus, budget());
    ok &= sd.count == row.count && sd.orbit_count == row.orbit_count;
    std::cout << "  n=7 " << (row.genus == genus_class::zero ? "genus 0" : "genus +")
              << " sd engine: " << sd.count << "," << sd.orbit_count << std::endl;
  }
  report(3, "n=7 stretch rows via the sd engine", ok);
}

// --- criterion 4: the exact counting identity -------------------------------

void identity_criterion() {
  const auto start = std::chrono::steady_clock::now();
  const std::array<std::uint64_t, 5> expected = {2, 4, 14, 104, 1882};
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    const identity_report r = ltf_identity_check(n, budget());
    ok &= r.ok && r.lhs == static_cast<unsigned long>(expected[n]);
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  ok &= elapsed.count() <= 600;
  report(4, "identity LTF(n) = sum C(n,k) 2^k Gold_{g+}(k) at n=1..4, exhaustive LP left side (" +
                std::to_string(elapsed.count()) + "s)",
         ok);
}

// --- criterion 5: engine cross-agreement ------------------------------------

void engine_agreement() {
  bool ok = true;
  for (int n = 0; n <= 5; ++n) {
    for (genus_class genus : {genus_class::positive, genus_class::zero}) {
      ok &= count_direct(n, genus, budget()) == count_sd(n, genus, budget());
    }
  }
  report(5, "count_direct = count_sd on both coordinates, all n <= 5", ok);
}

// --- criterion 6: oracle equivalence ----------------------------------------

void oracle_equivalence() {
  bool ok = true;
  {
    const std::vector<bool> oracle = separable_table_oracle(3);
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
      const boolean_function f = function_from_mask(3, mask);
      const class_report r = classify(f);
      const bool sgold = oracle[mask] && is_positive(f) && is_small(f);
      if (r.semi_goldilocks != sgold || r.goldilocks != (sgold && is_ample(f))) ok = false;
    }
  }
  {
    const std::vector<bool> oracle = separable_table_oracle(4);
    std::atomic<bool> agree{true};
    const int workers = level_workers();
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (65536 + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min<std::uint64_t>(65536, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          const boolean_function f = function_from_mask(4, mask);
          const class_report r = classify(f);
          const bool sgold = oracle[mask] && is_positive(f) && is_small(f);
          if (r.semi_goldilocks != sgold || r.goldilocks != (sgold && is_ample(f))) {
            agree = false;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    ok &= agree.load();
  }
  report(6, "classify flags match the integer-weight oracle on all functions, n=3 and n=4",
         ok);
}

// --- criterion 7: property suites -------------------------------------------

bool structural_properties() {
  bool ok = true;
  for (std::uint64_t mask = 0; mask < 65536; ++mask) {
    const boolean_function f = function_from_mask(4, mask);
    const boolean_function sd = self_dualize(f);
    ok &= dual(dual(f)) == f;
    ok &= is_self_dual(sd);
    ok &= anti_self_dualize(sd) == f;
    ok &= reduce(sd, 1, false) == f && reduce(sd, 1, true) == dual(f);
    for (int i = 1; i <= 5; ++i) ok &= reduce(sd, i, true) == dual(reduce(sd, i, false));
  }
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    const boolean_function f = testsupport::random_function(5, rng);
    ok &= dual(dual(f)) == f;
    ok &= is_self_dual(self_dualize(f));
    ok &= anti_self_dualize(self_dualize(f)) == f;
  }
  return ok;
}

bool chow_properties() {
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    const std::vector<bool> oracle = separable_table_oracle(n);
    const std::int64_t cube = std::int64_t{1} << n;
    std::set<std::pair<std::int64_t, std::vector<std::int64_t>>> seen;
    for (std::uint64_t mask = 0; mask < oracle.size(); ++mask) {
      if (!oracle[mask]) continue;
      const boolean_function f = function_from_mask(n, mask);
      const chow_parameters cp = chow(f);
      ok &= seen.insert({cp.m, cp.a}).second; // uniqueness on separable functions

      const chow_parameters cd = chow(dual(f));
      ok &= cd.m == cube - cp.m && cd.a == cp.a;

      const chow_parameters cu = chow(u_complement(f, std::uint32_t{1}));
      ok &= cu.a[0] == cube - cp.a[0];
      for (int i = 1; i < n; ++i) ok &= cu.a[i] == cp.a[i];

      std::vector<int> rotate(n);
      for (int i = 0; i < n; ++i) rotate[i] = (i + 1) % n + 1;
      const chow_parameters cr = chow(permute(f, rotate));
      for (int i = 0; i < n; ++i) ok &= cr.a[rotate[i] - 1] == cp.a[i];

      const chow_parameters cs = chow(self_dualize(f));
      ok &= cs.m == cube && cs.a[0] == 2 * cube - 2 * cp.m;
      for (int i = 0; i < n; ++i) ok &= cs.a[i + 1] == 2 * cp.a[i];

      const boolean_function sd = self_dualize(f);
      const chow_parameters big = chow(sd);
      for (int i = 1; i <= n + 1; ++i) {
        const chow_parameters red = chow(reduce(sd, i, true));
        ok &= red.m == big.a[i - 1] / 2;
      }

      const std::int64_t half = cube / 2;
      const bool chow_positive = std::all_of(cp.a.begin(), cp.a.end(),
                                             [&](std::int64_t a) { return a >= half; });
      ok &= chow_positive == is_positive(f);
      ok &= (cp.m >= half) == is_ample(f);
    }
  }
  // Randomized at n = 5.
  std::mt19937 rng(555);
  for (int trial = 0; trial < 10000; ++trial) {
    const testsupport::sampled_ltf s = testsupport::sample_ltf(5, rng);
    const chow_parameters cp = chow(s.fn);
    const chow_parameters cd = chow(dual(s.fn));
    ok &= cd.m == 32 - cp.m && cd.a == cp.a;
    const chow_parameters cs = chow(self_dualize(s.fn));
    ok &= cs.m == 32 && cs.a[0] == 64 - 2 * cp.m;
    for (int i = 0; i < 5; ++i) ok &= cs.a[i + 1] == 2 * cp.a[i];
  }
  return ok;
}

bool realization_properties() {
  bool ok = true;
  std::mt19937 rng(2718);
  // Smallness rigidity.
  int found = 0;
  while (found < 100) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const testsupport::sampled_ltf s = testsupport::sample_ltf(n, rng);
    if (!is_small(s.fn)) continue;
    ++found;
    const realization_result rr = find_realization(s.fn);
    ok &= rr.value.has_value() && rr.value->small();
  }
  // Amplification preserves the function.
  found = 0;
  while (found < 100) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const testsupport::sampled_ltf s = testsupport::sample_ltf(n, rng);
    if (!is_ample(s.fn)) continue;
    ++found;
    std::vector<mpq_class> w;
    for (int wi : s.w) w.emplace_back(wi);
    const realization r(std::move(w), mpq_class(s.theta));
    const realization amplified = amplify(r, s.fn);
    ok &= amplified.realizes(s.fn) && amplified.ample();
  }
  return ok;
}

bool phi_bijection_properties() {
  bool ok = true;
  for (int n = 0; n <= 4; ++n) {
    const std::vector<bool> oracle = separable_table_oracle(n);
    std::set<boolean_function> image, nondeg;
    for (std::uint64_t mask = 0; mask < oracle.size(); ++mask) {
      if (!oracle[mask]) continue;
      const boolean_function f = function_from_mask(n, mask);
      if (is_positive(f) && degree(f) == n) nondeg.insert(f);
      if (!is_positive(f) || !is_small(f)) continue;
      const boolean_function h = phi_nondegenerate(f);
      ok &= phi_inverse(h) == f;
      image.insert(h);
    }
    ok &= image == nondeg;
  }
  return ok;
}

bool census_properties() {
  bool ok = true;
  for (int n = 3; n <= 4; ++n) {
    const std::vector<bool> oracle = separable_table_oracle(n);
    int census = 0;
    for (std::uint64_t mask = 0; mask < oracle.size(); ++mask) {
      if (!oracle[mask]) continue;
      const boolean_function f = function_from_mask(n, mask);
      if (is_positive(f) && is_self_dual(f) && !is_small(f)) ++census;
      if (is_positive(f) && is_ample(f) && !is_self_dual(f)) ok &= is_small(dual(f));
    }
    ok &= census == n;
  }
  return ok;
}

bool certificate_properties() {
  std::atomic<bool> ok{true};
  for (int n = 0; n <= 4; ++n) {
    const std::uint64_t tables = std::uint64_t{1} << (1 << n);
    const int workers = level_workers();
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (tables + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(tables, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, n, begin, end] {
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          const boolean_function f = function_from_mask(n, mask);
          const class_report r = classify(f);
          if (!r.goldilocks) {
            if (!r.failure_certificate.has_value() ||
                !verify_certificate(f, *r.failure_certificate)) {
              ok = false;
            }
          }
          if (r.semi_goldilocks) {
            if (!r.witness_realization.has_value() ||
                !r.witness_realization->realizes(f) || !r.witness_realization->positive() ||
                !r.witness_realization->small()) {
              ok = false;
            }
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return ok.load();
}

bool reduction_soundness() {
  bool ok = true;
  for (std::uint64_t mask = 0; mask < 256; ++mask) {
    const boolean_function f = function_from_mask(3, mask);
    ok &= is_threshold(f) == is_semi_goldilocks(reduce_thres_to_sgold(f));
  }
  std::mt19937 rng(606);
  for (int trial = 0; trial < 10000; ++trial) {
    const boolean_function f = testsupport::random_function(4, rng);
    ok &= is_threshold(f) == is_semi_goldilocks(reduce_thres_to_sgold(f));
  }
  return ok;
}

bool chamber_map_properties() {
  bool ok = true;
  std::mt19937 rng(161803);
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
    ok &= same == separating_walls(a, b).empty();
    ok &= same == (phi_map(a) == phi_map(b));
  }
  // Representative round trip, exhaustive n <= 4.
  for (int n = 1; n <= 4; ++n) {
    const std::vector<bool> oracle = separable_table_oracle(n);
    for (std::uint64_t mask = 0; mask < oracle.size(); ++mask) {
      if (!oracle[mask]) continue;
      const boolean_function f = function_from_mask(n, mask);
      if (!is_positive(f) || !is_small(f)) continue;
      ok &= phi_map(chamber_representative(f, genus_class::positive)) == f;
      if (is_ample(f)) ok &= phi_map(chamber_representative(f, genus_class::zero)) == f;
    }
  }
  return ok;
}

void property_suites() {
  struct suite {
    const char* name;
    bool (*run)();
  };
  const suite suites[] = {
      {"structural operator laws", structural_properties},
      {"Chow transformation and criterion laws", chow_properties},
      {"realization rigidity and amplification", realization_properties},
      {"degree-raising bijection", phi_bijection_properties},
      {"census and dual interactions", census_properties},
      {"certificate soundness and completeness", certificate_properties},
      {"separability reduction soundness", reduction_soundness},
      {"weight map well-definedness and round trip", chamber_map_properties},
  };
  bool all = true;
  for (const suite& s : suites) {
    const bool ok = s.run();
    if (!ok) std::cout << "  property subsuite failed: " << s.name << std::endl;
    all &= ok;
  }
  report(7, "property suites (exhaustive n <= 4, randomized n = 5, 10^4 cases)", all);
}

// --- criterion 8: output determinism ----------------------------------------

std::string run_cli(const std::string& command) {
  std::array<char, 4096> buffer;
  std::string output;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  while (fgets(buffer.data(), buffer.size(), pipe.get()) != nullptr) {
    output += buffer.data();
  }
  return output;
}

void determinism(const std::string& cli_path) {
  if (cli_path.empty()) {
    skip(8, "determinism (no CLI path given on the command line)");
    return;
  }
  std::vector<std::string> outputs;
  for (int workers : {1, 4, 8}) {
    std::ostringstream cmd;
    cmd << cli_path << " --workers " << workers
        << " --format csv table --max-n 5 --genus both --engine both";
    outputs.push_back(run_cli(cmd.str()));
  }
  const bool ok = !outputs[0].empty() && outputs[0] == outputs[1] && outputs[0] == outputs[2];
  report(8, "table --max-n 5 output byte-identical across workers 1, 4, 8", ok);
}

} // namespace

int main(int argc, char** argv) {
  const std::string cli_path = argc > 1 ? argv[1] : "";
  table_reproduction();
  stretch_tier();
  identity_criterion();
  engine_agreement();
  oracle_equivalence();
  property_suites();
  determinism(cli_path);
  if (failures == 0) {
    std::cout << "acceptance: all gating criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  return 1;
}
