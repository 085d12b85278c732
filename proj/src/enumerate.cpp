#include "goldilocks/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "goldilocks/lp.hpp"
#include "goldilocks/ltf.hpp"

namespace goldilocks {

namespace {

// The engines pack a truth table on n <= 7 variables into (lo, hi) words;
// hi is unused below 7 variables.
struct table128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const table128&, const table128&) = default;
};

constexpr std::array<std::uint64_t, 6> var_mask = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

std::uint64_t low_bits_mask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << n)) - 1;
}

std::uint64_t reverse64(std::uint64_t x) {
  x = ((x & 0x5555555555555555ull) << 1) | ((x >> 1) & 0x5555555555555555ull);
  x = ((x & 0x3333333333333333ull) << 2) | ((x >> 2) & 0x3333333333333333ull);
  x = ((x & 0x0F0F0F0F0F0F0F0Full) << 4) | ((x >> 4) & 0x0F0F0F0F0F0F0F0Full);
  return __builtin_bswap64(x);
}

bool table_bit(const table128& t, std::uint32_t code) {
  return ((code < 64 ? t.lo : t.hi) >> (code & 63)) & 1u;
}

// Singleton codes are the powers of two below 2^n.
std::uint64_t singleton_mask_lo(int n) {
  std::uint64_t m = 0;
  for (int i = 0; i < std::min(n, 6); ++i) m |= std::uint64_t{1} << (1u << i);
  return m;
}

bool table_is_small(const table128& t, int n) {
  if (t.lo & singleton_mask_lo(n)) return false;
  if (n >= 7 && (t.hi & 1u)) return false; // code 64 = singleton of x_7
  return true;
}

bool table_is_ample(const table128& t, int n) {
  // Ample iff every negation pair has a true member: the table OR its bit
  // reversal must cover the cube.
  if (n <= 6) {
    const std::uint64_t mask = low_bits_mask(n);
    const std::uint64_t rev = reverse64(t.lo) >> (64 - (1 << n));
    return ((t.lo | rev) & mask) == mask;
  }
  const std::uint64_t rlo = reverse64(t.hi);
  const std::uint64_t rhi = reverse64(t.lo);
  return (t.lo | rlo) == ~std::uint64_t{0} && (t.hi | rhi) == ~std::uint64_t{0};
}

struct chow_raw {
  int m = 0;
  std::array<int, 7> a{}; // a_1..a_n in variable order
};

chow_raw chow_of_table(const table128& t, int n) {
  chow_raw out;
  const std::uint64_t lo = t.lo & low_bits_mask(n);
  const int half = n == 0 ? 0 : 1 << (n - 1);
  if (n <= 6) {
    out.m = std::popcount(lo);
    for (int i = 0; i < n; ++i) {
      out.a[i] = 2 * std::popcount(lo & var_mask[i]) + half - out.m;
    }
    return out;
  }
  out.m = std::popcount(lo) + std::popcount(t.hi);
  for (int i = 0; i < 6; ++i) {
    const int ones = std::popcount(lo & var_mask[i]) + std::popcount(t.hi & var_mask[i]);
    out.a[i] = 2 * ones + half - out.m;
  }
  out.a[6] = 2 * std::popcount(t.hi) + half - out.m;
  return out;
}

// (m, sorted a descending) packed one value per byte. By Chow uniqueness
// this is a complete S_n-class key for threshold functions, and a class
// sharing its key with a threshold class is itself that threshold class.
std::uint64_t class_key(const chow_raw& cr, int n) {
  std::array<int, 7> a = cr.a;
  std::sort(a.begin(), a.begin() + n, std::greater<int>());
  std::uint64_t key = static_cast<std::uint64_t>(cr.m);
  for (int i = 0; i < n; ++i) {
    key |= static_cast<std::uint64_t>(a[i]) << (8 * (i + 1));
  }
  return key;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t orbit_from_key(std::uint64_t key, int n) {
  std::uint64_t size = factorial(n);
  int run = 1;
  for (int i = 2; i <= n + 1; ++i) {
    const int prev = static_cast<int>((key >> (8 * (i - 1))) & 0xFF);
    const int cur = i <= n ? static_cast<int>((key >> (8 * i)) & 0xFF) : -1;
    if (cur == prev) {
      ++run;
    } else {
      size /= factorial(run);
      run = 1;
    }
  }
  return size;
}

boolean_function to_boolean_function(const table128& t, int n) {
  boolean_function f(n);
  const std::uint32_t size = std::uint32_t{1} << n;
  for (std::uint32_t c = 0; c < size; ++c) {
    if (table_bit(t, c)) f.set_bit(c, true);
  }
  return f;
}

table128 from_boolean_function(const boolean_function& f) {
  table128 t;
  t.lo = f.words()[0];
  if (f.arity() >= 7) t.hi = f.words()[1];
  return t;
}

// Positivity-constrained feasibility over minimal-true/maximal-false rows.
bool monotone_table_threshold(const table128& t, int n) {
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<lp_row> rows;
  for (std::uint32_t c = 0; c < size; ++c) {
    if (table_bit(t, c)) {
      bool minimal = true;
      for (int i = 0; i < n && minimal; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        if ((c & bit) && table_bit(t, c ^ bit)) minimal = false;
      }
      if (!minimal) continue;
      lp_row row;
      row.coeffs.assign(n + 1, 0);
      for (int i = 0; i < n; ++i) row.coeffs[i] = ((c >> i) & 1u) ? 1 : 0;
      row.coeffs[n] = -1;
      row.rhs = 1;
      rows.push_back(std::move(row));
    } else {
      bool maximal = true;
      for (int i = 0; i < n && maximal; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        if (!(c & bit) && !table_bit(t, c | bit)) maximal = false;
      }
      if (!maximal) continue;
      lp_row row;
      row.coeffs.assign(n + 1, 0);
      for (int i = 0; i < n; ++i) row.coeffs[i] = ((c >> i) & 1u) ? -1 : 0;
      row.coeffs[n] = 1;
      row.rhs = 0;
      rows.push_back(std::move(row));
    }
  }
  for (int i = 0; i < n; ++i) {
    lp_row row;
    row.coeffs.assign(n + 1, 0);
    row.coeffs[i] = 1;
    row.rhs = 1;
    rows.push_back(std::move(row));
  }
  return solve_inequalities(n + 1, rows).feasible;
}

void parallel_for(std::uint64_t total, int workers,
                  const std::function<void(std::uint64_t, std::uint64_t, int)>& body) {
  workers = std::max(1, workers);
  if (workers == 1 || total < 2) {
    body(0, total, 0);
    return;
  }
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(total, w * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
  for (auto& th : threads) th.join();
}

// Separability verdicts per (arity, class key), shared across scans so that
// repeated engine runs within one process do not repeat LP work.
class verdict_cache {
public:
  bool lookup(int n, std::uint64_t key, bool* out) const {
    std::lock_guard lock(mu_);
    const auto it = maps_[n].find(key);
    if (it == maps_[n].end()) return false;
    *out = it->second;
    return true;
  }

  void store(int n, std::uint64_t key, bool verdict) {
    std::lock_guard lock(mu_);
    maps_[n].emplace(key, verdict);
  }

private:
  mutable std::mutex mu_;
  mutable std::array<std::unordered_map<std::uint64_t, bool>, 8> maps_;
};

verdict_cache& global_verdicts() {
  static verdict_cache cache;
  return cache;
}

// ---- keyed class scan ----------------------------------------------------

// Streams the monotone candidates on n variables whose top-variable slices
// are positive LTFs on n-1 variables (a superset of the positive LTFs),
// groups them by class key, and decides separability once per key. Thread
// partitioning never changes the outcome: any member of a class produces the
// same verdict and the same canonical representative.
class class_scan {
public:
  class_scan(int n, const std::vector<std::uint64_t>& base, bool screen_small,
             bool screen_ample)
      : n_(n), base_(base), screen_small_(screen_small), screen_ample_(screen_ample) {}

  void run(int workers) {
    parallel_for(base_.size(), workers, [&](std::uint64_t begin, std::uint64_t end, int) {
      scan_range(begin, end);
    });
    decide(workers);
  }

  std::uint64_t ltf_count() const {
    std::uint64_t sum = 0;
    for (const auto& shard : shards_) {
      for (const auto& [key, e] : shard.map) {
        if (e.ltf) sum += orbit_from_key(key, n_);
      }
    }
    return sum;
  }

  std::uint64_t ltf_classes() const {
    std::uint64_t sum = 0;
    for (const auto& shard : shards_) {
      sum += static_cast<std::uint64_t>(
          std::count_if(shard.map.begin(), shard.map.end(),
                        [](const auto& kv) { return kv.second.ltf; }));
    }
    return sum;
  }

  // Canonical representative of every threshold class, sorted.
  std::vector<boolean_function> canonical_representatives() const {
    std::vector<boolean_function> reps;
    for (const auto& shard : shards_) {
      for (const auto& [key, e] : shard.map) {
        if (!e.ltf) continue;
        boolean_function f = to_boolean_function(e.member, n_);
        reps.push_back(canonicalize(f, /*check_threshold=*/false).representative);
      }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
  }

  // Deterministic re-stream of every passing table, in generation order.
  std::vector<std::uint64_t> member_tables() const {
    assert(n_ <= 6);
    const int shift = 1 << (n_ - 1);
    std::vector<std::uint64_t> members;
    for (std::uint64_t f0 : base_) {
      for (std::uint64_t f1 : base_) {
        if ((f0 & ~f1) != 0) continue;
        const table128 t{f0 | (f1 << shift), 0};
        if (!passes_screens(t)) continue;
        if (lookup(class_key(chow_of_table(t, n_), n_))) members.push_back(t.lo);
      }
    }
    return members;
  }

private:
  struct entry {
    table128 member;
    bool ltf = false;
  };
  struct shard {
    std::mutex mu;
    std::unordered_map<std::uint64_t, entry> map;
  };

  static constexpr int shard_count = 64;

  static std::size_t shard_of(std::uint64_t key) {
    std::uint64_t h = key;
    h ^= h >> 33;
    h *= 0xFF51AFD7ED558CCDull;
    h ^= h >> 33;
    return static_cast<std::size_t>(h & (shard_count - 1));
  }

  bool passes_screens(const table128& t) const {
    if (screen_small_ && !table_is_small(t, n_)) return false;
    if (screen_ample_ && !table_is_ample(t, n_)) return false;
    return true;
  }

  void scan_range(std::uint64_t begin, std::uint64_t end) {
    const int shift = n_ <= 6 ? (1 << (n_ - 1)) : 0;
    for (std::uint64_t i0 = begin; i0 < end; ++i0) {
      const std::uint64_t f0 = base_[i0];
      for (std::uint64_t f1 : base_) {
        if ((f0 & ~f1) != 0) continue;
        table128 t;
        if (n_ <= 6) {
          t.lo = f0 | (f1 << shift);
        } else {
          t.lo = f0;
          t.hi = f1;
        }
        if (!passes_screens(t)) continue;
        const std::uint64_t key = class_key(chow_of_table(t, n_), n_);
        shard& sh = shards_[shard_of(key)];
        std::lock_guard lock(sh.mu);
        sh.map.try_emplace(key, entry{t, false});
      }
    }
  }

  void decide(int workers) {
    std::vector<std::pair<std::uint64_t, entry*>> todo;
    for (auto& shard : shards_) {
      for (auto& [key, e] : shard.map) {
        if (global_verdicts().lookup(n_, key, &e.ltf)) continue;
        todo.emplace_back(key, &e);
      }
    }
    parallel_for(todo.size(), workers, [&](std::uint64_t begin, std::uint64_t end, int) {
      for (std::uint64_t i = begin; i < end; ++i) {
        entry* e = todo[i].second;
        e->ltf = monotone_table_threshold(e->member, n_);
        global_verdicts().store(n_, todo[i].first, e->ltf);
      }
    });
  }

  bool lookup(std::uint64_t key) const {
    const auto& map = shards_[shard_of(key)].map;
    const auto it = map.find(key);
    return it != map.end() && it->second.ltf;
  }

  int n_;
  const std::vector<std::uint64_t>& base_;
  bool screen_small_;
  bool screen_ample_;
  mutable std::array<shard, shard_count> shards_;
};

// ---- cached level lists ---------------------------------------------------

class level_store {
public:
  static level_store& instance() {
    static level_store store;
    return store;
  }

  const std::vector<std::uint64_t>& monotone(int n) {
    if (n > 5) throw budget_error("monotone level lists are capped at n = 5");
    std::lock_guard lock(mu_);
    for (int k = static_cast<int>(monotone_.size()); k <= n; ++k) {
      std::vector<std::uint64_t> level;
      if (k == 0) {
        level = {0, 1};
      } else {
        const auto& prev = monotone_[k - 1];
        const int shift = 1 << (k - 1);
        for (std::uint64_t f0 : prev) {
          for (std::uint64_t f1 : prev) {
            if ((f0 & ~f1) == 0) level.push_back(f0 | (f1 << shift));
          }
        }
      }
      monotone_.push_back(std::move(level));
    }
    return monotone_[n];
  }

  const std::vector<std::uint64_t>& positive_ltfs(int n) {
    if (n > 6) throw budget_error("positive LTF level lists are capped at n = 6");
    std::lock_guard lock(mu_);
    for (int k = static_cast<int>(positive_.size()); k <= n; ++k) {
      std::vector<std::uint64_t> level;
      if (k == 0) {
        level = {0, 1};
      } else {
        class_scan scan(k, positive_[k - 1], false, false);
        scan.run(default_workers());
        level = scan.member_tables();
      }
      positive_.push_back(std::move(level));
    }
    return positive_[n];
  }

  static int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
  }

private:
  std::mutex mu_;
  std::vector<std::vector<std::uint64_t>> monotone_;
  std::vector<std::vector<std::uint64_t>> positive_;
};

void check_count_budget(int n, int cap, const char* engine) {
  if (n < 0) throw budget_error("n must be nonnegative");
  if (n > cap) {
    throw budget_error(std::string(engine) + " engine budget allows n <= " +
                       std::to_string(cap) + ", got " + std::to_string(n));
  }
  if (n > 7) throw budget_error("counting engines support n <= 7");
}

// Chow a-parameters of a self-dual representative are even; Algorithm
// bookkeeping runs on the halved values.
struct rep_view {
  const boolean_function* fn;
  int big_n;                   // arity of the representative
  int small_n;                 // target arity = big_n - 1
  std::vector<std::int64_t> a; // native (even) a-values, nonincreasing
};

rep_view open_rep(const sd_representative& rep) {
  rep_view v;
  v.fn = &rep.fn;
  v.big_n = rep.fn.arity();
  v.small_n = v.big_n - 1;
  if (v.big_n < 1) throw invalid_representative_error("representative needs >= 1 variable");
  if (rep.chow.m != (std::int64_t{1} << v.small_n)) {
    throw invalid_representative_error("representative is not self-dual balanced");
  }
  v.a = rep.chow.a;
  for (std::size_t i = 0; i < v.a.size(); ++i) {
    if (v.a[i] % 2 != 0) throw invalid_representative_error("odd Chow parameter");
    if (i > 0 && v.a[i] > v.a[i - 1]) {
      throw invalid_representative_error("Chow parameters not in monotonic order");
    }
  }
  return v;
}

// Smallness of the reduction pinning variable i (1-based) to val, tested on
// the singletons of the representative directly.
bool reduction_is_small(const boolean_function& fn, int i, int val) {
  const std::uint32_t pin = val ? (std::uint32_t{1} << (i - 1)) : 0;
  for (int j = 1; j <= fn.arity(); ++j) {
    if (j == i) continue;
    if (fn.bit((std::uint32_t{1} << (j - 1)) | pin)) return false;
  }
  return true;
}

std::uint64_t reduction_orbit(const rep_view& v, int skip_index) {
  std::vector<std::int64_t> rest;
  rest.reserve(v.a.size() - 1);
  for (int j = 0; j < static_cast<int>(v.a.size()); ++j) {
    if (j != skip_index) rest.push_back(v.a[j] / 2);
  }
  return orbit_size_from_a(std::move(rest));
}

std::pair<std::uint64_t, std::uint64_t> sgold_sd_classes(const sd_representative& rep) {
  const rep_view v = open_rep(rep);
  const std::int64_t full = std::int64_t{1} << v.small_n; // native value of a weak pair
  std::uint64_t total = 0, classes = 0;
  for (int i = 0; i < v.big_n; ++i) {
    if (i > 0 && v.a[i] == v.a[i - 1]) continue; // same reduction as before
    if (reduction_is_small(*v.fn, i + 1, 1)) {
      total += reduction_orbit(v, i);
      ++classes;
    }
    // The false reduction is counted only when the pair is not self-dual.
    if (v.a[i] != full && reduction_is_small(*v.fn, i + 1, 0)) {
      total += reduction_orbit(v, i);
      ++classes;
    }
  }
  return {total, classes};
}

std::pair<std::uint64_t, std::uint64_t> gold_sd_classes(const sd_representative& rep) {
  const rep_view v = open_rep(rep);
  const std::int64_t full = std::int64_t{1} << v.small_n;
  std::uint64_t total = 0, classes = 0;
  for (int i = 0; i < v.big_n; ++i) {
    if (i > 0 && v.a[i] == v.a[i - 1]) continue;
    // The ample member of the dual pair: the true reduction has true-set
    // size a_i/2, ample exactly when that is at least 2^{n-1}.
    const int val = v.a[i] >= full ? 1 : 0;
    if (reduction_is_small(*v.fn, i + 1, val)) {
      total += reduction_orbit(v, i);
      ++classes;
    }
  }
  return {total, classes};
}

count_result count_zero_vars(genus_class genus) {
  count_result out;
  for (const char* text : {"0", "1"}) {
    const boolean_function f = boolean_function::from_binary(text);
    if (!is_small(f)) continue;
    if (genus == genus_class::zero && !is_ample(f)) continue;
    if (!is_threshold(f)) continue;
    ++out.count;
    ++out.orbit_count;
  }
  return out;
}

} // namespace

void monotone_functions(int n, const std::function<void(const boolean_function&)>& sink) {
  if (n < 0) throw budget_error("n must be nonnegative");
  if (n > 6) throw budget_error("exhaustive monotone streaming is capped at n = 6");
  if (n <= 5) {
    for (std::uint64_t table : level_store::instance().monotone(n)) {
      sink(to_boolean_function(table128{table, 0}, n));
    }
    return;
  }
  const auto& prev = level_store::instance().monotone(5);
  for (std::uint64_t f0 : prev) {
    for (std::uint64_t f1 : prev) {
      if ((f0 & ~f1) == 0) {
        sink(to_boolean_function(table128{f0 | (f1 << 32), 0}, 6));
      }
    }
  }
}

std::uint64_t count_monotone(int n) {
  std::uint64_t count = 0;
  monotone_functions(n, [&](const boolean_function&) { ++count; });
  return count;
}

const std::vector<std::uint64_t>& positive_ltf_level(int n) {
  return level_store::instance().positive_ltfs(n);
}

bool monotone_threshold_test(const boolean_function& f) {
  if (f.arity() > 7) throw budget_error("monotone threshold test is capped at n = 7");
  return monotone_table_threshold(from_boolean_function(f), f.arity());
}

std::vector<sd_representative> sd_representatives(int n, const enumeration_budget& budget) {
  check_count_budget(n, budget.max_n_sd, "sd");

  std::vector<boolean_function> seeds;
  if (n == 0) {
    seeds = {boolean_function::from_binary("0"), boolean_function::from_binary("1")};
  } else {
    class_scan scan(n, level_store::instance().positive_ltfs(n - 1), false, false);
    scan.run(budget.workers);
    seeds = scan.canonical_representatives();
  }

  std::set<boolean_function> dedup;
  for (const boolean_function& seed : seeds) {
    boolean_function sd = self_dualize(seed);
    if (!is_positive(sd)) {
      // Exactly one of f, dual(f) self-dualizes positively; flipping the new
      // variable swaps between the two.
      sd = u_complement(sd, std::uint32_t{1});
    }
    assert(is_positive(sd) && is_self_dual(sd));
    dedup.insert(canonicalize(sd, /*check_threshold=*/false).representative);
  }

  std::vector<sd_representative> reps;
  reps.reserve(dedup.size());
  for (const boolean_function& fn : dedup) {
    reps.push_back(sd_representative{fn, chow(fn)});
  }
  return reps;
}

std::uint64_t sgold_sd(const sd_representative& rep) {
  return sgold_sd_classes(rep).first;
}

std::uint64_t gold_sd(const sd_representative& rep) {
  return gold_sd_classes(rep).first;
}

count_result count_direct(int n, genus_class genus, const enumeration_budget& budget) {
  check_count_budget(n, budget.max_n_direct, "direct");
  if (n == 0) return count_zero_vars(genus);

  class_scan scan(n, level_store::instance().positive_ltfs(n - 1),
                  /*screen_small=*/true,
                  /*screen_ample=*/genus == genus_class::zero);
  scan.run(budget.workers);
  return {scan.ltf_count(), scan.ltf_classes()};
}

count_result count_sd(int n, genus_class genus, const enumeration_budget& budget) {
  check_count_budget(n, budget.max_n_sd, "sd");

  const std::vector<sd_representative> reps = sd_representatives(n, budget);
  std::vector<count_result> partial(reps.size());
  parallel_for(reps.size(), budget.workers,
               [&](std::uint64_t begin, std::uint64_t end, int) {
                 for (std::uint64_t i = begin; i < end; ++i) {
                   const auto [total, classes] = genus == genus_class::positive
                                                     ? sgold_sd_classes(reps[i])
                                                     : gold_sd_classes(reps[i]);
                   partial[i] = {total, classes};
                 }
               });
  count_result out;
  for (const count_result& p : partial) {
    out.count += p.count;
    out.orbit_count += p.orbit_count;
  }
  return out;
}

} // namespace goldilocks
