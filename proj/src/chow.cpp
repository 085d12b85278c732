#include "goldilocks/chow.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "goldilocks/ltf.hpp"

namespace goldilocks {

std::string chow_parameters::to_string() const {
  std::string out = std::to_string(m) + ";";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out;
}

chow_parameters chow(const boolean_function& f) {
  const int n = f.arity();
  chow_parameters cp;
  cp.a.assign(n, 0);
  std::vector<std::int64_t> true_with(n, 0);
  std::int64_t m = 0;
  for (std::uint32_t c = 0; c < f.table_size(); ++c) {
    if (!f.bit(c)) continue;
    ++m;
    for (int i = 0; i < n; ++i) {
      if ((c >> i) & 1u) ++true_with[i];
    }
  }
  cp.m = m;
  const std::int64_t half = n == 0 ? 0 : std::int64_t{1} << (n - 1);
  for (int i = 0; i < n; ++i) {
    // |F with x_i = 0| = 2^{n-1} - (m - |T with x_i = 1|).
    cp.a[i] = 2 * true_with[i] + half - m;
  }
  return cp;
}

std::set<int> weak_variables(const boolean_function& f) {
  const chow_parameters cp = chow(f);
  const std::int64_t half = f.arity() == 0 ? 0 : std::int64_t{1} << (f.arity() - 1);
  std::set<int> weak;
  for (int i = 0; i < f.arity(); ++i) {
    if (cp.a[i] == half) weak.insert(i + 1);
  }
  return weak;
}

int degree(const boolean_function& f) {
  return f.arity() - static_cast<int>(weak_variables(f).size());
}

canonical_form canonicalize(const boolean_function& f, bool check_threshold) {
  if (check_threshold && !is_threshold(f)) {
    throw not_threshold_error("canonical form is only defined for threshold functions");
  }
  const chow_parameters cp = chow(f);
  const int n = f.arity();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return cp.a[i - 1] > cp.a[j - 1]; });

  // permute moves the a-value of variable sigma^{-1}(j) to slot j, so the
  // sorting permutation is the inverse of the descending order.
  std::vector<int> sigma(n);
  for (int k = 0; k < n; ++k) sigma[order[k] - 1] = k + 1;

  canonical_form out{permute(f, sigma), sigma, {}};
  for (int i = 0; i < n; ++i) {
    const std::int64_t v = cp.a[order[i] - 1];
    if (i > 0 && v == cp.a[order[i - 1] - 1]) {
      ++out.multiplicities.back();
    } else {
      out.multiplicities.push_back(1);
    }
  }
  return out;
}

std::uint64_t orbit_size_from_a(std::vector<std::int64_t> a) {
  std::sort(a.begin(), a.end());
  std::uint64_t size = 1;
  for (std::size_t i = 2; i <= a.size(); ++i) size *= i;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    if (i < a.size() && a[i] == a[i - 1]) {
      ++run;
    } else {
      std::uint64_t fact = 1;
      for (std::size_t k = 2; k <= run; ++k) fact *= k;
      size /= fact;
      run = 1;
    }
  }
  return size;
}

std::uint64_t orbit_size(const boolean_function& f, bool check_threshold) {
  if (check_threshold && !is_threshold(f)) {
    throw not_threshold_error("orbit size via Chow parameters needs a threshold function");
  }
  return orbit_size_from_a(chow(f).a);
}

} // namespace goldilocks
