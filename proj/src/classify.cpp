#include "goldilocks/classify.hpp"

#include <cassert>

namespace goldilocks {

namespace {

std::optional<not_positive_certificate> find_not_positive(const boolean_function& f) {
  // Lexicographically least (x, y) with x <= y and f(x) > f(y). A least such
  // pair can always be chosen with y covering x in one coordinate, but the
  // scan below orders by (x, y) over all comparable pairs regardless.
  for (std::uint32_t x = 0; x < f.table_size(); ++x) {
    if (!f.bit(x)) continue;
    for (std::uint32_t y = x + 1; y < f.table_size(); ++y) {
      if ((x & y) == x && !f.bit(y)) {
        return not_positive_certificate{x, y};
      }
    }
  }
  return std::nullopt;
}

std::optional<not_small_certificate> find_not_small(const boolean_function& f) {
  for (int i = 0; i < f.arity(); ++i) {
    if (f.bit(std::uint32_t{1} << i)) return not_small_certificate{i + 1};
  }
  return std::nullopt;
}

std::optional<not_ample_certificate> find_not_ample(const boolean_function& f) {
  const std::uint32_t full = f.table_size() - 1;
  for (std::uint32_t k = 0; k <= full / 2; ++k) {
    if (!f.bit(k) && !f.bit(full ^ k)) return not_ample_certificate{k};
  }
  return std::nullopt;
}

} // namespace

bool verify_certificate(const boolean_function& f, const certificate& c) {
  return std::visit(
      [&](const auto& cert) -> bool {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, not_separable_certificate>) {
          return cert.witness.verify(f);
        } else if constexpr (std::is_same_v<T, not_positive_certificate>) {
          if (cert.x_code >= f.table_size() || cert.y_code >= f.table_size()) return false;
          const bool below = (cert.x_code & cert.y_code) == cert.x_code;
          return below && f.bit(cert.x_code) && !f.bit(cert.y_code);
        } else if constexpr (std::is_same_v<T, not_small_certificate>) {
          if (cert.index < 1 || cert.index > f.arity()) return false;
          return f.bit(std::uint32_t{1} << (cert.index - 1));
        } else {
          if (cert.x_code >= f.table_size()) return false;
          const std::uint32_t full = f.table_size() - 1;
          return !f.bit(cert.x_code) && !f.bit(full ^ cert.x_code);
        }
      },
      c);
}

class_report classify(const boolean_function& f) {
  class_report report;
  report.chow = chow(f);
  report.degree = degree(f);

  // Combinatorial screens first; the LP runs once at most.
  report.small = is_small(f);
  report.positive = is_positive(f);
  report.ample = is_ample(f);

  realization_result unconstrained = find_realization(f);
  report.is_ltf = unconstrained.value.has_value();
  report.semi_goldilocks = report.is_ltf && report.positive && report.small;
  report.goldilocks = report.semi_goldilocks && report.ample;

  if (report.semi_goldilocks) {
    constraint_set cs;
    cs.positive = true;
    cs.small = true;
    cs.ample = report.goldilocks;
    realization_result constrained = find_realization(f, cs);
    assert(constrained.value.has_value());
    report.witness_realization = std::move(constrained.value);
  }

  if (!report.goldilocks) {
    if (!report.is_ltf) {
      report.failure_certificate =
          not_separable_certificate{std::move(*unconstrained.witness)};
    } else if (!report.positive) {
      report.failure_certificate = *find_not_positive(f);
    } else if (!report.small) {
      report.failure_certificate = *find_not_small(f);
    } else {
      report.failure_certificate = *find_not_ample(f);
    }
    assert(verify_certificate(f, *report.failure_certificate));
  }
  return report;
}

bool is_semi_goldilocks(const boolean_function& f) {
  return is_small(f) && is_positive(f) && is_threshold(f);
}

bool is_goldilocks(const boolean_function& f) {
  return is_small(f) && is_positive(f) && is_ample(f) && is_threshold(f);
}

boolean_function reduce_thres_to_sgold(const boolean_function& f) {
  const int n = f.arity();
  const chow_parameters cp = chow(f);
  const std::int64_t half = n == 0 ? 0 : std::int64_t{1} << (n - 1);

  std::uint32_t u = 0;
  for (int i = 0; i < n; ++i) {
    if (cp.a[i] < half) u |= std::uint32_t{1} << i; // strictly decreasing only
  }
  boolean_function positive_form = u_complement(f, u);

  // A threshold input always monotonizes; anything that does not is already
  // certified non-separable and is returned as-is.
  if (!is_positive(positive_form)) return positive_form;

  // A positive function true at the origin is const1 (a threshold function);
  // its Semi-Goldilocks stand-in is const0.
  if (positive_form.bit(0)) return boolean_function(n);

  std::uint32_t large_mask = 0;
  for (int i = 0; i < n; ++i) {
    if (positive_form.bit(std::uint32_t{1} << i)) large_mask |= std::uint32_t{1} << i;
  }
  boolean_function out(n);
  for (std::uint32_t c = 0; c < out.table_size(); ++c) {
    out.set_bit(c, positive_form.bit(c & ~large_mask));
  }
  return out;
}

bool reduce_sgold_to_gold(const boolean_function& f) {
  return is_goldilocks(f) || is_goldilocks(dual(f));
}

} // namespace goldilocks
