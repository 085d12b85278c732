#include "goldilocks/ltf.hpp"

#include <algorithm>
#include <cassert>

#include "goldilocks/chow.hpp"
#include "goldilocks/lp.hpp"

namespace goldilocks {

realization::realization(std::vector<mpq_class> w, mpq_class theta)
    : w_(std::move(w)), theta_(std::move(theta)) {}

bool realization::realizes(const boolean_function& f) const {
  if (f.arity() != arity()) return false;
  for (std::uint32_t c = 0; c < f.table_size(); ++c) {
    mpq_class dot = 0;
    for (int i = 0; i < arity(); ++i) {
      if ((c >> i) & 1u) dot += w_[i];
    }
    if (f.bit(c) != (dot > theta_)) return false;
  }
  return true;
}

bool realization::positive() const {
  return std::all_of(w_.begin(), w_.end(), [](const mpq_class& wi) { return wi > 0; });
}

bool realization::small() const {
  return std::all_of(w_.begin(), w_.end(),
                     [&](const mpq_class& wi) { return wi <= theta_; });
}

bool realization::ample() const {
  mpq_class sum = 0;
  for (const mpq_class& wi : w_) sum += wi;
  return sum > 2 * theta_;
}

bool asummability_witness::verify(const boolean_function& f) const {
  if (c.size() != f.table_size()) return false;
  const int n = f.arity();
  mpz_class true_total = 0, false_total = 0;
  std::vector<mpz_class> true_sum(n, 0), false_sum(n, 0);
  for (std::uint32_t k = 0; k < f.table_size(); ++k) {
    if (c[k] < 0) return false;
    if (f.bit(k)) {
      true_total += c[k];
      for (int i = 0; i < n; ++i) {
        if ((k >> i) & 1u) true_sum[i] += c[k];
      }
    } else {
      false_total += c[k];
      for (int i = 0; i < n; ++i) {
        if ((k >> i) & 1u) false_sum[i] += c[k];
      }
    }
  }
  if (true_total != false_total || true_total == 0) return false;
  return true_sum == false_sum;
}

realization_result find_realization(const boolean_function& f, constraint_set cs) {
  const int n = f.arity();
  const int dim = n + 1; // y = (w_1..w_n, theta)
  std::vector<lp_row> rows;
  rows.reserve(f.table_size() + (cs.positive ? n : 0) + (cs.small ? n : 0) +
               (cs.ample ? 1 : 0));

  for (std::uint32_t c = 0; c < f.table_size(); ++c) {
    lp_row row;
    row.coeffs.assign(dim, 0);
    if (f.bit(c)) {
      for (int i = 0; i < n; ++i) row.coeffs[i] = ((c >> i) & 1u) ? 1 : 0;
      row.coeffs[n] = -1;
      row.rhs = 1;
    } else {
      for (int i = 0; i < n; ++i) row.coeffs[i] = ((c >> i) & 1u) ? -1 : 0;
      row.coeffs[n] = 1;
      row.rhs = 0;
    }
    rows.push_back(std::move(row));
  }
  if (cs.positive) {
    for (int i = 0; i < n; ++i) {
      lp_row row;
      row.coeffs.assign(dim, 0);
      row.coeffs[i] = 1;
      row.rhs = 1;
      rows.push_back(std::move(row));
    }
  }
  if (cs.small) {
    for (int i = 0; i < n; ++i) {
      lp_row row;
      row.coeffs.assign(dim, 0);
      row.coeffs[i] = -1;
      row.coeffs[n] = 1;
      row.rhs = 0;
      rows.push_back(std::move(row));
    }
  }
  if (cs.ample) {
    lp_row row;
    row.coeffs.assign(dim, 1);
    row.coeffs[n] = -2;
    row.rhs = 1;
    rows.push_back(std::move(row));
  }

  lp_result lp = solve_inequalities(dim, rows);
  realization_result out;
  if (lp.feasible) {
    std::vector<mpq_class> w(lp.solution.begin(), lp.solution.begin() + n);
    out.value = realization(std::move(w), lp.solution[n]);
    assert(out.value->realizes(f));
    return out;
  }
  const bool unconstrained = !cs.positive && !cs.small && !cs.ample;
  if (unconstrained) {
    // Clear the Farkas multipliers to integers: they are supported on the
    // cube rows only and form exactly the asummability certificate.
    mpz_class scale = 1;
    for (std::uint32_t k = 0; k < f.table_size(); ++k) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              lp.farkas[k].get_den().get_mpz_t());
    }
    asummability_witness witness;
    witness.c.resize(f.table_size());
    for (std::uint32_t k = 0; k < f.table_size(); ++k) {
      mpq_class scaled = lp.farkas[k] * scale;
      witness.c[k] = scaled.get_num();
    }
    assert(witness.verify(f));
    out.witness = std::move(witness);
  }
  return out;
}

bool is_threshold(const boolean_function& f) {
  return find_realization(f).value.has_value();
}

realization amplify(const realization& r, const boolean_function& f) {
  if (!is_ample(f)) {
    throw not_ample_error("amplification requires an ample function");
  }
  if (!r.realizes(f)) {
    throw invalid_realization_error("realization does not realize the function");
  }
  if (r.ample()) return r;

  mpq_class sum = 0;
  for (const mpq_class& wi : r.w()) sum += wi;

  bool have_false = false;
  mpq_class best = 0;
  for (std::uint32_t c = 0; c < f.table_size(); ++c) {
    if (f.bit(c)) continue;
    mpq_class dot = 0;
    for (int i = 0; i < f.arity(); ++i) {
      if ((c >> i) & 1u) dot += r.w()[i];
    }
    if (!have_false || dot > best) {
      best = dot;
      have_false = true;
    }
  }
  // No false points means f = const1; there is no maximum to move theta to,
  // so drop it just below half the total weight.
  const mpq_class theta_new = have_false ? best : mpq_class((sum - 1) / 2);
  realization amplified(r.w(), theta_new);
  assert(amplified.realizes(f));
  assert(amplified.ample());
  return amplified;
}

boolean_function phi_nondegenerate(const boolean_function& f) {
  if (!is_positive(f) || !is_small(f) || !is_threshold(f)) {
    throw class_error("phi is defined on Semi-Goldilocks functions only");
  }
  std::uint32_t weak_mask = 0;
  for (int i : weak_variables(f)) weak_mask |= std::uint32_t{1} << (i - 1);
  boolean_function h(f.arity());
  for (std::uint32_t c = 0; c < f.table_size(); ++c) {
    h.set_bit(c, (c & weak_mask) ? true : f.bit(c));
  }
  return h;
}

boolean_function phi_inverse(const boolean_function& h) {
  if (!is_positive(h) || degree(h) != h.arity() || !is_threshold(h)) {
    throw class_error("phi_inverse needs a nondegenerate positive threshold function");
  }
  std::uint32_t large_mask = 0;
  for (int i = 0; i < h.arity(); ++i) {
    if (h.bit(std::uint32_t{1} << i)) large_mask |= std::uint32_t{1} << i;
  }
  boolean_function f(h.arity());
  for (std::uint32_t c = 0; c < h.table_size(); ++c) {
    f.set_bit(c, h.bit(c & ~large_mask));
  }
  return f;
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_str();
}

mpq_class rational_from_string(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational");
  const auto dot = text.find('.');
  try {
    if (dot != std::string::npos) {
      const std::string whole = text.substr(0, dot);
      const std::string frac = text.substr(dot + 1);
      if (frac.find_first_not_of("0123456789") != std::string::npos) {
        throw parse_error("invalid decimal: " + text);
      }
      mpz_class den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      mpz_class num(whole.empty() || whole == "-" ? whole + "0" : whole);
      const bool negative = num < 0 || whole.starts_with("-");
      num = num * den + (negative ? -mpz_class(frac.empty() ? "0" : frac)
                                  : mpz_class(frac.empty() ? "0" : frac));
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    mpq_class q(text);
    q.canonicalize();
    if (q.get_den() == 0) throw parse_error("zero denominator in: " + text);
    return q;
  } catch (const std::invalid_argument&) {
    throw parse_error("invalid rational: " + text);
  }
}

} // namespace goldilocks
