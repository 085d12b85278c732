#include "goldilocks/boolfn.hpp"

#include <algorithm>
#include <bit>

namespace goldilocks {

namespace {

void check_arity(int arity) {
  if (arity < 0 || arity > arity_max) {
    throw arity_error("arity " + std::to_string(arity) + " outside [0, " +
                      std::to_string(arity_max) + "]");
  }
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

} // namespace

point::point(int arity, std::uint32_t code) : arity_(arity), code_(code) {
  check_arity(arity);
  if (code >= (std::uint32_t{1} << arity)) {
    throw index_error("point code " + std::to_string(code) + " out of range for arity " +
                      std::to_string(arity));
  }
}

point point::from_bits(const std::vector<bool>& bits) {
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) code |= std::uint32_t{1} << i;
  }
  return point(static_cast<int>(bits.size()), code);
}

bool point::bit(int i) const {
  if (i < 1 || i > arity_) {
    throw index_error("variable index " + std::to_string(i) + " out of range");
  }
  return (code_ >> (i - 1)) & 1u;
}

point point::negated() const {
  const std::uint32_t full = (std::uint32_t{1} << arity_) - 1;
  return point(arity_, full ^ code_);
}

std::vector<bool> point::bits() const {
  std::vector<bool> out(arity_);
  for (int i = 0; i < arity_; ++i) out[i] = (code_ >> i) & 1u;
  return out;
}

boolean_function::boolean_function(int arity) : arity_(arity) {
  check_arity(arity);
  const std::uint32_t size = std::uint32_t{1} << arity;
  words_.assign((size + 63) / 64, 0);
}

bool boolean_function::bit(std::uint32_t code) const {
  if (code >= table_size()) {
    throw index_error("code " + std::to_string(code) + " out of range");
  }
  return (words_[code >> 6] >> (code & 63)) & 1u;
}

void boolean_function::set_bit(std::uint32_t code, bool value) {
  if (code >= table_size()) {
    throw index_error("code " + std::to_string(code) + " out of range");
  }
  const std::uint64_t mask = std::uint64_t{1} << (code & 63);
  if (value) {
    words_[code >> 6] |= mask;
  } else {
    words_[code >> 6] &= ~mask;
  }
}

boolean_function boolean_function::from_binary(std::string_view text) {
  const std::size_t len = text.size();
  if (len == 0 || !std::has_single_bit(len)) {
    throw parse_error("truth table length must be a power of two, got " +
                      std::to_string(len));
  }
  const int arity = std::countr_zero(len);
  if (arity > arity_max) {
    throw arity_error("truth table of length " + std::to_string(len) + " exceeds arity cap");
  }
  boolean_function f(arity);
  for (std::size_t k = 0; k < len; ++k) {
    if (text[k] == '1') {
      f.set_bit(static_cast<std::uint32_t>(k), true);
    } else if (text[k] != '0') {
      throw parse_error("truth table characters must be 0 or 1");
    }
  }
  return f;
}

boolean_function boolean_function::from_hex(std::string_view text) {
  if (text.size() < 3 || text[0] != '0' || (text[1] != 'x' && text[1] != 'X')) {
    throw parse_error("hex truth table must start with 0x");
  }
  const std::string_view digits = text.substr(2);
  const std::size_t nbits = 4 * digits.size();
  if (!std::has_single_bit(nbits) || nbits < 4) {
    throw parse_error("hex truth table must encode a power-of-two bit count");
  }
  const int arity = std::countr_zero(nbits);
  if (arity > arity_max) {
    throw arity_error("hex truth table exceeds arity cap");
  }
  boolean_function f(arity);
  for (std::size_t d = 0; d < digits.size(); ++d) {
    const int v = hex_digit(digits[d]);
    if (v < 0) throw parse_error("invalid hex digit in truth table");
    for (int b = 0; b < 4; ++b) {
      // Digit d covers table positions 4d..4d+3, most significant bit first.
      if ((v >> (3 - b)) & 1) {
        f.set_bit(static_cast<std::uint32_t>(4 * d + b), true);
      }
    }
  }
  return f;
}

boolean_function boolean_function::parse(std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    return from_hex(text);
  }
  return from_binary(text);
}

std::string boolean_function::to_binary() const {
  std::string out(table_size(), '0');
  for (std::uint32_t k = 0; k < table_size(); ++k) {
    if (bit(k)) out[k] = '1';
  }
  return out;
}

std::string boolean_function::to_hex() const {
  if (arity_ < 2) {
    throw arity_error("hex form needs a table of at least 4 bits");
  }
  static const char* digits = "0123456789abcdef";
  std::string out = "0x";
  for (std::uint32_t k = 0; k < table_size(); k += 4) {
    int v = 0;
    for (int b = 0; b < 4; ++b) v = (v << 1) | (bit(k + b) ? 1 : 0);
    out.push_back(digits[v]);
  }
  return out;
}

bool evaluate(const boolean_function& f, const point& x) {
  if (x.arity() != f.arity()) {
    throw arity_error("point arity " + std::to_string(x.arity()) +
                      " does not match function arity " + std::to_string(f.arity()));
  }
  return f.bit(x.code());
}

boolean_function dual(const boolean_function& f) {
  const std::uint32_t full = f.table_size() - 1;
  boolean_function out(f.arity());
  for (std::uint32_t k = 0; k <= full; ++k) {
    out.set_bit(k, !f.bit(full ^ k));
  }
  return out;
}

bool is_self_dual(const boolean_function& f) {
  const std::uint32_t full = f.table_size() - 1;
  for (std::uint32_t k = 0; k <= full; ++k) {
    if (f.bit(k) == f.bit(full ^ k)) return false;
  }
  return true;
}

boolean_function self_dualize(const boolean_function& f) {
  check_arity(f.arity() + 1);
  const std::uint32_t full = f.table_size() - 1;
  boolean_function out(f.arity() + 1);
  for (std::uint32_t k = 0; k < out.table_size(); ++k) {
    const std::uint32_t rest = k >> 1;
    const bool value = (k & 1) ? !f.bit(full ^ rest) : f.bit(rest);
    out.set_bit(k, value);
  }
  return out;
}

boolean_function anti_self_dualize(const boolean_function& f) {
  if (f.arity() < 1) {
    throw arity_error("anti-self-dualization needs at least one variable");
  }
  if (!is_self_dual(f)) {
    throw not_self_dual_error("anti-self-dualization requires a self-dual function");
  }
  boolean_function out(f.arity() - 1);
  for (std::uint32_t k = 0; k < out.table_size(); ++k) {
    out.set_bit(k, f.bit(k << 1));
  }
  return out;
}

boolean_function u_complement(const boolean_function& f, std::uint32_t u_code) {
  if (u_code >= f.table_size()) {
    throw index_error("u out of range");
  }
  boolean_function out(f.arity());
  for (std::uint32_t k = 0; k < f.table_size(); ++k) {
    out.set_bit(k, f.bit(k ^ u_code));
  }
  return out;
}

boolean_function u_complement(const boolean_function& f, const point& u) {
  if (u.arity() != f.arity()) {
    throw arity_error("u-complement arity mismatch");
  }
  return u_complement(f, u.code());
}

boolean_function permute(const boolean_function& f, const std::vector<int>& sigma) {
  const int n = f.arity();
  if (static_cast<int>(sigma.size()) != n) {
    throw perm_error("permutation size does not match arity");
  }
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw perm_error("not a permutation of 1..n");
    }
    seen[v - 1] = true;
  }
  boolean_function out(n);
  for (std::uint32_t c = 0; c < f.table_size(); ++c) {
    std::uint32_t y = 0;
    for (int i = 0; i < n; ++i) {
      y |= ((c >> (sigma[i] - 1)) & 1u) << i;
    }
    out.set_bit(c, f.bit(y));
  }
  return out;
}

std::vector<int> compose(const std::vector<int>& sigma, const std::vector<int>& tau) {
  if (sigma.size() != tau.size()) {
    throw perm_error("composing permutations of different sizes");
  }
  std::vector<int> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    out[i] = tau[sigma[i] - 1];
  }
  return out;
}

boolean_function reduce(const boolean_function& f, int i, bool s) {
  const int n = f.arity();
  if (n < 1) {
    throw arity_error("cannot reduce a zero-variable function");
  }
  if (i < 1 || i > n) {
    throw index_error("reduction index " + std::to_string(i) + " out of range");
  }
  boolean_function out(n - 1);
  const std::uint32_t low_mask = (std::uint32_t{1} << (i - 1)) - 1;
  for (std::uint32_t c = 0; c < out.table_size(); ++c) {
    const std::uint32_t code = (c & low_mask) |
                               (static_cast<std::uint32_t>(s) << (i - 1)) |
                               ((c & ~low_mask) << 1);
    out.set_bit(c, f.bit(code));
  }
  return out;
}

bool is_positive(const boolean_function& f) {
  for (int i = 0; i < f.arity(); ++i) {
    const std::uint32_t mask = std::uint32_t{1} << i;
    for (std::uint32_t c = 0; c < f.table_size(); ++c) {
      if ((c & mask) == 0 && f.bit(c) && !f.bit(c | mask)) return false;
    }
  }
  return true;
}

bool is_small(const boolean_function& f) {
  for (int i = 0; i < f.arity(); ++i) {
    if (f.bit(std::uint32_t{1} << i)) return false;
  }
  return true;
}

bool is_ample(const boolean_function& f) {
  const std::uint32_t full = f.table_size() - 1;
  for (std::uint32_t k = 0; k <= full / 2; ++k) {
    if (!f.bit(k) && !f.bit(full ^ k)) return false;
  }
  return true;
}

} // namespace goldilocks
