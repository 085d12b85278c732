#pragma once

#include <stdexcept>
#include <string>

namespace goldilocks {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct arity_error : error {
  using error::error;
};

struct parse_error : error {
  using error::error;
};

struct perm_error : error {
  using error::error;
};

struct index_error : error {
  using error::error;
};

struct not_self_dual_error : error {
  using error::error;
};

struct not_threshold_error : error {
  using error::error;
};

struct not_ample_error : error {
  using error::error;
};

struct invalid_realization_error : error {
  using error::error;
};

struct class_error : error {
  using error::error;
};

struct admissibility_error : error {
  using error::error;
};

struct budget_error : error {
  using error::error;
};

struct engine_mismatch_error : error {
  using error::error;
};

struct invalid_representative_error : error {
  using error::error;
};

} // namespace goldilocks
