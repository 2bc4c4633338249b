#pragma once

#include <stdexcept>
#include <string>

namespace bezout {

enum class Errc {
  invalid_argument,
  json_error,
  both_constant,
  common_roots,
  not_a_root,
  division_by_zero_polynomial,
  constant_polynomial,
  duplicate_nodes,
  norm_too_large,
  hypothesis_violated,
  vector_too_short,
  empty_input,
  not_schur_class,
  blaschke_product,
  odd_circle_multiplicity,
  common_roots_after_combination,
  index_out_of_range,
  sample_outside_disk,
  exact_unavailable,
  numeric_failure,
};

const char* errc_name(Errc code);

// Validation errors map to CLI exit 2, numeric failures to exit 1.
bool errc_is_validation(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  bool is_validation() const { return errc_is_validation(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bezout
