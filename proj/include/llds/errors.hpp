#pragma once

#include <stdexcept>
#include <string>

namespace llds {

enum class errc {
  not_prime,
  reducible_modulus,
  field_too_large,
  division_by_zero,
  wrong_characteristic,
  budget_exceeded,
  shape_mismatch,
  singular_transform,
  not_clld,
  not_r_reduced,
  invalid_shape,
  zero_space,
  bad_witness,
  hypothesis_violated,
  invariant_violation,
  odd_dimension,
  not_alternating,
  wrong_dimension,
  wrong_ambient,
  dimension_too_large,
  unknown_id,
  bad_params,
  vacuous_class,
  syntax_error,
  value_out_of_range,
  not_alternating_form,
  usage_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace llds
