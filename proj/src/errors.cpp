#include "llds/errors.hpp"

namespace llds {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::field_too_large: return "FieldTooLarge";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::singular_transform: return "SingularTransform";
    case errc::not_clld: return "NotCLLD";
    case errc::not_r_reduced: return "NotRReduced";
    case errc::invalid_shape: return "InvalidShape";
    case errc::zero_space: return "ZeroSpace";
    case errc::bad_witness: return "BadWitness";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::odd_dimension: return "OddDimension";
    case errc::not_alternating: return "NotAlternating";
    case errc::wrong_dimension: return "WrongDimension";
    case errc::wrong_ambient: return "WrongAmbient";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::unknown_id: return "UnknownId";
    case errc::bad_params: return "BadParams";
    case errc::vacuous_class: return "VacuousClass";
    case errc::syntax_error: return "SyntaxError";
    case errc::value_out_of_range: return "ValueOutOfRange";
    case errc::not_alternating_form: return "NotAlternatingForm";
    case errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace llds
