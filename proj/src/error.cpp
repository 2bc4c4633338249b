#include "bezout/error.hpp"

namespace bezout {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::json_error: return "JsonError";
    case Errc::both_constant: return "BothConstant";
    case Errc::common_roots: return "CommonRoots";
    case Errc::not_a_root: return "NotARoot";
    case Errc::division_by_zero_polynomial: return "DivisionByZeroPolynomial";
    case Errc::constant_polynomial: return "ConstantPolynomial";
    case Errc::duplicate_nodes: return "DuplicateNodes";
    case Errc::norm_too_large: return "NormTooLarge";
    case Errc::hypothesis_violated: return "HypothesisViolated";
    case Errc::vector_too_short: return "VectorTooShort";
    case Errc::empty_input: return "EmptyInput";
    case Errc::not_schur_class: return "NotSchurClass";
    case Errc::blaschke_product: return "BlaschkeProduct";
    case Errc::odd_circle_multiplicity: return "OddCircleMultiplicity";
    case Errc::common_roots_after_combination: return "CommonRootsAfterCombination";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::sample_outside_disk: return "SampleOutsideDisk";
    case Errc::exact_unavailable: return "ExactUnavailable";
    case Errc::numeric_failure: return "NumericFailure";
  }
  return "UnknownError";
}

bool errc_is_validation(Errc code) {
  switch (code) {
    case Errc::numeric_failure:
    case Errc::odd_circle_multiplicity:
    case Errc::common_roots_after_combination:
      return false;
    default:
      return true;
  }
}

}  // namespace bezout
