#include "focalis/error.hpp"

namespace focalis {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::unknown_command: return "UNKNOWN_COMMAND";
    case Errc::unknown_key: return "UNKNOWN_KEY";
    case Errc::bad_schema: return "BAD_SCHEMA";
    case Errc::gram_not_symmetric: return "GRAM_NOT_SYMMETRIC";
    case Errc::gram_singular: return "GRAM_SINGULAR";
    case Errc::dimension_mismatch: return "DIMENSION_MISMATCH";
    case Errc::division_by_zero: return "DIVISION_BY_ZERO";
    case Errc::zero_polynomial: return "ZERO_POLYNOMIAL";
    case Errc::variable_mismatch: return "VARIABLE_MISMATCH";
    case Errc::degenerate_parametrization: return "DEGENERATE_PARAMETRIZATION";
    case Errc::not_hypersurface: return "NOT_HYPERSURFACE";
    case Errc::no_samples: return "NO_SAMPLES";
    case Errc::retry_exhausted: return "RETRY_EXHAUSTED";
    case Errc::precondition: return "PRECONDITION";
    case Errc::unsupported: return "UNSUPPORTED";
    case Errc::witness_not_in_variety: return "WITNESS_NOT_IN_VARIETY";
    case Errc::not_immersed: return "NOT_IMMERSED";
    case Errc::annihilator_not_isotropic: return "ANNIHILATOR_NOT_ISOTROPIC";
    case Errc::invariant_violation: return "INVARIANT_VIOLATION";
    case Errc::internal: return "INTERNAL";
  }
  return "INTERNAL";
}

int errc_exit_code(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::unknown_command:
    case Errc::unknown_key:
    case Errc::bad_schema:
      return 2;
    case Errc::gram_not_symmetric:
    case Errc::gram_singular:
    case Errc::dimension_mismatch:
    case Errc::division_by_zero:
    case Errc::zero_polynomial:
    case Errc::variable_mismatch:
    case Errc::degenerate_parametrization:
    case Errc::not_hypersurface:
    case Errc::no_samples:
    case Errc::precondition:
    case Errc::unsupported:
    case Errc::witness_not_in_variety:
    case Errc::not_immersed:
    case Errc::annihilator_not_isotropic:
    case Errc::invariant_violation:
      return 3;
    case Errc::retry_exhausted:
    case Errc::internal:
      return 4;
  }
  return 4;
}

}  // namespace focalis
