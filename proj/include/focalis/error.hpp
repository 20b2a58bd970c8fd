#pragma once

#include <stdexcept>
#include <string>

namespace focalis {

// Stable error codes. The numeric exit-code category (2 parse, 3 precondition,
// 4 internal) is derived from the code, never stored separately.
enum class Errc {
  parse_error,
  unknown_command,
  unknown_key,
  bad_schema,
  gram_not_symmetric,
  gram_singular,
  dimension_mismatch,
  division_by_zero,
  zero_polynomial,
  variable_mismatch,
  degenerate_parametrization,
  not_hypersurface,
  no_samples,
  retry_exhausted,
  precondition,
  unsupported,
  witness_not_in_variety,
  not_immersed,
  annihilator_not_isotropic,
  invariant_violation,
  internal,
};

const char* errc_name(Errc c);

// 2 = parse, 3 = precondition, 4 = internal-consistency
int errc_exit_code(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }
  int exit_code() const { return errc_exit_code(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace focalis
