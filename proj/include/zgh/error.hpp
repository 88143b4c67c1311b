#pragma once

#include <stdexcept>
#include <string>

namespace zgh {

enum class Errc {
  shape_mismatch,
  field_mismatch,
  bad_scalar,
  division_by_zero,
  invalid_group_table,
  missing_antipode_inverse,
  cocycle_violation,
  validation_failure,
  not_bialgebra_automorphism,
  nontrivial_comonoidal_structure,
  non_strict_action,
  grade_mismatch,
  not_half_braiding,
  unknown_suite,
  parse_error,
  unresolved_reference,
};

const char* errc_name(Errc c);

/// All library failures surface as Error; the code tells callers which
/// contract was violated, the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace zgh
