#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadff {

/// Error categories raised by the library. Every public operation reports
/// failures by throwing quadff::Error carrying one of these codes.
enum class Errc {
  unsupported_order,
  no_irreducible,
  division_by_zero,
  mixed_field,
  field_mismatch,
  syntax_error,
  coefficient_out_of_field,
  zero_polynomial,
  not_square_free,
  even_degree,
  even_characteristic,
  odd_characteristic,
  invalid_argument,
  reduction_invalid_form,
  artin_schreier_degenerate,
  out_of_scope_form,
  extension_too_large,
  non_integral,
  overflow,
  root_finder_nonconvergence,
  invalid_t,
  unsupported_h,
  infeasible_pair,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace quadff
