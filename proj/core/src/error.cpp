#include "quadff/error.hpp"

namespace quadff {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::unsupported_order: return "unsupported-order";
    case Errc::no_irreducible: return "no-irreducible-found";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::mixed_field: return "mixed-field";
    case Errc::field_mismatch: return "field-mismatch";
    case Errc::syntax_error: return "syntax-error";
    case Errc::coefficient_out_of_field: return "coefficient-out-of-field";
    case Errc::zero_polynomial: return "zero-polynomial";
    case Errc::not_square_free: return "not-square-free";
    case Errc::even_degree: return "even-degree";
    case Errc::even_characteristic: return "even-characteristic-field";
    case Errc::odd_characteristic: return "odd-characteristic-field";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::reduction_invalid_form: return "reduction-produces-invalid-form";
    case Errc::artin_schreier_degenerate: return "artin-schreier-degenerate";
    case Errc::out_of_scope_form: return "out-of-scope-form";
    case Errc::extension_too_large: return "extension-too-large";
    case Errc::non_integral: return "non-integral-result";
    case Errc::overflow: return "integer-overflow";
    case Errc::root_finder_nonconvergence: return "root-finder-nonconvergence";
    case Errc::invalid_t: return "invalid-t";
    case Errc::unsupported_h: return "unsupported-h";
    case Errc::infeasible_pair: return "infeasible-pair";
    case Errc::io_error: return "io-error";
  }
  return "unknown";
}

}  // namespace quadff
