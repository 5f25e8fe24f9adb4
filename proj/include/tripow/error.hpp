#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tripow {

enum class errc {
  order_mismatch,
  non_invertible_series,
  composition_domain,
  truncation_exceeded,
  not_comp_invertible,
  degenerate_h,
  non_unit_base,
  domain,
  index,
  invalid_spec,
  invalid_weights,
  singular_matrix,
  non_rational_power,
  preset,
  syntax,
  unknown_function,
  semantic,
};

constexpr std::string_view to_string(errc e) noexcept {
  switch (e) {
    case errc::order_mismatch: return "order mismatch";
    case errc::non_invertible_series: return "non-invertible series";
    case errc::composition_domain: return "composition domain";
    case errc::truncation_exceeded: return "truncation exceeded";
    case errc::not_comp_invertible: return "not invertible under composition";
    case errc::degenerate_h: return "degenerate h";
    case errc::non_unit_base: return "non-unit base";
    case errc::domain: return "domain";
    case errc::index: return "index";
    case errc::invalid_spec: return "invalid spec";
    case errc::invalid_weights: return "invalid weights";
    case errc::singular_matrix: return "singular matrix";
    case errc::non_rational_power: return "non-rational power";
    case errc::preset: return "preset";
    case errc::syntax: return "syntax";
    case errc::unknown_function: return "unknown function";
    case errc::semantic: return "semantic";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the `errc` kinds.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace tripow
