#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

/// Failure categories surfaced by the library. The CLI maps validation
/// codes to exit 2 and budget_exceeded to exit 3.
enum class errc {
  base_too_small,
  missing_zero,
  digit_out_of_range,
  duplicate_digit,
  budget_exceeded,
  unsupported_degree,
  degenerate_leading_coefficient,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace cantor
