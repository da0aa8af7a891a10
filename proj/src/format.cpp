#include "cantor/format.hpp"

#include <cstdio>

namespace cantor {

std::string float17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string join_digits(const std::vector<std::uint32_t>& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

}  // namespace cantor
