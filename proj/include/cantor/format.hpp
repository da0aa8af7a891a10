#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cantor {

/// Shortest-unambiguous float rendering at 17 significant digits.
std::string float17(double value);

/// "a,b,c" rendering of a digit list.
std::string join_digits(const std::vector<std::uint32_t>& digits);

}  // namespace cantor
