#include "cantor/error.hpp"

namespace cantor {

const char* errc_name(errc code) {
  switch (code) {
    case errc::base_too_small: return "BaseTooSmall";
    case errc::missing_zero: return "MissingZero";
    case errc::digit_out_of_range: return "DigitOutOfRange";
    case errc::duplicate_digit: return "DuplicateDigit";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::unsupported_degree: return "UnsupportedDegree";
    case errc::degenerate_leading_coefficient:
      return "DegenerateLeadingCoefficient";
  }
  return "UnknownError";
}

}  // namespace cantor
