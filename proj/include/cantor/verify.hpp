#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/digit_set.hpp"

namespace cantor::verify {

/// One verification check: worst observed discrepancy against its bound.
struct Check {
  std::string name;
  bool passed = false;
  double worst = 0.0;
  double bound = 0.0;
  std::string note;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
};

/// Digit sets exercised by every suite.
const std::vector<DigitSet>& family();

std::vector<std::string> suite_names();

/// Runs one of {dimension, fourier, cdf, oracle, asymptotic}.
/// Throws std::invalid_argument for unknown names.
SuiteResult run_suite(std::string_view name,
                      std::uint64_t budget = kDefaultSymbolBudget);

}  // namespace cantor::verify
