#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cantor/bit_word.hpp"
#include "cantor/error.hpp"

namespace cantor {

/// Default cap on materialized symbols (q^k) for prefix-building operations.
inline constexpr std::uint64_t kDefaultSymbolBudget = 100'000'000;

/// A base q >= 2 together with an ascending digit set A containing 0.
/// Defines the missing-digit set F in [0,1] and its binary sequence.
class DigitSet {
 public:
  /// Validates and normalizes the digit list (sorted ascending).
  /// Throws Error with base_too_small, digit_out_of_range, duplicate_digit
  /// or missing_zero.
  DigitSet(std::uint32_t base, const std::vector<std::int64_t>& digits);

  std::uint32_t base() const noexcept { return base_; }
  const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }
  std::uint32_t digit_count() const noexcept {
    return static_cast<std::uint32_t>(digits_.size());
  }
  std::uint32_t largest_digit() const noexcept { return digits_.back(); }

  bool contains(std::uint32_t digit) const noexcept {
    return digit < base_ && member_[digit] != 0;
  }

  /// #{a in A : a < digit}; digit may equal base().
  std::uint32_t digits_below(std::uint32_t digit) const noexcept {
    return below_[digit];
  }

  bool operator==(const DigitSet& other) const noexcept {
    return base_ == other.base_ && digits_ == other.digits_;
  }

 private:
  std::uint32_t base_;
  std::vector<std::uint32_t> digits_;
  std::vector<std::uint8_t> member_;  // size base_
  std::vector<std::uint32_t> below_;  // size base_+1, prefix counts
};

DigitSet new_digit_set(std::uint32_t base, const std::vector<std::int64_t>& digits);

/// Length-q images of the two symbols: 1 maps to the word with ones exactly
/// at the digit positions, 0 maps to the zero word.
struct Substitution {
  BitWord one_image;
  BitWord zero_image;

  std::uint32_t base() const noexcept {
    return static_cast<std::uint32_t>(one_image.size());
  }
};

/// The k-th iterate of the substitution applied to "1": q^k packed bits.
struct SequencePrefix {
  std::uint32_t level = 0;
  BitWord bits;
};

Substitution build_substitution(const DigitSet& ds);

/// k-fold substitution iterate starting from "1".
/// Throws budget_exceeded when q^k > budget.
SequencePrefix iterate_substitution(const Substitution& sub, std::uint32_t level,
                                    std::uint64_t budget = kDefaultSymbolBudget);

/// Same prefix built independently: bit n is set iff every base-q digit of n
/// lies in the digit set. This is the oracle the substitution route is
/// checked against.
SequencePrefix oracle_prefix(const DigitSet& ds, std::uint32_t level,
                             std::uint64_t budget = kDefaultSymbolBudget);

/// True iff every base-q digit of n lies in A (f(n) = 1).
bool digit_membership(const DigitSet& ds, std::uint64_t n);

/// Arbitrary-size variant; accepts a decimal string of any length.
bool digit_membership(const DigitSet& ds, std::string_view decimal);

/// log_q(m). Exactly 0 for m = 1 and exactly 1 for m = q.
double hausdorff_dimension(const DigitSet& ds);

/// q^k, throwing budget_exceeded when the count exceeds budget (or u64).
std::uint64_t level_symbol_count(std::uint32_t base, std::uint32_t level,
                                 std::uint64_t budget);

}  // namespace cantor
