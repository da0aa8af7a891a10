#include "cantor/digit_set.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace cantor {

namespace {

std::string describe(const std::vector<std::int64_t>& digits) {
  std::string s = "{";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(digits[i]);
  }
  s += '}';
  return s;
}

}  // namespace

DigitSet::DigitSet(std::uint32_t base, const std::vector<std::int64_t>& digits)
    : base_(base) {
  if (base < 2) {
    throw Error(errc::base_too_small,
                "base must be at least 2, got " + std::to_string(base));
  }
  for (std::int64_t d : digits) {
    if (d < 0 || d > static_cast<std::int64_t>(base) - 1) {
      throw Error(errc::digit_out_of_range,
                  "digit " + std::to_string(d) + " outside [0," +
                      std::to_string(base - 1) + "] in " + describe(digits));
    }
  }
  digits_.assign(digits.begin(), digits.end());
  std::sort(digits_.begin(), digits_.end());
  if (std::adjacent_find(digits_.begin(), digits_.end()) != digits_.end()) {
    throw Error(errc::duplicate_digit,
                "duplicate digit in " + describe(digits));
  }
  if (digits_.empty() || digits_.front() != 0) {
    throw Error(errc::missing_zero,
                "digit set must contain 0, got " + describe(digits));
  }

  member_.assign(base_, 0);
  for (std::uint32_t d : digits_) member_[d] = 1;
  below_.assign(base_ + 1, 0);
  for (std::uint32_t d = 0; d < base_; ++d) {
    below_[d + 1] = below_[d] + member_[d];
  }
}

DigitSet new_digit_set(std::uint32_t base,
                       const std::vector<std::int64_t>& digits) {
  return DigitSet(base, digits);
}

std::uint64_t level_symbol_count(std::uint32_t base, std::uint32_t level,
                                 std::uint64_t budget) {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < level; ++i) {
    if (n > budget / base) {
      throw Error(errc::budget_exceeded,
                  "q^k = " + std::to_string(base) + "^" + std::to_string(level) +
                      " exceeds the symbol budget " + std::to_string(budget));
    }
    n *= base;
  }
  if (n > budget) {
    throw Error(errc::budget_exceeded,
                "q^k exceeds the symbol budget " + std::to_string(budget));
  }
  return n;
}

Substitution build_substitution(const DigitSet& ds) {
  Substitution sub;
  sub.one_image = BitWord(ds.base());
  sub.zero_image = BitWord(ds.base());
  for (std::uint32_t a : ds.digits()) sub.one_image.set(a);
  return sub;
}

SequencePrefix iterate_substitution(const Substitution& sub, std::uint32_t level,
                                    std::uint64_t budget) {
  const std::uint32_t q = sub.base();
  level_symbol_count(q, level, budget);
  const std::vector<std::uint64_t> digits = sub.one_image.one_positions();

  BitWord current(1);
  current.set(0);
  for (std::uint32_t step = 0; step < level; ++step) {
    BitWord next(current.size() * q);
    current.for_each_one([&](std::uint64_t j) {
      const std::uint64_t block = j * q;
      for (std::uint64_t a : digits) next.set(block + a);
    });
    current = std::move(next);
  }
  return SequencePrefix{level, std::move(current)};
}

SequencePrefix oracle_prefix(const DigitSet& ds, std::uint32_t level,
                             std::uint64_t budget) {
  const std::uint64_t count = level_symbol_count(ds.base(), level, budget);
  BitWord bits(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    if (digit_membership(ds, n)) bits.set(n);
  }
  return SequencePrefix{level, std::move(bits)};
}

bool digit_membership(const DigitSet& ds, std::uint64_t n) {
  const std::uint64_t q = ds.base();
  while (n != 0) {
    if (!ds.contains(static_cast<std::uint32_t>(n % q))) return false;
    n /= q;
  }
  return true;
}

bool digit_membership(const DigitSet& ds, std::string_view decimal) {
  std::vector<std::uint8_t> num;
  num.reserve(decimal.size());
  for (char c : decimal) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("digit_membership: not a decimal natural");
    }
    num.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (num.empty()) {
    throw std::invalid_argument("digit_membership: empty number");
  }

  // Long division of the decimal digit vector by q; each pass yields one
  // base-q digit as the remainder.
  const std::uint32_t q = ds.base();
  std::size_t lead = 0;
  while (lead < num.size()) {
    std::uint64_t remainder = 0;
    for (std::size_t i = lead; i < num.size(); ++i) {
      const std::uint64_t value = remainder * 10 + num[i];
      num[i] = static_cast<std::uint8_t>(value / q);
      remainder = value % q;
    }
    if (!ds.contains(static_cast<std::uint32_t>(remainder))) return false;
    while (lead < num.size() && num[lead] == 0) ++lead;
  }
  return true;
}

double hausdorff_dimension(const DigitSet& ds) {
  // log(m)/log(q); the ratio is exactly 0 for m = 1 and exactly 1 for m = q.
  return std::log(static_cast<double>(ds.digit_count())) /
         std::log(static_cast<double>(ds.base()));
}

}  // namespace cantor
