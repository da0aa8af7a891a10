#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "cantor/digit_set.hpp"

namespace cantor {

/// Exact integer-coefficient polynomial stored as a sparse exponent map.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;

  static SparsePolynomial constant(std::int64_t c) {
    SparsePolynomial p;
    p.add_term(0, c);
    return p;
  }

  void add_term(std::uint64_t exponent, std::int64_t coefficient);

  std::int64_t coefficient(std::uint64_t exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  std::uint64_t degree() const;  // 0 for the zero polynomial

  /// Sum of coefficients.
  std::int64_t value_at_one() const;

  SparsePolynomial negated() const;

  double evaluate(double x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  const std::map<std::uint64_t, std::int64_t>& terms() const noexcept {
    return terms_;
  }

  bool operator==(const SparsePolynomial&) const = default;

  /// "1 + z^2" style rendering, ascending exponents.
  std::string to_string(std::string_view variable = "z") const;

 private:
  std::map<std::uint64_t, std::int64_t> terms_;
};

/// p(z) = sum of z^a over the digit set; all coefficients are one and the
/// constant term is present because 0 is always a digit.
class DigitPolynomial {
 public:
  explicit DigitPolynomial(const DigitSet& ds)
      : exponents_(ds.digits()) {}

  const std::vector<std::uint32_t>& exponents() const noexcept {
    return exponents_;
  }

  /// Value at 1, i.e. the number of terms m.
  std::uint32_t term_count() const noexcept {
    return static_cast<std::uint32_t>(exponents_.size());
  }

  double evaluate(double z) const;
  std::complex<double> evaluate(std::complex<double> z) const;

  SparsePolynomial as_polynomial() const;
  std::string to_string(std::string_view variable = "z") const;

 private:
  std::vector<std::uint32_t> exponents_;
};

DigitPolynomial digit_polynomial(const DigitSet& ds);

}  // namespace cantor
