#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cantor/digit_set.hpp"
#include "cantor/polynomial.hpp"

namespace cantor {

/// Functional equation p_0(z)M(z) + p_1(z)M(z^q) + ... + p_d(z)M(z^{q^d}) = 0
/// with exact integer polynomial coefficients.
class MahlerEquation {
 public:
  /// Requires degree >= 1 and nonzero first and last coefficient polynomials.
  MahlerEquation(std::uint32_t base, std::vector<SparsePolynomial> coefficients);

  std::uint32_t base() const noexcept { return base_; }
  std::uint32_t degree() const noexcept {
    return static_cast<std::uint32_t>(coefficients_.size() - 1);
  }
  const SparsePolynomial& coefficient(std::uint32_t i) const {
    return coefficients_.at(i);
  }
  const std::vector<SparsePolynomial>& coefficients() const noexcept {
    return coefficients_;
  }

  std::string to_string() const;

 private:
  std::uint32_t base_;
  std::vector<SparsePolynomial> coefficients_;
};

/// chi(lambda) = p_0(1) lambda^d + p_1(1) lambda^{d-1} + ... + p_d(1).
struct CharacteristicPolynomial {
  std::vector<std::int64_t> coefficients;  // p_0(1), ..., p_d(1)
  /// Set when p_0(1) = 0; the effective degree of chi drops below d.
  bool leading_coefficient_vanishes = false;

  double evaluate(double lambda) const;
  std::string to_string() const;
};

struct MahlerEigenvalue {
  double value = 0.0;
};

/// Degree-one equation M(z) - p(z) M(z^q) = 0 for the digit polynomial p.
MahlerEquation mahler_equation(const DigitSet& ds);

CharacteristicPolynomial characteristic_polynomial(const MahlerEquation& eq);

/// Root of the linear characteristic polynomial, -p_1(1)/p_0(1).
/// Throws unsupported_degree for d > 1 and degenerate_leading_coefficient
/// when p_0(1) = 0.
MahlerEigenvalue mahler_eigenvalue(const MahlerEquation& eq);

/// Partial product of p(z^{q^j}) over j = 0..terms-1; equals the generating
/// series of the sequence summed over n < q^terms plus a nonnegative tail.
double evaluate_truncated_product(const DigitSet& ds, double z,
                                  std::uint32_t terms);

struct ProbeSample {
  double t = 0.0;               // z = 1 - q^{-t}
  double z = 0.0;
  std::uint32_t truncation_terms = 0;  // least J with z^{q^J} < 1e-15
  double value = 0.0;           // (1-z)^{log_q m} times the partial product
};

/// Radial samples of the normalized generating function near z = 1.
struct AsymptoticProbeReport {
  std::vector<ProbeSample> samples;

  /// CSV with header t,z,J,G; floats at 17 significant digits.
  void write_csv(std::ostream& out) const;
};

/// Probes along z = 1 - q^{-t} for t on the uniform grid
/// [t_min, t_min + step, ...] up to t_max inclusive.
AsymptoticProbeReport asymptotic_probe(const DigitSet& ds, double t_min,
                                       double t_max, double step);

}  // namespace cantor
