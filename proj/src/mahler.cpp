#include "cantor/mahler.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "cantor/format.hpp"

namespace cantor {

MahlerEquation::MahlerEquation(std::uint32_t base,
                               std::vector<SparsePolynomial> coefficients)
    : base_(base), coefficients_(std::move(coefficients)) {
  if (base_ < 2) {
    throw std::invalid_argument("MahlerEquation: base must be at least 2");
  }
  if (coefficients_.size() < 2) {
    throw std::invalid_argument("MahlerEquation: degree must be at least 1");
  }
  if (coefficients_.front().is_zero() || coefficients_.back().is_zero()) {
    throw std::invalid_argument(
        "MahlerEquation: first and last coefficient polynomials must be nonzero");
  }
}

namespace {

std::string argument_power(std::uint32_t base, std::uint32_t i) {
  if (i == 0) return "z";
  std::uint64_t p = 1;
  for (std::uint32_t j = 0; j < i; ++j) p *= base;
  return "z^" + std::to_string(p);
}

}  // namespace

std::string MahlerEquation::to_string() const {
  const SparsePolynomial one = SparsePolynomial::constant(1);
  std::string out;
  // The digit-set shape p_0 = 1 with all-negative p_1 reads best as
  // M(z) - p(z)*M(z^q) = 0.
  bool digit_shape = coefficients_.front() == one && degree() == 1;
  if (digit_shape) {
    for (const auto& [e, c] : coefficients_[1].terms()) {
      if (c > 0) digit_shape = false;
    }
  }
  if (digit_shape) {
    out = "M(z) - (" + coefficients_[1].negated().to_string() + ")*M(" +
          argument_power(base_, 1) + ") = 0";
    return out;
  }
  for (std::uint32_t i = 0; i < coefficients_.size(); ++i) {
    if (i) out += " + ";
    out += "(" + coefficients_[i].to_string() + ")*M(" +
           argument_power(base_, i) + ")";
  }
  out += " = 0";
  return out;
}

MahlerEquation mahler_equation(const DigitSet& ds) {
  std::vector<SparsePolynomial> coefficients;
  coefficients.push_back(SparsePolynomial::constant(1));
  coefficients.push_back(digit_polynomial(ds).as_polynomial().negated());
  return MahlerEquation(ds.base(), std::move(coefficients));
}

double CharacteristicPolynomial::evaluate(double lambda) const {
  double value = 0.0;
  for (std::int64_t c : coefficients) {
    value = value * lambda + static_cast<double>(c);
  }
  return value;
}

std::string CharacteristicPolynomial::to_string() const {
  const std::size_t d = coefficients.size() - 1;
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const std::int64_t c = coefficients[i];
    if (c == 0) continue;
    const std::size_t power = d - i;
    const std::uint64_t magnitude =
        c < 0 ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (power == 0) {
      out += std::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) {
      out += std::to_string(magnitude);
      out += '*';
    }
    out += "lambda";
    if (power != 1) {
      out += '^';
      out += std::to_string(power);
    }
  }
  return out.empty() ? "0" : out;
}

CharacteristicPolynomial characteristic_polynomial(const MahlerEquation& eq) {
  CharacteristicPolynomial chi;
  chi.coefficients.reserve(eq.coefficients().size());
  for (const SparsePolynomial& p : eq.coefficients()) {
    chi.coefficients.push_back(p.value_at_one());
  }
  chi.leading_coefficient_vanishes = chi.coefficients.front() == 0;
  return chi;
}

MahlerEigenvalue mahler_eigenvalue(const MahlerEquation& eq) {
  if (eq.degree() > 1) {
    throw Error(errc::unsupported_degree,
                "eigenvalue selection is only defined for degree-one equations, "
                "got degree " + std::to_string(eq.degree()));
  }
  const std::int64_t p0 = eq.coefficient(0).value_at_one();
  const std::int64_t p1 = eq.coefficient(1).value_at_one();
  if (p0 == 0) {
    throw Error(errc::degenerate_leading_coefficient,
                "p_0(1) = 0: the characteristic polynomial degenerates");
  }
  return MahlerEigenvalue{-static_cast<double>(p1) / static_cast<double>(p0)};
}

double evaluate_truncated_product(const DigitSet& ds, double z,
                                  std::uint32_t terms) {
  const DigitPolynomial p = digit_polynomial(ds);
  double product = 1.0;
  double w = z;
  for (std::uint32_t j = 0; j < terms; ++j) {
    product *= p.evaluate(w);
    w = std::pow(w, static_cast<double>(ds.base()));
  }
  return product;
}

AsymptoticProbeReport asymptotic_probe(const DigitSet& ds, double t_min,
                                       double t_max, double step) {
  constexpr double kFactorFloor = 1e-15;
  const double q = ds.base();
  const double m = ds.digit_count();
  const DigitPolynomial p = digit_polynomial(ds);

  AsymptoticProbeReport report;
  for (std::uint64_t i = 0;; ++i) {
    const double t = t_min + static_cast<double>(i) * step;
    if (t > t_max + step * 1e-9) break;

    // z = 1 - q^{-t}; keeping eps = q^{-t} exact avoids the cancellation in
    // 1-z near the double spacing limit, and (1-z)^{log_q m} = m^{-t}.
    const double eps = std::pow(q, -t);
    const double z = 1.0 - eps;
    const double log_z = std::log1p(-eps);
    if (!(log_z < 0.0)) {
      // q^{-t} underflowed; every truncated factor would stay above the
      // floor. The normalized value is m^{-t} times an empty product.
      report.samples.push_back(
          ProbeSample{t, z, 0, std::exp(-t * std::log(m))});
      continue;
    }

    // Accumulated in log space: the raw partial product reaches m^J and
    // would overflow long before the m^{-t} normalization pulls it back.
    double log_product = 0.0;
    std::uint32_t used = 0;
    double power = 1.0;  // q^j
    while (true) {
      const double w = std::exp(power * log_z);  // z^{q^j}
      if (w < kFactorFloor) break;
      log_product += std::log(p.evaluate(w));
      power *= q;
      ++used;
    }
    const double value = std::exp(log_product - t * std::log(m));
    report.samples.push_back(ProbeSample{t, z, used, value});
  }
  return report;
}

void AsymptoticProbeReport::write_csv(std::ostream& out) const {
  out << "t,z,J,G\n";
  for (const ProbeSample& s : samples) {
    out << float17(s.t) << ',' << float17(s.z) << ',' << s.truncation_terms
        << ',' << float17(s.value) << '\n';
  }
}

}  // namespace cantor
