#include "cantor/polynomial.hpp"

#include <cmath>

namespace cantor {

void SparsePolynomial::add_term(std::uint64_t exponent,
                                std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t SparsePolynomial::coefficient(std::uint64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t SparsePolynomial::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

std::int64_t SparsePolynomial::value_at_one() const {
  std::int64_t sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

SparsePolynomial SparsePolynomial::negated() const {
  SparsePolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

double SparsePolynomial::evaluate(double x) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    sum += static_cast<double>(c) * std::pow(x, static_cast<double>(e));
  }
  return sum;
}

std::complex<double> SparsePolynomial::evaluate(std::complex<double> x) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    // complex pow(0,0) is NaN; the constant term needs no evaluation
    sum += e == 0 ? static_cast<double>(c)
                  : static_cast<double>(c) * std::pow(x, static_cast<double>(e));
  }
  return sum;
}

namespace {

void append_term(std::string& out, std::int64_t coefficient,
                 std::uint64_t exponent, std::string_view variable) {
  const bool first = out.empty();
  const std::uint64_t magnitude =
      coefficient < 0 ? static_cast<std::uint64_t>(-coefficient)
                      : static_cast<std::uint64_t>(coefficient);
  if (first) {
    if (coefficient < 0) out += '-';
  } else {
    out += coefficient < 0 ? " - " : " + ";
  }
  if (exponent == 0) {
    out += std::to_string(magnitude);
    return;
  }
  if (magnitude != 1) {
    out += std::to_string(magnitude);
    out += '*';
  }
  out += variable;
  if (exponent != 1) {
    out += '^';
    out += std::to_string(exponent);
  }
}

}  // namespace

std::string SparsePolynomial::to_string(std::string_view variable) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) append_term(out, c, e, variable);
  return out;
}

double DigitPolynomial::evaluate(double z) const {
  double sum = 0.0;
  for (std::uint32_t a : exponents_) {
    sum += std::pow(z, static_cast<double>(a));
  }
  return sum;
}

std::complex<double> DigitPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> sum = 0.0;
  for (std::uint32_t a : exponents_) {
    sum += a == 0 ? std::complex<double>(1.0)
                  : std::pow(z, static_cast<double>(a));
  }
  return sum;
}

SparsePolynomial DigitPolynomial::as_polynomial() const {
  SparsePolynomial p;
  for (std::uint32_t a : exponents_) p.add_term(a, 1);
  return p;
}

std::string DigitPolynomial::to_string(std::string_view variable) const {
  return as_polynomial().to_string(variable);
}

DigitPolynomial digit_polynomial(const DigitSet& ds) {
  return DigitPolynomial(ds);
}

}  // namespace cantor
