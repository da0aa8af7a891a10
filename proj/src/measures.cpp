#include "cantor/measures.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "cantor/format.hpp"

namespace cantor {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t unchecked_power(std::uint32_t base, std::uint32_t exponent) {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) n *= base;
  return n;
}

/// e^{-2 pi i r / den} for 0 <= r < den.
std::complex<double> unit_phase(std::uint64_t r, std::uint64_t den) {
  if (r == 0) return {1.0, 0.0};
  const double theta = kTwoPi * (static_cast<double>(r) / static_cast<double>(den));
  return {std::cos(theta), -std::sin(theta)};
}

/// prod over l = 1..terms of p(e^{-2 pi i n / q^l})/m for n >= 0.
/// Phases are reduced in exact integer arithmetic while q^l fits a u64;
/// beyond that the angles are below 1e-12 and direct doubles suffice.
std::complex<double> ghost_partial_product(const DigitSet& ds,
                                           std::uint64_t frequency,
                                           std::uint32_t terms) {
  const std::uint32_t q = ds.base();
  const double m = ds.digit_count();
  const auto& digits = ds.digits();

  std::complex<double> product{1.0, 0.0};
  std::uint64_t den = 1;
  bool den_exact = true;
  double den_float = 1.0;
  for (std::uint32_t level = 1; level <= terms; ++level) {
    if (den_exact && den > std::numeric_limits<std::uint64_t>::max() / q) {
      den_exact = false;
    }
    if (den_exact) den *= q;
    den_float *= q;

    std::complex<double> sum{0.0, 0.0};
    if (den_exact) {
      const std::uint64_t r0 = frequency % den;
      for (std::uint32_t a : digits) {
        const std::uint64_t r = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(r0) * a % den);
        sum += unit_phase(r, den);
      }
    } else {
      const double scaled = static_cast<double>(frequency) / den_float;
      for (std::uint32_t a : digits) {
        const double theta = kTwoPi * scaled * a;
        sum += std::complex<double>(std::cos(theta), -std::sin(theta));
      }
    }
    product *= sum / m;
  }
  return product;
}

/// integral over [0,1] of e^{-i phi x} dx = e^{-i phi/2} sinc(phi/2).
std::complex<double> interval_factor(double phi) {
  if (phi == 0.0) return {1.0, 0.0};
  const double u = 0.5 * phi;
  const double s = std::sin(u) / u;
  return {std::cos(u) * s, -std::sin(u) * s};
}

/// Exact base-q digit stream of a double in [0,1): x = num * 2^{-shift}.
/// Digits are exact as long as num*q fits 128 bits, which holds for every
/// x down to about 2^{bit_width(q)-127}; smaller x lose only bits that are
/// far below every tolerance in use.
class QaryDigitStream {
 public:
  QaryDigitStream(double x, std::uint32_t base) : q_(base) {
    if (x <= 0.0) return;
    int exponent = 0;
    const double fraction = std::frexp(x, &exponent);
    num_ = static_cast<unsigned __int128>(
        static_cast<std::uint64_t>(std::ldexp(fraction, 53)));
    shift_ = 53 - exponent;
    const int cap = 127 - std::bit_width(q_);
    if (shift_ > cap) {
      const int drop = shift_ - cap;
      num_ = drop >= 64 ? 0 : num_ >> drop;
      shift_ = cap;
    }
  }

  std::uint32_t next() {
    num_ *= q_;
    const std::uint32_t digit = static_cast<std::uint32_t>(num_ >> shift_);
    num_ -= static_cast<unsigned __int128>(digit) << shift_;
    return digit;
  }

  /// Remaining fractional value in [0,1).
  double remainder() const {
    return std::ldexp(static_cast<double>(num_), -shift_);
  }

 private:
  unsigned __int128 num_ = 0;
  int shift_ = 1;
  std::uint32_t q_;
};

}  // namespace

double DyadicPoint::value(std::uint32_t base) const {
  return static_cast<double>(numerator) /
         static_cast<double>(unchecked_power(base, level));
}

const char* route_name(FourierRoute route) {
  switch (route) {
    case FourierRoute::direct: return "direct";
    case FourierRoute::finite_product: return "product";
    case FourierRoute::level_measure: return "level";
    case FourierRoute::truncated_limit: return "limit";
  }
  return "?";
}

LevelSet level_set(const DigitSet& ds, std::uint32_t level,
                   std::uint64_t budget) {
  level_symbol_count(ds.base(), level, budget);
  const std::uint32_t q = ds.base();
  std::vector<std::uint64_t> current{0};
  for (std::uint32_t step = 0; step < level; ++step) {
    std::vector<std::uint64_t> next;
    next.reserve(current.size() * ds.digit_count());
    for (std::uint64_t j : current) {
      const std::uint64_t block = j * q;
      for (std::uint32_t a : ds.digits()) next.push_back(block + a);
    }
    current = std::move(next);
  }
  return LevelSet{level, std::move(current)};
}

GhostLevelMeasure ghost_level_measure(const DigitSet& ds, std::uint32_t level,
                                      std::uint64_t budget) {
  const SequencePrefix prefix =
      iterate_substitution(build_substitution(ds), level, budget);
  GhostLevelMeasure mu;
  mu.level = level;
  mu.weight_denominator = unchecked_power(ds.digit_count(), level);
  mu.support.reserve(mu.weight_denominator);
  prefix.bits.for_each_one([&](std::uint64_t j) {
    mu.support.push_back(DyadicPoint{j, level});
  });
  return mu;
}

double level_cdf(const DigitSet& ds, std::uint32_t level, double x,
                 std::uint64_t budget) {
  level_symbol_count(ds.base(), level, budget);
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  QaryDigitStream digits(x, ds.base());
  const double inv_m = 1.0 / ds.digit_count();
  double weight = 1.0;
  double mass = 0.0;
  for (std::uint32_t i = 0; i < level; ++i) {
    const std::uint32_t d = digits.next();
    weight *= inv_m;
    mass += weight * ds.digits_below(d);
    if (!ds.contains(d)) return mass;
  }
  // All scanned digits admissible: x sits inside a level interval, where the
  // CDF is linear with total rise m^{-level}.
  return mass + weight * digits.remainder();
}

double limit_cdf(const DigitSet& ds, double x, std::uint32_t depth) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  QaryDigitStream digits(x, ds.base());
  const double inv_m = 1.0 / ds.digit_count();
  double weight = 1.0;
  double mass = 0.0;
  for (std::uint32_t i = 0; i < depth; ++i) {
    const std::uint32_t d = digits.next();
    weight *= inv_m;
    mass += weight * ds.digits_below(d);
    if (!ds.contains(d)) return mass;
  }
  return mass;  // dropped tail is below m^{-depth}
}

FourierCoefficient fourier_ghost_direct(const DigitSet& ds, std::uint32_t level,
                                        std::span<const std::uint64_t> ones,
                                        std::int64_t frequency) {
  const std::uint64_t den = unchecked_power(ds.base(), level);
  const std::uint64_t n_abs = frequency < 0
                                  ? static_cast<std::uint64_t>(-(frequency + 1)) + 1
                                  : static_cast<std::uint64_t>(frequency);
  const std::uint64_t r0 = n_abs % den;

  std::complex<double> sum{0.0, 0.0};
  if (den <= (std::uint64_t(1) << 32)) {
    for (std::uint64_t j : ones) sum += unit_phase(r0 * j % den, den);
  } else {
    for (std::uint64_t j : ones) {
      sum += unit_phase(static_cast<std::uint64_t>(
                            static_cast<unsigned __int128>(r0) * j % den),
                        den);
    }
  }
  std::complex<double> value = sum / static_cast<double>(ones.size());
  if (frequency < 0) value = std::conj(value);
  return FourierCoefficient{frequency, value, FourierRoute::direct, level};
}

FourierCoefficient fourier_ghost_direct(const DigitSet& ds, std::uint32_t level,
                                        std::int64_t frequency,
                                        std::uint64_t budget) {
  const SequencePrefix prefix =
      iterate_substitution(build_substitution(ds), level, budget);
  const std::vector<std::uint64_t> ones = prefix.bits.one_positions();
  return fourier_ghost_direct(ds, level, ones, frequency);
}

FourierCoefficient fourier_ghost_product(const DigitSet& ds, std::uint32_t level,
                                         std::int64_t frequency) {
  const std::uint64_t n_abs = frequency < 0
                                  ? static_cast<std::uint64_t>(-(frequency + 1)) + 1
                                  : static_cast<std::uint64_t>(frequency);
  std::complex<double> value = ghost_partial_product(ds, n_abs, level);
  if (frequency < 0) value = std::conj(value);
  return FourierCoefficient{frequency, value, FourierRoute::finite_product,
                            level};
}

FourierCoefficient fourier_level_measure(const DigitSet& ds, std::uint32_t level,
                                         std::int64_t frequency) {
  const std::uint64_t n_abs = frequency < 0
                                  ? static_cast<std::uint64_t>(-(frequency + 1)) + 1
                                  : static_cast<std::uint64_t>(frequency);
  std::complex<double> value = ghost_partial_product(ds, n_abs, level);
  const double phi =
      kTwoPi * static_cast<double>(n_abs) /
      std::pow(static_cast<double>(ds.base()), static_cast<double>(level));
  value *= interval_factor(phi);
  if (frequency < 0) value = std::conj(value);
  return FourierCoefficient{frequency, value, FourierRoute::level_measure,
                            level};
}

FourierCoefficient fourier_limit(const DigitSet& ds, std::int64_t frequency,
                                 std::uint32_t terms) {
  const std::uint64_t n_abs = frequency < 0
                                  ? static_cast<std::uint64_t>(-(frequency + 1)) + 1
                                  : static_cast<std::uint64_t>(frequency);
  std::complex<double> value = ghost_partial_product(ds, n_abs, terms);
  if (frequency < 0) value = std::conj(value);
  return FourierCoefficient{frequency, value, FourierRoute::truncated_limit,
                            terms};
}

std::uint32_t default_limit_truncation(const DigitSet& ds,
                                       std::int64_t frequency) {
  const std::uint64_t n_abs = frequency < 0
                                  ? static_cast<std::uint64_t>(-(frequency + 1)) + 1
                                  : static_cast<std::uint64_t>(frequency);
  std::uint32_t extra = 0;
  unsigned __int128 power = 1;
  while (power < n_abs) {
    power *= ds.base();
    ++extra;
  }
  return extra + 40;
}

FourierCoefficient fourier_limit(const DigitSet& ds, std::int64_t frequency) {
  return fourier_limit(ds, frequency, default_limit_truncation(ds, frequency));
}

std::vector<CdfSample> staircase_samples(const DigitSet& ds, std::uint32_t level,
                                         std::uint32_t grid_size,
                                         std::uint64_t budget) {
  std::vector<CdfSample> samples;
  samples.reserve(grid_size + 1);
  for (std::uint32_t i = 0; i <= grid_size; ++i) {
    const double x = static_cast<double>(i) / grid_size;
    samples.push_back(CdfSample{x, level_cdf(ds, level, x, budget)});
  }
  return samples;
}

void write_fourier_csv(std::ostream& out,
                       std::span<const FourierCoefficient> coefficients) {
  out << "n,route,k_or_L,re,im\n";
  for (const FourierCoefficient& c : coefficients) {
    out << c.frequency << ',' << route_name(c.route) << ',' << c.truncation
        << ',' << float17(c.value.real()) << ',' << float17(c.value.imag())
        << '\n';
  }
}

void write_staircase_csv(std::ostream& out, std::span<const CdfSample> samples) {
  out << "x,F\n";
  for (const CdfSample& s : samples) {
    out << float17(s.x) << ',' << float17(s.value) << '\n';
  }
}

void write_staircase_svg(std::ostream& out, std::span<const CdfSample> samples) {
  constexpr double kPlotW = 800.0, kPlotH = 400.0, kMargin = 20.0;
  char buffer[64];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"840\" "
         "height=\"440\" viewBox=\"0 0 840 440\">\n";
  out << "  <rect x=\"20\" y=\"20\" width=\"800\" height=\"400\" "
         "fill=\"none\" stroke=\"#999\"/>\n";
  out << "  <polyline fill=\"none\" stroke=\"#20639b\" stroke-width=\"1.5\" "
         "points=\"";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double px = kMargin + kPlotW * samples[i].x;
    const double py = kMargin + kPlotH * (1.0 - samples[i].value);
    std::snprintf(buffer, sizeof buffer, "%.3f,%.3f", px, py);
    if (i) out << ' ';
    out << buffer;
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace cantor
