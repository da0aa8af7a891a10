#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cantor/digit_set.hpp"

namespace cantor {

/// The rational numerator/base^level, an atom position or grid point.
struct DyadicPoint {
  std::uint64_t numerator = 0;
  std::uint32_t level = 0;

  double value(std::uint32_t base) const;

  bool operator==(const DyadicPoint&) const = default;
};

/// Level set E_k: left endpoints j of the m^k intervals [j/q^k, (j+1)/q^k].
struct LevelSet {
  std::uint32_t level = 0;
  std::vector<std::uint64_t> intervals;  // ascending
};

/// Pure point measure m^{-k} sum of unit masses at j/q^k over the ones of
/// the level-k prefix.
struct GhostLevelMeasure {
  std::uint32_t level = 0;
  std::vector<DyadicPoint> support;      // ascending numerators
  std::uint64_t weight_denominator = 1;  // each atom weighs 1/m^k exactly
};

enum class FourierRoute { direct, finite_product, level_measure, truncated_limit };

/// Short route tag used in CSV output: direct, product, level, limit.
const char* route_name(FourierRoute route);

/// One Fourier--Stieltjes coefficient together with the route that produced
/// it and the truncation parameter (k for level routes, L for the limit).
struct FourierCoefficient {
  std::int64_t frequency = 0;
  std::complex<double> value;
  FourierRoute route = FourierRoute::direct;
  std::uint32_t truncation = 0;
};

struct CdfSample {
  double x = 0.0;
  double value = 0.0;
};

/// E_k as the sorted list of admissible left-endpoint indices
/// { j < q^k : every base-q digit of j lies in A }.
LevelSet level_set(const DigitSet& ds, std::uint32_t level,
                   std::uint64_t budget = kDefaultSymbolBudget);

/// Builds the level-k prefix by substitution and reinterprets its ones as
/// equal-weight atoms at j/q^k.
GhostLevelMeasure ghost_level_measure(const DigitSet& ds, std::uint32_t level,
                                      std::uint64_t budget = kDefaultSymbolBudget);

/// Level-measure CDF: mass of [0,x] under the density (q/m)^k restricted to
/// E_k. Piecewise linear with slope q^k/m^k on the level intervals.
double level_cdf(const DigitSet& ds, std::uint32_t level, double x,
                 std::uint64_t budget = kDefaultSymbolBudget);

/// Limit CDF via the base-q digit scan of x, accurate to m^{-depth}.
double limit_cdf(const DigitSet& ds, double x, std::uint32_t depth);

/// Direct exponential sum m^{-k} sum f(j) e^{-2 pi i n j / q^k} over the
/// materialized prefix.
FourierCoefficient fourier_ghost_direct(const DigitSet& ds, std::uint32_t level,
                                        std::int64_t frequency,
                                        std::uint64_t budget = kDefaultSymbolBudget);

/// Same sum over precomputed one-positions of the level-k prefix; avoids
/// rebuilding the prefix per frequency.
FourierCoefficient fourier_ghost_direct(const DigitSet& ds, std::uint32_t level,
                                        std::span<const std::uint64_t> ones,
                                        std::int64_t frequency);

/// Finite product over l = 1..k of p(e^{-2 pi i n / q^l})/m; needs no
/// sequence materialization and costs O(k m).
FourierCoefficient fourier_ghost_product(const DigitSet& ds, std::uint32_t level,
                                         std::int64_t frequency);

/// Coefficient of the absolutely continuous level measure: the finite
/// product above times the interval factor
/// c_k(n) = integral of e^{-2 pi i (n/q^k) x} over [0,1].
FourierCoefficient fourier_level_measure(const DigitSet& ds, std::uint32_t level,
                                         std::int64_t frequency);

/// Truncated infinite product over l = 1..terms.
FourierCoefficient fourier_limit(const DigitSet& ds, std::int64_t frequency,
                                 std::uint32_t terms);

/// Default truncation: ceil(log_q max(|n|,1)) + 40 factors.
std::uint32_t default_limit_truncation(const DigitSet& ds, std::int64_t frequency);

/// fourier_limit with the default truncation.
FourierCoefficient fourier_limit(const DigitSet& ds, std::int64_t frequency);

/// Staircase samples at x_i = i/grid_size for i = 0..grid_size, evaluated
/// against the level-k CDF.
std::vector<CdfSample> staircase_samples(const DigitSet& ds, std::uint32_t level,
                                         std::uint32_t grid_size,
                                         std::uint64_t budget = kDefaultSymbolBudget);

/// CSV with header n,route,k_or_L,re,im; floats at 17 significant digits.
void write_fourier_csv(std::ostream& out,
                       std::span<const FourierCoefficient> coefficients);

/// CSV with header x,F, rows in increasing x.
void write_staircase_csv(std::ostream& out, std::span<const CdfSample> samples);

/// Static SVG polyline of the staircase.
void write_staircase_svg(std::ostream& out, std::span<const CdfSample> samples);

}  // namespace cantor
