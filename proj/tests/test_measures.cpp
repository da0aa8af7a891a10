#include "cantor/measures.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "doctest.h"

#include "cantor/digit_set.hpp"

using namespace cantor;

namespace {

const DigitSet kCantor(3, {0, 2});

const std::vector<DigitSet>& small_family() {
  static const std::vector<DigitSet> sets = {
      DigitSet(3, {0, 2}),    DigitSet(2, {0, 1}),  DigitSet(4, {0, 1, 3}),
      DigitSet(5, {0, 4}),    DigitSet(10, {0, 2, 5, 8}),
      DigitSet(7, {0}),       DigitSet(3, {0, 1, 2})};
  return sets;
}

std::uint64_t int_pow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t n = 1;
  while (e--) n *= base;
  return n;
}

/// Quadrature oracle for the level-measure coefficient: exact per-interval
/// integrals of e^{-2 pi i n x} against the density (q/m)^k on E_k.
std::complex<double> level_coefficient_by_integration(const DigitSet& ds,
                                                      std::uint32_t k,
                                                      std::int64_t n) {
  const LevelSet e_k = level_set(ds, k);
  const double q_pow = std::pow(static_cast<double>(ds.base()),
                                static_cast<double>(k));
  const double density = q_pow / std::pow(static_cast<double>(ds.digit_count()),
                                          static_cast<double>(k));
  std::complex<double> sum = 0.0;
  const double two_pi_n = 2.0 * std::numbers::pi * static_cast<double>(n);
  for (std::uint64_t j : e_k.intervals) {
    const double lo = static_cast<double>(j) / q_pow;
    const double hi = static_cast<double>(j + 1) / q_pow;
    if (n == 0) {
      sum += density * (hi - lo);
    } else {
      const std::complex<double> i_phase(0.0, -two_pi_n);
      sum += density * (std::exp(i_phase * hi) - std::exp(i_phase * lo)) /
             i_phase;
    }
  }
  return sum;
}

/// Lebesgue-measure oracle for the level CDF via interval enumeration.
double level_cdf_by_enumeration(const DigitSet& ds, std::uint32_t k, double x) {
  const LevelSet e_k = level_set(ds, k);
  const double q_pow = std::pow(static_cast<double>(ds.base()),
                                static_cast<double>(k));
  const double density = q_pow / std::pow(static_cast<double>(ds.digit_count()),
                                          static_cast<double>(k));
  double measure = 0.0;
  for (std::uint64_t j : e_k.intervals) {
    const double lo = static_cast<double>(j) / q_pow;
    const double hi = static_cast<double>(j + 1) / q_pow;
    if (x <= lo) break;
    measure += std::min(x, hi) - lo;
  }
  return density * measure;
}

}  // namespace

TEST_CASE("level sets") {
  CHECK(level_set(kCantor, 0).intervals == std::vector<std::uint64_t>{0});
  CHECK(level_set(kCantor, 1).intervals == std::vector<std::uint64_t>{0, 2});
  CHECK(level_set(kCantor, 2).intervals ==
        std::vector<std::uint64_t>{0, 2, 6, 8});

  SUBCASE("intervals are exactly the digit-admissible indices") {
    for (const DigitSet& ds : small_family()) {
      const std::uint32_t k = 3;
      const LevelSet set = level_set(ds, k);
      CHECK(set.intervals.size() == int_pow(ds.digit_count(), k));
      std::vector<std::uint64_t> expected;
      for (std::uint64_t j = 0; j < int_pow(ds.base(), k); ++j) {
        if (digit_membership(ds, j)) expected.push_back(j);
      }
      CHECK(set.intervals == expected);
    }
  }

  CHECK_THROWS_AS(level_set(kCantor, 30), Error);

  SUBCASE("box counting recovers the dimension at every level") {
    for (const DigitSet& ds : small_family()) {
      if (ds.digit_count() == 1) continue;  // log(1) = 0 on both sides anyway
      for (std::uint32_t k = 1; k <= 4; ++k) {
        const double boxes =
            static_cast<double>(level_set(ds, k).intervals.size());
        const double from_boxes =
            std::log(boxes) /
            std::log(std::pow(static_cast<double>(ds.base()),
                              static_cast<double>(k)));
        CHECK(from_boxes ==
              doctest::Approx(hausdorff_dimension(ds)).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("ghost level measures") {
  const GhostLevelMeasure mu1 = ghost_level_measure(kCantor, 1);
  REQUIRE(mu1.support.size() == 2);
  CHECK(mu1.support[0] == DyadicPoint{0, 1});
  CHECK(mu1.support[1] == DyadicPoint{2, 1});
  CHECK(mu1.weight_denominator == 2);
  CHECK(mu1.support[1].value(3) == doctest::Approx(2.0 / 3.0));

  const GhostLevelMeasure mu0 = ghost_level_measure(kCantor, 0);
  REQUIRE(mu0.support.size() == 1);
  CHECK(mu0.support[0] == DyadicPoint{0, 0});
  CHECK(mu0.weight_denominator == 1);

  const GhostLevelMeasure mu2 = ghost_level_measure(kCantor, 2);
  REQUIRE(mu2.support.size() == 4);
  CHECK(mu2.weight_denominator == 4);
  const std::vector<std::uint64_t> numerators{
      mu2.support[0].numerator, mu2.support[1].numerator,
      mu2.support[2].numerator, mu2.support[3].numerator};
  CHECK(numerators == std::vector<std::uint64_t>{0, 2, 6, 8});

  SUBCASE("ghost atoms sit at the level-set left endpoints") {
    for (const DigitSet& ds : small_family()) {
      for (std::uint32_t k : {1u, 2u, 4u}) {
        const GhostLevelMeasure mu = ghost_level_measure(ds, k);
        const LevelSet set = level_set(ds, k);
        REQUIRE(mu.support.size() == set.intervals.size());
        CHECK(mu.weight_denominator == mu.support.size());
        bool match = true;
        for (std::size_t i = 0; i < mu.support.size(); ++i) {
          if (mu.support[i].numerator != set.intervals[i] ||
              mu.support[i].level != k) {
            match = false;
          }
        }
        CHECK(match);
      }
    }
  }
}

TEST_CASE("level CDF") {
  CHECK(level_cdf(kCantor, 1, 1.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(level_cdf(kCantor, 5, 1.0) == 1.0);
  CHECK(level_cdf(kCantor, 5, 0.0) == 0.0);
  for (std::uint32_t k = 1; k <= 8; ++k) {
    CHECK(level_cdf(kCantor, k, 0.5) == 0.5);  // symmetric digit set
  }
  // level 0 is Lebesgue measure on [0,1]
  CHECK(level_cdf(kCantor, 0, 0.73) == doctest::Approx(0.73).epsilon(1e-15));

  SUBCASE("digit scan agrees with interval enumeration") {
    for (const DigitSet& ds : small_family()) {
      for (std::uint32_t k : {1u, 2u, 3u}) {
        for (int i = 0; i <= 40; ++i) {
          const double x = static_cast<double>(i) / 40.0;
          CHECK(level_cdf(ds, k, x) ==
                doctest::Approx(level_cdf_by_enumeration(ds, k, x))
                    .epsilon(1e-12));
        }
      }
    }
  }

  SUBCASE("monotone in x") {
    for (const DigitSet& ds : small_family()) {
      double previous = -1.0;
      for (int i = 0; i <= 200; ++i) {
        const double value = level_cdf(ds, 6, static_cast<double>(i) / 200.0);
        CHECK(value >= previous);
        previous = value;
      }
      CHECK(previous == 1.0);
    }
  }

  CHECK_THROWS_AS(level_cdf(kCantor, 2, 0.5, 8), Error);
}

TEST_CASE("limit CDF") {
  CHECK(limit_cdf(kCantor, 0.0, 40) == 0.0);
  CHECK(limit_cdf(kCantor, 1.0, 40) == 1.0);
  CHECK(limit_cdf(kCantor, 0.5, 40) == 0.5);
  CHECK(limit_cdf(kCantor, 1.0 / 3.0, 40) == doctest::Approx(0.5).epsilon(1e-9));

  SUBCASE("agrees with the level CDF at q-adic points") {
    constexpr std::uint32_t kDepth = 35;
    for (const DigitSet& ds : small_family()) {
      const std::uint32_t k = 5;
      const double tolerance =
          std::pow(static_cast<double>(ds.digit_count()), -double(kDepth)) +
          std::pow(static_cast<double>(ds.digit_count()), -double(k)) + 1e-13;
      const std::uint64_t q_pow = int_pow(ds.base(), k);
      for (std::uint64_t step = 0; step <= 50; ++step) {
        const std::uint64_t j = (q_pow * step) / 50;
        const double x = static_cast<double>(j) / static_cast<double>(q_pow);
        CHECK(std::abs(limit_cdf(ds, x, kDepth) - level_cdf(ds, k, x)) <=
              tolerance);
      }
    }
  }

  SUBCASE("full digit set gives the identity") {
    const DigitSet full(3, {0, 1, 2});
    for (int i = 0; i <= 30; ++i) {
      const double x = static_cast<double>(i) / 30.0;
      CHECK(limit_cdf(full, x, 45) == doctest::Approx(x).epsilon(1e-12));
    }
  }

  SUBCASE("degenerate set jumps at zero") {
    const DigitSet point(7, {0});
    CHECK(limit_cdf(point, 0.0, 40) == 0.0);
    CHECK(limit_cdf(point, 1e-9, 40) == 1.0);
    CHECK(limit_cdf(point, 0.4, 40) == 1.0);
  }
}

TEST_CASE("fourier coefficients") {
  SUBCASE("frequency zero is exactly one on every route") {
    for (const DigitSet& ds : small_family()) {
      const FourierCoefficient direct = fourier_ghost_direct(ds, 3, 0);
      const FourierCoefficient product = fourier_ghost_product(ds, 3, 0);
      const FourierCoefficient level = fourier_level_measure(ds, 3, 0);
      const FourierCoefficient limit = fourier_limit(ds, 0);
      for (const FourierCoefficient& c : {direct, product, level, limit}) {
        CHECK(c.value.real() == 1.0);
        CHECK(c.value.imag() == 0.0);
      }
    }
  }

  SUBCASE("worked Cantor value at k=1, n=1") {
    const FourierCoefficient direct = fourier_ghost_direct(kCantor, 1, 1);
    CHECK(direct.value.real() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(direct.value.imag() ==
          doctest::Approx(0.4330127018922193).epsilon(1e-15));
    const FourierCoefficient product = fourier_ghost_product(kCantor, 1, 1);
    CHECK(std::abs(direct.value - product.value) <= 1e-15);
  }

  SUBCASE("frequencies divisible by q^k give exactly one on the product route") {
    const FourierCoefficient c = fourier_ghost_product(kCantor, 1, 3);
    CHECK(c.value.real() == 1.0);
    CHECK(c.value.imag() == 0.0);
  }

  SUBCASE("direct and product routes agree across the family") {
    double worst = 0.0;
    for (const DigitSet& ds : small_family()) {
      for (std::uint32_t k = 1; k <= 5; ++k) {
        const GhostLevelMeasure mu = ghost_level_measure(ds, k);
        std::vector<std::uint64_t> ones;
        for (const DyadicPoint& p : mu.support) ones.push_back(p.numerator);
        for (std::int64_t n = -60; n <= 60; ++n) {
          const auto direct = fourier_ghost_direct(ds, k, ones, n);
          const auto product = fourier_ghost_product(ds, k, n);
          worst = std::max(worst, std::abs(direct.value - product.value));
        }
      }
    }
    CHECK(worst <= 1e-10);
  }

  SUBCASE("level route equals the quadrature oracle") {
    for (const DigitSet& ds : small_family()) {
      for (std::uint32_t k : {1u, 3u, 5u}) {
        for (std::int64_t n : {-17, -3, 0, 1, 2, 5, 20}) {
          const auto level = fourier_level_measure(ds, k, n);
          const auto oracle = level_coefficient_by_integration(ds, k, n);
          CHECK(std::abs(level.value - oracle) <= 1e-11);
        }
      }
    }
  }

  SUBCASE("interval factor shrinks like pi n / q^k") {
    const auto product = fourier_ghost_product(kCantor, 8, 1);
    const auto level = fourier_level_measure(kCantor, 8, 1);
    const double correction = std::abs(level.value / product.value);
    CHECK(std::abs(correction - 1.0) < 1e-3);
    CHECK(std::abs(level.value - product.value) <=
          std::numbers::pi / std::pow(3.0, 8.0));
  }

  SUBCASE("level coefficient vanishes at n = q^k") {
    const auto c = fourier_level_measure(kCantor, 3, 27);
    CHECK(std::abs(c.value) <= 1e-15);
  }

  SUBCASE("limit route: full exponential sums kill nonzero frequencies") {
    const DigitSet full(3, {0, 1, 2});
    for (std::int64_t n : {1, 2, 3, 9, 100, -7}) {
      CHECK(std::abs(fourier_limit(full, n).value) <= 1e-10);
    }
  }

  SUBCASE("direct route: full sets give exact geometric sums") {
    for (const DigitSet& full : {DigitSet(2, {0, 1}), DigitSet(3, {0, 1, 2})}) {
      const std::uint32_t k = 5;
      const std::uint64_t q_pow = int_pow(full.base(), k);
      for (std::int64_t n : {1, 2, 7, 100}) {
        if (static_cast<std::uint64_t>(n) % q_pow == 0) continue;
        CHECK(std::abs(fourier_ghost_direct(full, k, n).value) <= 1e-12);
      }
      // multiples of q^k wrap every phase to a full turn
      const auto wrapped =
          fourier_ghost_direct(full, k, static_cast<std::int64_t>(q_pow));
      CHECK(wrapped.value.real() == 1.0);
      CHECK(wrapped.value.imag() == 0.0);
    }
  }

  SUBCASE("finite products converge to the truncated limit") {
    const auto limit = fourier_limit(kCantor, 1, 45);
    const auto partial = fourier_ghost_product(kCantor, 44, 1);
    CHECK(std::abs(limit.value - partial.value) <= 1e-10);
    CHECK(default_limit_truncation(kCantor, 1) == 40);
    CHECK(default_limit_truncation(kCantor, 3) == 41);
    CHECK(default_limit_truncation(kCantor, 500) == 46);
    CHECK(default_limit_truncation(kCantor, 0) == 40);
  }

  SUBCASE("conjugate symmetry is exact by construction") {
    for (const DigitSet& ds : small_family()) {
      for (std::int64_t n : {1, 7, 123, 500}) {
        const auto plus = fourier_ghost_product(ds, 6, n);
        const auto minus = fourier_ghost_product(ds, 6, -n);
        CHECK(minus.value == std::conj(plus.value));
        const auto limit_plus = fourier_limit(ds, n);
        const auto limit_minus = fourier_limit(ds, -n);
        CHECK(limit_minus.value == std::conj(limit_plus.value));
        const auto level_plus = fourier_level_measure(ds, 4, n);
        const auto level_minus = fourier_level_measure(ds, 4, -n);
        CHECK(level_minus.value == std::conj(level_plus.value));
      }
    }
  }

  SUBCASE("route metadata") {
    CHECK(fourier_ghost_direct(kCantor, 2, 5).route == FourierRoute::direct);
    CHECK(fourier_ghost_product(kCantor, 2, 5).truncation == 2);
    CHECK(fourier_limit(kCantor, 5, 33).truncation == 33);
    CHECK(std::string(route_name(FourierRoute::level_measure)) == "level");
  }
}

TEST_CASE("staircase samples") {
  const std::vector<CdfSample> samples = staircase_samples(kCantor, 6, 728);
  REQUIRE(samples.size() == 729);
  CHECK(samples.front().x == 0.0);
  CHECK(samples.front().value == 0.0);
  CHECK(samples.back().x == 1.0);
  CHECK(samples.back().value == 1.0);
  CHECK(samples[364].x == 0.5);
  CHECK(samples[364].value == 0.5);

  double previous = 0.0;
  for (const CdfSample& s : samples) {
    CHECK(s.value >= previous);
    previous = s.value;
  }

  SUBCASE("CSV and SVG emission") {
    std::ostringstream csv;
    write_staircase_csv(csv, samples);
    CHECK(csv.str().rfind("x,F\n0,0\n", 0) == 0);

    std::ostringstream svg;
    write_staircase_svg(svg, samples);
    CHECK(svg.str().find("<svg") != std::string::npos);
    CHECK(svg.str().find("<polyline") != std::string::npos);
    CHECK(svg.str().find("820.000,20.000") != std::string::npos);
  }

  SUBCASE("fourier CSV schema") {
    std::vector<FourierCoefficient> rows{fourier_ghost_product(kCantor, 2, 0)};
    std::ostringstream out;
    write_fourier_csv(out, rows);
    CHECK(out.str() == "n,route,k_or_L,re,im\n0,product,2,1,0\n");
  }
}
