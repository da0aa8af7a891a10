#include "cantor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cantor/format.hpp"
#include "cantor/mahler.hpp"
#include "cantor/measures.hpp"

namespace cantor::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string label(const DigitSet& ds) {
  return "q=" + std::to_string(ds.base()) + " A={" + join_digits(ds.digits()) +
         "}";
}

Check bounded_check(std::string name, double worst, double bound,
                    std::string note = {}) {
  return Check{std::move(name), worst <= bound, worst, bound, std::move(note)};
}

std::uint32_t max_level(const DigitSet& ds, std::uint32_t cap,
                        std::uint64_t budget) {
  std::uint32_t k = 0;
  std::uint64_t symbols = 1;
  while (k < cap && symbols <= budget / ds.base()) {
    symbols *= ds.base();
    ++k;
  }
  return k;
}

SuiteResult dimension_suite(std::uint64_t) {
  SuiteResult result{"dimension", {}};
  for (const DigitSet& ds : family()) {
    const double via_digits = hausdorff_dimension(ds);
    const double via_eigenvalue =
        std::log(mahler_eigenvalue(mahler_equation(ds)).value) /
        std::log(static_cast<double>(ds.base()));
    result.checks.push_back(bounded_check(
        label(ds) + " dimension routes agree",
        std::abs(via_digits - via_eigenvalue), 1e-12));
    if (ds.digit_count() == 1) {
      result.checks.push_back(bounded_check(
          label(ds) + " degenerate dimension is exactly 0",
          std::abs(via_digits), 0.0));
    }
    if (ds.digit_count() == ds.base()) {
      result.checks.push_back(bounded_check(
          label(ds) + " full-set dimension is exactly 1",
          std::abs(via_digits - 1.0), 0.0));
    }
  }
  return result;
}

SuiteResult oracle_suite(std::uint64_t budget) {
  SuiteResult result{"oracle", {}};
  for (const DigitSet& ds : family()) {
    const std::uint32_t k = max_level(ds, 8, budget);
    const SequencePrefix by_substitution =
        iterate_substitution(build_substitution(ds), k, budget);
    const SequencePrefix by_oracle = oracle_prefix(ds, k, budget);
    const std::int64_t mismatch =
        by_substitution.bits.first_mismatch(by_oracle.bits);
    Check check;
    check.name = label(ds) + " substitution vs digit oracle, k=" +
                 std::to_string(k);
    check.passed = mismatch < 0;
    check.worst = check.passed ? 0.0 : 1.0;
    check.bound = 0.0;
    check.note = std::to_string(by_substitution.bits.size()) + " symbols";
    if (!check.passed) {
      check.note += ", first mismatch at n=" + std::to_string(mismatch);
    }
    result.checks.push_back(std::move(check));
  }
  return result;
}

SuiteResult fourier_suite(std::uint64_t budget) {
  SuiteResult result{"fourier", {}};
  constexpr std::int64_t kMaxFrequency = 50;
  for (const DigitSet& ds : family()) {
    const std::uint32_t k_max =
        max_level(ds, 6, std::min<std::uint64_t>(budget, 10'000'000));
    double worst_engine = 0.0;
    double worst_level = 0.0;  // |level-product| measured against its bound
    double worst_limit = 0.0;
    double worst_conj = 0.0;
    for (std::uint32_t k = 1; k <= k_max; ++k) {
      const GhostLevelMeasure mu = ghost_level_measure(ds, k, budget);
      std::vector<std::uint64_t> ones;
      ones.reserve(mu.support.size());
      for (const DyadicPoint& p : mu.support) ones.push_back(p.numerator);
      const double qk = std::pow(static_cast<double>(ds.base()),
                                 static_cast<double>(k));
      for (std::int64_t n = -kMaxFrequency; n <= kMaxFrequency; ++n) {
        const auto direct = fourier_ghost_direct(ds, k, ones, n);
        const auto product = fourier_ghost_product(ds, k, n);
        const auto level = fourier_level_measure(ds, k, n);
        worst_engine =
            std::max(worst_engine, std::abs(direct.value - product.value));
        const double level_gap = std::abs(level.value - product.value);
        const double level_bound = kPi * std::abs(static_cast<double>(n)) / qk;
        if (level_gap > level_bound) {
          worst_level = std::max(worst_level, level_gap - level_bound);
        }
        const auto mirrored = fourier_ghost_product(ds, k, -n);
        worst_conj = std::max(
            worst_conj, std::abs(mirrored.value - std::conj(product.value)));
      }
    }
    // Tail of the infinite product after k_max factors: each remaining
    // factor differs from 1 by at most 2 pi a_max |n| / q^l.
    for (std::int64_t n = -kMaxFrequency; n <= kMaxFrequency; ++n) {
      const auto partial = fourier_ghost_product(ds, k_max, n);
      const auto limit = fourier_limit(ds, n);
      const double tail = 2.0 * kPi * ds.largest_digit() *
                          std::abs(static_cast<double>(n)) /
                          (std::pow(static_cast<double>(ds.base()),
                                    static_cast<double>(k_max)) *
                           (ds.base() - 1.0));
      const double bound = std::min(2.0, std::exp(tail) - 1.0 + 1e-12);
      const double gap = std::abs(partial.value - limit.value);
      if (gap > bound) worst_limit = std::max(worst_limit, gap - bound);
    }
    result.checks.push_back(bounded_check(
        label(ds) + " direct vs product, k<=" + std::to_string(k_max) +
            ", |n|<=" + std::to_string(kMaxFrequency),
        worst_engine, 1e-9));
    result.checks.push_back(bounded_check(
        label(ds) + " level vs product within pi|n|/q^k", worst_level, 0.0));
    result.checks.push_back(bounded_check(
        label(ds) + " product converges to limit", worst_limit, 0.0));
    result.checks.push_back(bounded_check(
        label(ds) + " conjugate symmetry", worst_conj, 0.0));
  }
  return result;
}

SuiteResult cdf_suite(std::uint64_t budget) {
  SuiteResult result{"cdf", {}};
  constexpr std::uint32_t kGrid = 2000;
  constexpr std::uint32_t kDepth = 30;
  for (const DigitSet& ds : family()) {
    const double m = ds.digit_count();
    const std::uint32_t k_max = max_level(ds, 8, budget);

    double worst_step = 0.0;  // excess over the m^{-k} refinement bound
    double worst_monotone = 0.0;
    for (std::uint32_t k = 1; k + 1 <= k_max; ++k) {
      const double bound = std::pow(m, -static_cast<double>(k));
      double previous = 0.0;
      for (std::uint32_t i = 0; i <= kGrid; ++i) {
        const double x = static_cast<double>(i) / kGrid;
        const double coarse = level_cdf(ds, k, x, budget);
        const double fine = level_cdf(ds, k + 1, x, budget);
        const double gap = std::abs(coarse - fine);
        if (gap > bound) worst_step = std::max(worst_step, gap - bound);
        if (coarse < previous) {
          worst_monotone = std::max(worst_monotone, previous - coarse);
        }
        previous = coarse;
      }
    }
    result.checks.push_back(bounded_check(
        label(ds) + " refinement gap within m^-k", worst_step, 0.0));
    result.checks.push_back(
        bounded_check(label(ds) + " level CDF monotone", worst_monotone, 0.0));

    // Limit CDF against the level-k_max CDF on the q-adic grid.
    const std::uint64_t points = level_symbol_count(ds.base(), k_max, budget);
    const std::uint64_t samples = std::min<std::uint64_t>(points, kGrid) + 1;
    const double tolerance = std::pow(m, -static_cast<double>(kDepth)) +
                             std::pow(m, -static_cast<double>(k_max));
    double worst_limit = 0.0;
    for (std::uint64_t s = 0; s <= samples; ++s) {
      const std::uint64_t j = (points * s) / samples;
      const double x = static_cast<double>(j) / static_cast<double>(points);
      worst_limit = std::max(
          worst_limit,
          std::abs(limit_cdf(ds, x, kDepth) - level_cdf(ds, k_max, x, budget)));
    }
    result.checks.push_back(bounded_check(
        label(ds) + " limit vs level k=" + std::to_string(k_max), worst_limit,
        tolerance));

    const double at_zero = level_cdf(ds, k_max, 0.0, budget);
    const double at_one = level_cdf(ds, k_max, 1.0, budget);
    result.checks.push_back(bounded_check(
        label(ds) + " CDF endpoints exact",
        std::max(std::abs(at_zero), std::abs(at_one - 1.0)), 0.0));
  }
  return result;
}

SuiteResult asymptotic_suite(std::uint64_t) {
  SuiteResult result{"asymptotic", {}};
  for (const DigitSet& ds : family()) {
    const AsymptoticProbeReport report = asymptotic_probe(ds, 10.0, 30.0, 0.05);
    double lowest = std::numeric_limits<double>::infinity();
    double highest = 0.0;
    bool all_finite = true;
    for (const ProbeSample& s : report.samples) {
      if (!std::isfinite(s.value) || s.value <= 0.0) all_finite = false;
      lowest = std::min(lowest, s.value);
      highest = std::max(highest, s.value);
    }
    Check range;
    range.name = label(ds) + " normalized values bounded and positive";
    range.passed = all_finite;
    range.worst = all_finite ? 0.0 : 1.0;
    range.bound = 0.0;
    range.note = "G in [" + float17(lowest) + ", " + float17(highest) + "]";
    result.checks.push_back(std::move(range));

    // Unit shifts in t hold the log-periodic phase fixed; samples one apart
    // must collapse once t is large.
    const std::size_t per_unit = 20;  // 1/0.05 samples per unit of t
    double worst_lock = 0.0;
    for (std::size_t i = 0; i + per_unit < report.samples.size(); ++i) {
      if (report.samples[i].t < 20.0 - 1e-9) continue;
      worst_lock = std::max(worst_lock,
                            std::abs(report.samples[i].value -
                                     report.samples[i + per_unit].value));
    }
    result.checks.push_back(bounded_check(
        label(ds) + " unit-shift lock for t>=20", worst_lock, 1e-3));

    if (ds.digit_count() == ds.base()) {
      double worst_flat = 0.0;
      for (const ProbeSample& s : report.samples) {
        worst_flat = std::max(worst_flat, std::abs(s.value - 1.0));
      }
      result.checks.push_back(bounded_check(
          label(ds) + " full digit set gives G=1", worst_flat, 1e-6));
    }
  }
  return result;
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed; });
}

const std::vector<DigitSet>& family() {
  static const std::vector<DigitSet> sets = [] {
    std::vector<DigitSet> v;
    v.push_back(DigitSet(3, {0, 2}));
    v.push_back(DigitSet(2, {0, 1}));
    v.push_back(DigitSet(4, {0, 1, 3}));
    v.push_back(DigitSet(5, {0, 4}));
    v.push_back(DigitSet(10, {0, 2, 5, 8}));
    v.push_back(DigitSet(7, {0}));
    v.push_back(DigitSet(3, {0, 1, 2}));
    return v;
  }();
  return sets;
}

std::vector<std::string> suite_names() {
  return {"dimension", "fourier", "cdf", "oracle", "asymptotic"};
}

SuiteResult run_suite(std::string_view name, std::uint64_t budget) {
  if (name == "dimension") return dimension_suite(budget);
  if (name == "fourier") return fourier_suite(budget);
  if (name == "cdf") return cdf_suite(budget);
  if (name == "oracle") return oracle_suite(budget);
  if (name == "asymptotic") return asymptotic_suite(budget);
  throw std::invalid_argument("unknown verification suite: " +
                              std::string(name));
}

}  // namespace cantor::verify
