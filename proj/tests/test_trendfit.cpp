#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "precog/error.hpp"
#include "precog/trendfit.hpp"

using namespace precog;

namespace {

double rel_err(long double got, long double want) {
  const long double scale = std::max<long double>(std::fabs(want), 1e-300L);
  return static_cast<double>(std::fabs(got - want) / scale);
}

}  // namespace

TEST_SUITE("trendfit") {
  TEST_CASE("perfect line") {
    const auto fit = fit_line(testing::ramp(20, 10.0, 0.5, 1));
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(fit.r2 == doctest::Approx(1.0));
  }

  TEST_CASE("flat segment has r2 = 1 by convention") {
    const auto fit = fit_line(testing::regular(std::vector<double>(12, 40.0)));
    CHECK(fit.slope == 0.0);
    CHECK(fit.intercept == 40.0);
    CHECK(fit.r2 == 1.0);
  }

  TEST_CASE("too short") {
    CHECK_THROWS_AS(fit_line(testing::regular({1.0})), Error);
  }

  TEST_CASE("noisy line matches closed-form OLS") {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> eps(0.0, 0.5);
    std::vector<double> x, y;
    for (int i = 0; i < 200; ++i) {
      x.push_back(i);
      y.push_back(std::clamp(20.0 + 0.1 * i + eps(rng), 0.0, 100.0));
    }
    const auto fit = fit_line(testing::regular(y, 1));
    const auto ref = oracle::normal_equations(x, y);
    CHECK(rel_err(fit.slope, ref.slope) <= 1e-9);
    CHECK(rel_err(fit.intercept, ref.intercept) <= 1e-9);
  }

  TEST_CASE("property: OLS agrees with normal equations on 1000 random segments") {
    std::mt19937_64 rng(1000);
    int worst_index = -1;
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 300)(rng);
      const double slope = std::uniform_real_distribution<double>(-1e-3, 1e-3)(rng);
      const double sigma = std::uniform_real_distribution<double>(0.0, 5.0)(rng);
      std::normal_distribution<double> eps(0.0, sigma + 1e-6);
      std::vector<double> x, y;
      std::vector<Timestamp> t;
      for (std::size_t i = 0; i < n; ++i) {
        t.push_back(1'700'000'000 + static_cast<Timestamp>(i) * 300);
        x.push_back(static_cast<double>(i) * 300.0);
        y.push_back(std::clamp(50.0 + slope * x.back() + eps(rng), 0.0, 100.0));
      }
      const auto fit = fit_line(TimeSeries(t, y));
      const auto ref = oracle::normal_equations(x, y);
      // relative to the slope scale of the data, so near-zero slopes don't blow up
      const long double scale = std::max<long double>(std::fabs(ref.slope), 1e-9L);
      const double e = static_cast<double>(std::fabs(fit.slope - ref.slope) / scale);
      if (e > worst) {
        worst = e;
        worst_index = k;
      }
      CHECK(rel_err(fit.intercept, ref.intercept) <= 1e-9);
    }
    INFO("worst segment " << worst_index);
    CHECK(worst <= 1e-9);
  }

  TEST_CASE("streaming accumulator agrees with the two-pass fit") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> val(0, 100);
    for (int k = 0; k < 100; ++k) {
      std::vector<double> y(50);
      for (auto& v : y) v = val(rng);
      const auto ts = testing::regular(y);
      SegmentAccumulator acc;
      for (Eigen::Index i = ts.size() - 1; i >= 0; --i) acc.add(300.0 * static_cast<double>(i), y[i]);
      const auto fit = fit_line(ts);
      CHECK(acc.slope() == doctest::Approx(fit.slope).epsilon(1e-9));
      CHECK(acc.r2() == doctest::Approx(fit.r2).epsilon(1e-9));
      CHECK(acc.value_at(0.0) == doctest::Approx(fit.intercept).epsilon(1e-9));
    }
  }

  TEST_CASE("exit time rules") {
    // slope 0.1 %/min from a fitted end of 40 reaches 100 after 600 min
    CHECK(exit_time(40.0, 0.1 / 60.0, 100.0) == doctest::Approx(600.0 * 60.0));
    CHECK(exit_time(40.0, -0.01, 100.0) == std::numeric_limits<double>::infinity());
    CHECK(exit_time(40.0, 0.0, 100.0) == std::numeric_limits<double>::infinity());
    CHECK(exit_time(100.0, 0.5, 100.0) == 0.0);
    CHECK(exit_time(100.0, -0.5, 100.0) == 0.0);
  }

  TEST_CASE("characterize a rising segment") {
    PrecogConfig cfg;
    // 0.1 %/min over 100 min starting at 30: fitted end 40, exit 600 min
    const auto seg = testing::ramp(21, 30.0, 0.1 / 60.0, 300);
    const auto tr = characterize(seg, cfg);
    CHECK(tr.duration == 6000.0);
    CHECK(tr.slope == doctest::Approx(0.1 / 60.0));
    CHECK(tr.exit_time == doctest::Approx(36000.0));
    CHECK(tr.start_index == 0);
    CHECK(tr.end_index == 20);
  }

  TEST_CASE("characterize: decreasing and saturated segments") {
    PrecogConfig cfg;
    CHECK(std::isinf(characterize(testing::ramp(10, 80.0, -0.001), cfg).exit_time));
    CHECK(characterize(testing::ramp(10, 100.0 - 9 * 300 * 0.001, 0.001), cfg).exit_time == 0.0);
  }

  TEST_CASE("characterize: too short for min_segment_points") {
    PrecogConfig cfg;
    try {
      characterize(testing::ramp(4, 10.0, 0.01), cfg);
      FAIL("expected SegmentTooShort");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::segment_too_short);
    }
  }

  TEST_CASE("characterize_range keeps parent indices") {
    PrecogConfig cfg;
    const auto ts = testing::ramp(50, 10.0, 0.001);
    const auto tr = characterize_range(ts, 10, 30, cfg);
    CHECK(tr.start_index == 10);
    CHECK(tr.end_index == 30);
    CHECK(tr.duration == 20 * 300.0);
    CHECK(tr.intercept == doctest::Approx(10.0 + 0.001 * 3000.0));
  }

  TEST_CASE("property: noiseless ramps recover the generator slope") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 200; ++k) {
      const double slope = std::uniform_real_distribution<double>(1e-6, 1e-3)(rng);
      const std::size_t n = std::uniform_int_distribution<std::size_t>(5, 1000)(rng);
      const double first = std::uniform_real_distribution<double>(0, 5)(rng);
      if (first + slope * 300.0 * static_cast<double>(n - 1) > 100.0) continue;
      const auto fit = fit_line(testing::ramp(n, first, slope, 300, 1'700'000'000));
      CHECK(rel_err(fit.slope, slope) <= 1e-9);
    }
  }

  TEST_CASE("property: exit time is non-increasing in slope") {
    for (double end : {0.5, 20.0, 99.0}) {
      double prev = std::numeric_limits<double>::infinity();
      for (double s = 1e-6; s < 1e-2; s *= 1.7) {
        const double e = exit_time(end, s, 100.0);
        CHECK(e > 0.0);
        CHECK(std::isfinite(e));
        CHECK(e <= prev);
        prev = e;
      }
    }
  }
}
