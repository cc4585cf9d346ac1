#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "precog/changepoint.hpp"
#include "precog/error.hpp"

using namespace precog;

namespace {

std::vector<std::size_t> as_sizes(const std::vector<Eigen::Index>& v) {
  return {v.begin(), v.end()};
}

// Values on a 1/8 grid so shifts and power-of-two scalings stay exact.
std::vector<double> dyadic_series(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> step(-16, 16);
  std::uniform_int_distribution<int> jump(0, 30);
  std::vector<double> v{40.0};
  for (std::size_t i = 1; i < n; ++i) {
    double d = step(rng) / 8.0;
    if (jump(rng) == 0) d += 20.0;
    v.push_back(v.back() + d);
  }
  return v;
}

}  // namespace

TEST_SUITE("changepoint") {
  TEST_CASE("constant series yields only endpoints") {
    CHECK(detect_change_points(testing::regular(std::vector<double>(10, 7.0)), 3.0) ==
          std::vector<Eigen::Index>{0, 9});
  }

  TEST_CASE("a single jump dominates") {
    const auto ts = testing::regular({0, 0, 0, 0, 50, 50, 50, 50});
    CHECK(detect_change_points(ts, 1.5) == std::vector<Eigen::Index>{0, 4, 7});
    CHECK(as_sizes(detect_change_points(ts, 1.5)) ==
          oracle::change_points({0, 0, 0, 0, 50, 50, 50, 50}, 1.5));
  }

  TEST_CASE("linear ramp with a constant step yields only endpoints") {
    const auto ts = testing::ramp(200, 3.0, 0.0013);
    CHECK(detect_change_points(ts, 3.0) == std::vector<Eigen::Index>{0, 199});
  }

  TEST_CASE("two points and too-short input") {
    CHECK(detect_change_points(testing::regular({1, 90}), 3.0) == std::vector<Eigen::Index>{0, 1});
    CHECK_THROWS_AS(detect_change_points(testing::regular({1}), 3.0), Error);
  }

  TEST_CASE("works on plain Eigen expressions") {
    Eigen::VectorXd v(8);
    v << 0, 0, 0, 0, 50, 50, 50, 50;
    CHECK(detect_change_points(v.head(8), 1.5) == std::vector<Eigen::Index>{0, 4, 7});
  }

  TEST_CASE("property: sorted, unique, bounded, endpoints present, oracle agrees") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 200; ++round) {
      std::uniform_int_distribution<std::size_t> len(2, 400);
      const auto v = dyadic_series(rng, len(rng));
      const double z = std::uniform_real_distribution<double>(0.5, 4.0)(rng);
      const auto cps = detect_change_points(Eigen::Map<const Eigen::VectorXd>(
                                                v.data(), static_cast<Eigen::Index>(v.size())),
                                            z);
      REQUIRE(cps.size() >= 2);
      CHECK(cps.front() == 0);
      CHECK(cps.back() == static_cast<Eigen::Index>(v.size()) - 1);
      for (std::size_t i = 1; i < cps.size(); ++i) CHECK(cps[i] > cps[i - 1]);
      CHECK(as_sizes(cps) == oracle::change_points(v, z));
    }
  }

  TEST_CASE("property: invariant under shift and positive scaling") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 200; ++round) {
      const auto v = dyadic_series(rng, 300);
      const Eigen::Map<const Eigen::VectorXd> base(v.data(), static_cast<Eigen::Index>(v.size()));
      const auto expected = detect_change_points(base, 3.0);
      const double shift = std::uniform_int_distribution<int>(-64, 64)(rng) / 4.0;
      const double scale = std::ldexp(1.0, std::uniform_int_distribution<int>(-4, 4)(rng));
      CHECK(detect_change_points((base.array() + shift).matrix(), 3.0) == expected);
      CHECK(detect_change_points(base * scale, 3.0) == expected);
    }
  }
}
