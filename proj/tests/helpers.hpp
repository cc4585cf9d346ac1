#pragma once

#include <cstdint>
#include <vector>

#include "precog/time_series.hpp"

namespace testing {

// Regular series starting at `start` with `step` seconds between points.
inline precog::TimeSeries regular(const std::vector<double>& values, std::int64_t step = 300,
                                  std::int64_t start = 0) {
  std::vector<std::int64_t> t(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) t[i] = start + static_cast<std::int64_t>(i) * step;
  return precog::TimeSeries(t, values);
}

// Straight line sampled every `step` seconds: first + slope_per_s * t.
inline precog::TimeSeries ramp(std::size_t n, double first, double slope_per_s,
                               std::int64_t step = 300, std::int64_t start = 0) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = first + slope_per_s * static_cast<double>(i * step);
  return regular(v, step, start);
}

inline std::vector<double> to_vector(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace testing
