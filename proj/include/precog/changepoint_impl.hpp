#pragma once

#include <cmath>

#include "precog/error.hpp"

namespace precog {

namespace detail {
inline constexpr double kFlatDiffTolerance = 1e-9;
}

template <typename Derived>
std::vector<Eigen::Index> detect_change_points(const Eigen::DenseBase<Derived>& values,
                                               double z_threshold) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = values.size();
  if (n < 2) throw Error(Errc::series_too_short, "change point detection needs at least 2 points");
  if (!(z_threshold > 0)) throw Error(Errc::invalid_config, "z threshold must be positive");

  const Eigen::Array<Scalar, Eigen::Dynamic, 1> diffs =
      (values.tail(n - 1) - values.head(n - 1)).derived().array().abs();
  const Scalar mean = diffs.mean();
  const Scalar stddev = std::sqrt((diffs - mean).square().mean());

  std::vector<Eigen::Index> points{0};
  if (stddev > Scalar(detail::kFlatDiffTolerance) * mean) {
    for (Eigen::Index k = 0; k < diffs.size(); ++k) {
      const Eigen::Index idx = k + 1;
      if ((diffs(k) - mean) / stddev > Scalar(z_threshold) && idx != n - 1) points.push_back(idx);
    }
  }
  points.push_back(n - 1);
  return points;
}

}  // namespace precog
