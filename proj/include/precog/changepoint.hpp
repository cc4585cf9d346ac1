#pragma once

#include <Eigen/Core>

#include <vector>

#include "precog/time_series.hpp"

namespace precog {

/// Change points from z-scores of absolute first differences.
///
/// The difference x_i - x_{i-1} is attributed to index i. An interior index is
/// reported when its z-score (mean and population standard deviation over all
/// absolute differences) strictly exceeds `z_threshold`. Index 0 and N-1 are
/// always present. When the differences have no spread (standard deviation
/// zero up to rounding, i.e. below 1e-9 of their mean) only the endpoints are
/// returned.
///
/// Result is sorted and unique. Throws Error(series_too_short) for N < 2.
template <typename Derived>
std::vector<Eigen::Index> detect_change_points(const Eigen::DenseBase<Derived>& values,
                                               double z_threshold);

std::vector<Eigen::Index> detect_change_points(const TimeSeries& ts, double z_threshold);

}  // namespace precog

#include "precog/changepoint_impl.hpp"
