#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>

#include "precog/config.hpp"
#include "precog/error.hpp"
#include "precog/model.hpp"
#include "precog/time_series.hpp"

namespace precog {

template <typename Scalar>
struct LineFit {
  Scalar slope{};
  Scalar intercept{};  // value at abscissa 0
  Scalar r2{};
};

/// R² with the flat-segment convention: SS_tot = 0 gives 1 for a perfect
/// fit and 0 otherwise. Clamped to [0, 1].
template <typename Scalar>
Scalar r_squared(Scalar ss_res, Scalar ss_tot) {
  if (ss_tot == Scalar(0)) return ss_res == Scalar(0) ? Scalar(1) : Scalar(0);
  return std::clamp(Scalar(1) - ss_res / ss_tot, Scalar(0), Scalar(1));
}

/// Ordinary least squares of y on x (two-pass, centered).
template <typename DerivedX, typename DerivedY>
LineFit<typename DerivedY::Scalar> fit_line(const Eigen::MatrixBase<DerivedX>& x,
                                            const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedY::Scalar;
  if (x.size() != y.size()) throw Error(Errc::invalid_params, "fit_line: size mismatch");
  if (y.size() < 2) throw Error(Errc::segment_too_short, "fit_line needs at least 2 points");

  const Scalar mx = x.mean();
  const Scalar my = y.mean();
  const auto dx = (x.array() - mx).eval();
  const auto dy = (y.array() - my).eval();
  const Scalar sxx = dx.square().sum();
  const Scalar syy = dy.square().sum();
  if (sxx == Scalar(0)) throw Error(Errc::invalid_params, "fit_line: abscissae are all equal");

  LineFit<Scalar> fit;
  fit.slope = (dx * dy).sum() / sxx;
  fit.intercept = my - fit.slope * mx;
  const Scalar ss_res = (dy - fit.slope * dx).square().sum();
  fit.r2 = r_squared(ss_res, syy);
  return fit;
}

/// Fit against seconds since the segment's first timestamp.
LineFit<double> fit_line(const TimeSeries& segment);

/// Seconds until a line at `end_value` with `slope` reaches `threshold`:
/// 0 at or above the threshold, +inf for non-positive slopes.
double exit_time(double end_value, double slope, double threshold);

/// Fit and characterize a whole segment. Indices refer to the segment
/// itself (0 .. size-1); use characterize_range for positions in a parent
/// series.
FittedTrend characterize(const TimeSeries& segment, const PrecogConfig& cfg);

/// Characterize ts[first..last] (inclusive) keeping parent indices.
FittedTrend characterize_range(const TimeSeries& ts, Eigen::Index first, Eigen::Index last,
                               const PrecogConfig& cfg);

/// Streaming least-squares statistics. Points can be added in any order;
/// moments are updated with Welford's recurrences so growing a segment by
/// one point costs O(1).
class SegmentAccumulator {
 public:
  void add(double x, double y) {
    ++n_;
    const double dx = x - mean_x_;
    mean_x_ += dx / static_cast<double>(n_);
    const double dy = y - mean_y_;
    mean_y_ += dy / static_cast<double>(n_);
    m2x_ += dx * (x - mean_x_);
    m2y_ += dy * (y - mean_y_);
    cxy_ += dx * (y - mean_y_);
  }

  std::size_t count() const noexcept { return n_; }

  double slope() const { return m2x_ > 0.0 ? cxy_ / m2x_ : 0.0; }

  /// Fitted value at abscissa x.
  double value_at(double x) const { return mean_y_ + slope() * (x - mean_x_); }

  double r2() const {
    const double ss_res = m2x_ > 0.0 ? std::max(0.0, m2y_ - cxy_ * cxy_ / m2x_) : m2y_;
    return r_squared(ss_res, m2y_);
  }

 private:
  std::size_t n_ = 0;
  double mean_x_ = 0.0;
  double mean_y_ = 0.0;
  double m2x_ = 0.0;
  double m2y_ = 0.0;
  double cxy_ = 0.0;
};

}  // namespace precog
