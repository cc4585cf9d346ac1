#include "precog/trendfit.hpp"

namespace precog {

LineFit<double> fit_line(const TimeSeries& segment) {
  if (segment.size() < 2) throw Error(Errc::segment_too_short, "fit_line needs at least 2 points");
  return fit_line(segment.seconds_since(segment.front_time()), segment.values());
}

double exit_time(double end_value, double slope, double threshold) {
  if (end_value >= threshold) return 0.0;
  if (slope <= 0.0) return kInfinity;
  return (threshold - end_value) / slope;
}

FittedTrend characterize_range(const TimeSeries& ts, Eigen::Index first, Eigen::Index last,
                               const PrecogConfig& cfg) {
  if (first < 0 || last >= ts.size() || last < first)
    throw Error(Errc::invalid_params, "characterize: range out of bounds");
  const Eigen::Index n = last - first + 1;
  if (n < static_cast<Eigen::Index>(cfg.min_segment_points) || n < 2)
    throw Error(Errc::segment_too_short,
                "segment has " + std::to_string(n) + " points, need " +
                    std::to_string(cfg.min_segment_points));

  const Timestamp origin = ts.timestamps()(first);
  const Eigen::VectorXd x =
      (ts.timestamps().segment(first, n).array() - origin).cast<double>().matrix();
  const auto fit = fit_line(x, ts.values().segment(first, n));

  FittedTrend trend;
  trend.slope = fit.slope;
  trend.intercept = fit.intercept;
  trend.r2 = fit.r2;
  trend.duration = x(n - 1);
  trend.exit_time = exit_time(fit.intercept + fit.slope * trend.duration, fit.slope, cfg.threshold_u);
  trend.start_index = first;
  trend.end_index = last;
  return trend;
}

FittedTrend characterize(const TimeSeries& segment, const PrecogConfig& cfg) {
  return characterize_range(segment, 0, segment.size() - 1, cfg);
}

}  // namespace precog
