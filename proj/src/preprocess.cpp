#include "precog/preprocess.hpp"

#include <algorithm>
#include <vector>

#include "precog/error.hpp"

namespace precog {

TimeSeries resample(const TimeSeries& ts, Seconds resolution) {
  const Timestamp step = resolution.count();
  if (step <= 0) throw Error(Errc::invalid_config, "resample resolution must be positive");

  const Timestamp origin = ts.front_time();
  const Eigen::Index buckets = (ts.back_time() - origin) / step + 1;

  Eigen::VectorXd sums = Eigen::VectorXd::Zero(buckets);
  Eigen::VectorXi counts = Eigen::VectorXi::Zero(buckets);
  for (Eigen::Index i = 0; i < ts.size(); ++i) {
    const Eigen::Index b = (ts.timestamps()(i) - origin) / step;
    sums(b) += ts.values()(i);
    counts(b) += 1;
  }

  Eigen::VectorXd values(buckets);
  TimestampVector times(buckets);
  Eigen::Index prev = -1;  // last non-empty bucket
  for (Eigen::Index b = 0; b < buckets; ++b) {
    times(b) = origin + b * step;
    if (counts(b) == 0) continue;
    values(b) = sums(b) / counts(b);
    if (prev >= 0 && b - prev > 1) {
      const double lo = values(prev);
      const double hi = values(b);
      const double span = static_cast<double>(b - prev);
      for (Eigen::Index k = prev + 1; k < b; ++k)
        values(k) = lo + (hi - lo) * static_cast<double>(k - prev) / span;
    }
    prev = b;
  }
  return TimeSeries(std::move(times), std::move(values));
}

TimeSeries median_smooth(const TimeSeries& ts, Seconds window) {
  const auto& t = ts.timestamps();
  const auto& x = ts.values();
  const Timestamp width = window.count();

  Eigen::VectorXd out(ts.size());
  std::vector<double> sorted;
  Eigen::Index left = 0;
  for (Eigen::Index i = 0; i < ts.size(); ++i) {
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), x(i)), x(i));
    while (t(i) - t(left) >= width && left < i) {
      sorted.erase(std::lower_bound(sorted.begin(), sorted.end(), x(left)));
      ++left;
    }
    const std::size_t n = sorted.size();
    out(i) = (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  }
  return TimeSeries(t, std::move(out));
}

TimeSeries preprocess(const TimeSeries& ts, const PrecogConfig& cfg) {
  cfg.validate();
  return median_smooth(resample(ts, cfg.resample_resolution), cfg.smoothing_window);
}

}  // namespace precog
