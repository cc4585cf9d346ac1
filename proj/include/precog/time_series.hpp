#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace precog {

/// Epoch seconds.
using Timestamp = std::int64_t;
using TimestampVector = Eigen::Matrix<Timestamp, Eigen::Dynamic, 1>;

/// Memory utilization (percent) of one VM sampled at strictly increasing
/// instants. Construction enforces the invariants: non-empty, equal lengths,
/// strictly increasing timestamps, every value in [0, 100].
class TimeSeries {
 public:
  TimeSeries(TimestampVector timestamps, Eigen::VectorXd values);
  TimeSeries(const std::vector<Timestamp>& timestamps, const std::vector<double>& values);

  Eigen::Index size() const noexcept { return values_.size(); }
  const TimestampVector& timestamps() const noexcept { return timestamps_; }
  const Eigen::VectorXd& values() const noexcept { return values_; }

  Timestamp front_time() const { return timestamps_(0); }
  Timestamp back_time() const { return timestamps_(size() - 1); }

  /// Inclusive sub-range [first, last].
  TimeSeries slice(Eigen::Index first, Eigen::Index last) const;

  /// Seconds since `origin` as doubles, for regression abscissae.
  Eigen::VectorXd seconds_since(Timestamp origin) const;

  friend bool operator==(const TimeSeries& a, const TimeSeries& b);

 private:
  TimestampVector timestamps_;
  Eigen::VectorXd values_;
};

/// Unchecked observations as read from a file or generator.
struct RawSeries {
  std::vector<Timestamp> timestamps;
  std::vector<double> values;
};

struct ValidatedSeries {
  TimeSeries series;
  std::size_t clamped = 0;  // values in (100, 100.5] pulled down to 100
};

inline constexpr double kMaxUtilization = 100.0;
inline constexpr double kClampTolerance = 0.5;

/// Ingestion gate. Rejects empty input, non-increasing timestamps and values
/// outside [0, 100.5]; clamps the (100, 100.5] band to 100.
ValidatedSeries validate_series(const RawSeries& raw);
ValidatedSeries validate_series(const TimeSeries& ts);

RawSeries to_raw(const TimeSeries& ts);

}  // namespace precog
