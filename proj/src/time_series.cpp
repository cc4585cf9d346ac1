#include "precog/time_series.hpp"

#include <cmath>
#include <string>

#include "precog/error.hpp"

namespace precog {

namespace {

void check_invariants(const TimestampVector& t, const Eigen::VectorXd& v) {
  if (v.size() == 0) throw Error(Errc::empty_series, "series has no observations");
  if (t.size() != v.size())
    throw Error(Errc::invalid_params, "timestamps and values differ in length");
  for (Eigen::Index i = 1; i < t.size(); ++i) {
    if (t(i) <= t(i - 1))
      throw Error(Errc::non_monotonic_timestamps,
                  "timestamp at index " + std::to_string(i) + " does not increase",
                  static_cast<std::size_t>(i));
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!(v(i) >= 0.0 && v(i) <= kMaxUtilization))
      throw Error(Errc::value_out_of_range,
                  "value " + std::to_string(v(i)) + " at index " + std::to_string(i),
                  static_cast<std::size_t>(i));
  }
}

}  // namespace

TimeSeries::TimeSeries(TimestampVector timestamps, Eigen::VectorXd values)
    : timestamps_(std::move(timestamps)), values_(std::move(values)) {
  check_invariants(timestamps_, values_);
}

TimeSeries::TimeSeries(const std::vector<Timestamp>& timestamps, const std::vector<double>& values)
    : TimeSeries(Eigen::Map<const TimestampVector>(timestamps.data(),
                                                   static_cast<Eigen::Index>(timestamps.size())),
                 Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                   static_cast<Eigen::Index>(values.size()))) {}

TimeSeries TimeSeries::slice(Eigen::Index first, Eigen::Index last) const {
  if (first < 0 || last >= size() || first > last)
    throw Error(Errc::invalid_params, "slice out of bounds");
  const Eigen::Index n = last - first + 1;
  return TimeSeries(timestamps_.segment(first, n), values_.segment(first, n));
}

Eigen::VectorXd TimeSeries::seconds_since(Timestamp origin) const {
  return (timestamps_.array() - origin).cast<double>().matrix();
}

bool operator==(const TimeSeries& a, const TimeSeries& b) {
  return a.timestamps_ == b.timestamps_ && a.values_ == b.values_;
}

ValidatedSeries validate_series(const RawSeries& raw) {
  if (raw.values.empty() && raw.timestamps.empty())
    throw Error(Errc::empty_series, "series has no observations");
  if (raw.timestamps.size() != raw.values.size())
    throw Error(Errc::invalid_params, "timestamps and values differ in length");

  std::vector<double> values = raw.values;
  std::size_t clamped = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (std::isnan(v) || v < 0.0 || v > kMaxUtilization + kClampTolerance)
      throw Error(Errc::value_out_of_range,
                  "value " + std::to_string(v) + " at index " + std::to_string(i), i);
    if (v > kMaxUtilization) {
      values[i] = kMaxUtilization;
      ++clamped;
    }
  }
  return {TimeSeries(raw.timestamps, values), clamped};
}

ValidatedSeries validate_series(const TimeSeries& ts) { return {ts, 0}; }

RawSeries to_raw(const TimeSeries& ts) {
  RawSeries raw;
  raw.timestamps.assign(ts.timestamps().data(), ts.timestamps().data() + ts.size());
  raw.values.assign(ts.values().data(), ts.values().data() + ts.size());
  return raw;
}

}  // namespace precog
