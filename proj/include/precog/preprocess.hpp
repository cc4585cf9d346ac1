#pragma once

#include "precog/config.hpp"
#include "precog/time_series.hpp"

namespace precog {

/// Mean-aggregates observations into buckets of `resolution` starting at the
/// first timestamp. Empty interior buckets are linearly interpolated.
TimeSeries resample(const TimeSeries& ts, Seconds resolution);

/// Trailing median: output i is the median of every input j <= i with
/// t_i - t_j < window. Even-sized windows average the two middle values.
TimeSeries median_smooth(const TimeSeries& ts, Seconds window);

/// resample followed by median_smooth with the configured parameters.
TimeSeries preprocess(const TimeSeries& ts, const PrecogConfig& cfg);

}  // namespace precog
