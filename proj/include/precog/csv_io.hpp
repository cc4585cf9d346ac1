#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "precog/model.hpp"
#include "precog/time_series.hpp"

namespace precog {

/// RFC 3339 date-time ("2024-03-01T12:00:00Z", "...+02:00", optional
/// fractional seconds, truncated) to epoch seconds.
std::optional<Timestamp> parse_rfc3339(std::string_view text);

/// Reads `timestamp,value` CSV. Timestamps are epoch seconds or RFC 3339,
/// decided by the first data row; a file may not mix both. Errors carry the
/// 1-based line number in Error::where().
RawSeries parse_series_csv(std::istream& in);
RawSeries read_series_csv(const std::filesystem::path& path);

void write_series_csv(const std::filesystem::path& path, const TimeSeries& ts);

/// Per-point report: timestamp,value,anomalous (0/1).
void write_detection_csv(const std::filesystem::path& path, const TimeSeries& ts,
                         const DetectionResult& result);

/// Window summary with indices and timestamps.
std::string detection_to_json(const TimeSeries& ts, const DetectionResult& result);

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

}  // namespace precog
