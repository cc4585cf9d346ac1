#include "precog/error.hpp"

namespace precog {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::empty_series: return "EmptySeries";
    case Errc::non_monotonic_timestamps: return "NonMonotonicTimestamps";
    case Errc::value_out_of_range: return "ValueOutOfRange";
    case Errc::series_too_short: return "SeriesTooShort";
    case Errc::segment_too_short: return "SegmentTooShort";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::config_mismatch: return "ConfigMismatch";
    case Errc::schema_mismatch: return "SchemaMismatch";
    case Errc::io_error: return "IoError";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::invalid_sizes: return "InvalidSizes";
    case Errc::empty_input: return "EmptyInput";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::optional<std::size_t> where)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      where_(where) {}

}  // namespace precog
