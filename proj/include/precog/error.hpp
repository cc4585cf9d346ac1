#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace precog {

enum class Errc {
  empty_series,
  non_monotonic_timestamps,
  value_out_of_range,
  series_too_short,
  segment_too_short,
  invalid_config,
  config_mismatch,
  schema_mismatch,
  io_error,
  parse_error,
  invalid_params,
  invalid_sizes,
  empty_input,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library. `where()` carries the offending
/// index, line number or schema version when the error has one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> where = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> where() const noexcept { return where_; }

 private:
  Errc code_;
  std::optional<std::size_t> where_;
};

}  // namespace precog
