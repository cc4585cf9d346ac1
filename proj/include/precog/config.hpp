#pragma once

#include <chrono>
#include <cstddef>

namespace precog {

using Seconds = std::chrono::seconds;

/// Tunable thresholds and processing parameters. Defaults follow the
/// published evaluation setup.
struct PrecogConfig {
  double threshold_u = 100.0;                          // percent
  Seconds critical_time = std::chrono::days{7};
  Seconds resample_resolution = std::chrono::minutes{5};
  Seconds smoothing_window = std::chrono::hours{1};
  double r2_min = 0.75;
  double cpd_z_threshold = 3.0;
  std::size_t min_segment_points = 5;                  // shortest segment worth fitting
  double train_fraction = 0.65;

  /// Throws Error(invalid_config) on the first violated invariant.
  void validate() const;

  double critical_seconds() const { return static_cast<double>(critical_time.count()); }

  friend bool operator==(const PrecogConfig&, const PrecogConfig&) = default;
};

}  // namespace precog
