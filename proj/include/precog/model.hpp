#pragma once

#include <Eigen/Core>

#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "precog/config.hpp"

namespace precog {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A regression-characterized segment of a preprocessed series.
struct FittedTrend {
  double slope = 0.0;          // percent per second
  double intercept = 0.0;      // fitted value at the segment's first timestamp
  double r2 = 0.0;
  double duration = 0.0;       // seconds
  double exit_time = kInfinity;  // seconds past the segment end until the fit reaches U
  Eigen::Index start_index = 0;
  Eigen::Index end_index = 0;
};

struct SavedTrend {
  double duration = 0.0;  // seconds
  double slope = 0.0;     // percent per second

  friend bool operator==(const SavedTrend&, const SavedTrend&) = default;
};

inline constexpr int kModelSchemaVersion = 1;

/// Training output: historic trends plus the running (D_max, S_max) pair.
struct TrendModel {
  std::vector<SavedTrend> trends;
  double d_max = 0.0;
  double s_max = 0.0;
  PrecogConfig config;
  int schema_version = kModelSchemaVersion;

  bool empty() const noexcept { return trends.empty(); }

  friend bool operator==(const TrendModel&, const TrendModel&) = default;
};

struct AnomalousWindow {
  Eigen::Index start_index = 0;
  Eigen::Index end_index = 0;  // inclusive
  double slope = 0.0;
  double exit_time = kInfinity;

  friend bool operator==(const AnomalousWindow&, const AnomalousWindow&) = default;
};

struct DetectionResult {
  std::vector<bool> mask;  // one flag per preprocessed test point
  std::vector<AnomalousWindow> windows;
  bool is_leaking = false;

  friend bool operator==(const DetectionResult&, const DetectionResult&) = default;
};

/// Maximal runs of `true` in `mask`, with slope/exit left at defaults.
std::vector<AnomalousWindow> mask_runs(const std::vector<bool>& mask);

std::string model_to_json(const TrendModel& model);
TrendModel model_from_json(const std::string& text);

void save_model(const TrendModel& model, const std::filesystem::path& path);
TrendModel load_model(const std::filesystem::path& path);

}  // namespace precog
