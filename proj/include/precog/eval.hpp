#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "precog/config.hpp"
#include "precog/time_series.hpp"

namespace precog {

struct Prediction {
  bool predicted;
  bool label;
};

struct Scores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const noexcept { return tp + fp + tn + fn; }
};

/// Series-level precision/recall/F1. Undefined ratios are reported as 0.
/// Throws Error(empty_input) on an empty list.
Scores score_corpus(std::span<const Prediction> results);

/// One ground-truth series. `group` is a free-form label for per-group
/// reporting (the generating row or pattern).
struct LabeledSeries {
  std::string name;
  std::string group;
  bool label;
  TimeSeries series;
};

/// Run the full pipeline on every series. Entries are processed in parallel
/// (`workers` = 0 picks hardware concurrency); output order matches input.
std::vector<bool> predict_corpus(std::span<const LabeledSeries> corpus, const PrecogConfig& cfg,
                                 unsigned workers = 0);

std::vector<Prediction> pair_with_labels(std::span<const LabeledSeries> corpus,
                                         const std::vector<bool>& predicted);

/// Scores per `group`, in group-name order.
std::map<std::string, Scores> score_by_group(std::span<const LabeledSeries> corpus,
                                             const std::vector<bool>& predicted);

enum class SweepParameter { r2_min, critical_time };

struct SweepPoint {
  double value;  // r2_min, or critical time in days
  Scores scores;
};

/// Re-run the corpus once per value with everything else taken from `base`.
/// Critical-time values are in days. Needs at least two values.
std::vector<SweepPoint> sweep(std::span<const LabeledSeries> corpus, SweepParameter parameter,
                              std::span<const double> values, const PrecogConfig& base = {},
                              unsigned workers = 0);

}  // namespace precog
