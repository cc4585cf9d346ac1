#pragma once

#include "precog/config.hpp"
#include "precog/model.hpp"
#include "precog/time_series.hpp"

namespace precog {

/// Offline phase: mine historic trends from a preprocessed series.
///
/// Every change point in turn anchors the left end of a segment whose right
/// end walks over all later change points. The best fit per anchor is the
/// last one (scanning rightward) with r2 >= r2_min that is at least as long
/// and at least as steep as the incumbent. It is saved when its exit time is
/// within the critical time, and (d_max, s_max) follows the same dominance
/// rule across anchors.
TrendModel train(const TimeSeries& series, const PrecogConfig& cfg);

/// Online phase: flag the anomalous tail of a preprocessed series.
///
/// The right anchor is fixed at the last point; segments grow leftward one
/// change point at a time. A segment with exit time <= critical time and
/// r2 >= r2_min is marked when it dominates (s_max, d_max) or any saved
/// trend in both slope and duration.
///
/// Throws Error(config_mismatch) when the model was trained with a different
/// threshold or resample resolution.
DetectionResult detect(const TimeSeries& series, const TrendModel& model, const PrecogConfig& cfg);

struct PipelineResult {
  TrendModel model;
  DetectionResult detection;
  TimeSeries test_series;  // preprocessed, aligned with detection.mask
};

/// Preprocess once, split at floor(train_fraction * N), train on the head
/// and detect on the tail.
PipelineResult run_pipeline(const TimeSeries& raw, const PrecogConfig& cfg);

}  // namespace precog
