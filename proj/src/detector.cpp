#include "precog/detector.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "precog/changepoint.hpp"
#include "precog/error.hpp"
#include "precog/preprocess.hpp"
#include "precog/trendfit.hpp"

namespace precog {

namespace {

void require_length(const TimeSeries& series, const PrecogConfig& cfg, const char* what) {
  if (series.size() < static_cast<Eigen::Index>(cfg.min_segment_points) || series.size() < 2)
    throw Error(Errc::series_too_short,
                std::string(what) + " series has " + std::to_string(series.size()) +
                    " points, need " + std::to_string(cfg.min_segment_points));
}

// a >= b, treating values equal to within rounding as equal. Slopes of the
// same noiseless ramp fitted over different spans differ only in the last
// few ulps.
constexpr double kTieTolerance = 1e-9;

bool at_least(double a, double b) {
  return a >= b - kTieTolerance * std::max(std::abs(a), std::abs(b));
}

bool same_value(double a, double b) { return at_least(a, b) && at_least(b, a); }

struct Candidate {
  double duration;
  double slope;
  double exit;
};

Candidate summarize(const SegmentAccumulator& acc, double start_x, double end_x, double threshold) {
  const double slope = acc.slope();
  return {end_x - start_x, slope, exit_time(acc.value_at(end_x), slope, threshold)};
}

}  // namespace

TrendModel train(const TimeSeries& series, const PrecogConfig& cfg) {
  cfg.validate();
  require_length(series, cfg, "training");

  const Eigen::VectorXd x = series.seconds_since(series.front_time());
  const Eigen::VectorXd& y = series.values();
  const auto points = detect_change_points(y, cfg.cpd_z_threshold);
  const auto min_points = static_cast<Eigen::Index>(cfg.min_segment_points);

  TrendModel model;
  model.config = cfg;

  for (std::size_t a = 0; a + 1 < points.size(); ++a) {
    const Eigen::Index first = points[a];
    SegmentAccumulator acc;
    Eigen::Index next = first;  // next index to feed into acc
    std::optional<Candidate> best;

    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const Eigen::Index last = points[b];
      for (; next <= last; ++next) acc.add(x(next), y(next));
      if (last - first + 1 < min_points) continue;
      if (acc.r2() < cfg.r2_min) continue;

      const Candidate c = summarize(acc, x(first), x(last), cfg.threshold_u);
      const double best_d = best ? best->duration : 0.0;
      const double best_s = best ? best->slope : 0.0;
      const bool same = best && same_value(c.duration, best_d) && same_value(c.slope, best_s);
      if (at_least(c.duration, best_d) && at_least(c.slope, best_s) && !same) best = c;
    }

    if (!best || best->slope <= 0.0 || best->exit > cfg.critical_seconds()) continue;
    model.trends.push_back({best->duration, best->slope});
    if (at_least(best->duration, model.d_max) && at_least(best->slope, model.s_max)) {
      model.d_max = best->duration;
      model.s_max = best->slope;
    }
  }
  return model;
}

DetectionResult detect(const TimeSeries& series, const TrendModel& model, const PrecogConfig& cfg) {
  cfg.validate();
  if (model.config.threshold_u != cfg.threshold_u ||
      model.config.resample_resolution != cfg.resample_resolution)
    throw Error(Errc::config_mismatch,
                "model was trained with threshold_u=" + std::to_string(model.config.threshold_u) +
                    " resolution=" + std::to_string(model.config.resample_resolution.count()) +
                    "s; detection uses threshold_u=" + std::to_string(cfg.threshold_u) +
                    " resolution=" + std::to_string(cfg.resample_resolution.count()) + "s");
  require_length(series, cfg, "test");

  const Eigen::VectorXd x = series.seconds_since(series.front_time());
  const Eigen::VectorXd& y = series.values();
  const auto points = detect_change_points(y, cfg.cpd_z_threshold);
  const auto min_points = static_cast<Eigen::Index>(cfg.min_segment_points);
  const Eigen::Index last = points.back();

  auto dominates = [](const Candidate& c, double duration, double slope) {
    return at_least(c.slope, slope) && at_least(c.duration, duration);
  };

  SegmentAccumulator acc;
  Eigen::Index next = last;  // next index to feed, walking leftward
  std::optional<AnomalousWindow> marked;

  for (std::size_t i = points.size() - 1; i-- > 0;) {
    const Eigen::Index first = points[i];
    for (; next >= first; --next) acc.add(x(next), y(next));
    if (last - first + 1 < min_points) continue;

    const Candidate c = summarize(acc, x(first), x(last), cfg.threshold_u);
    if (!(c.exit <= cfg.critical_seconds() && acc.r2() >= cfg.r2_min)) continue;

    bool anomalous = dominates(c, model.d_max, model.s_max);
    if (!anomalous) {
      for (const auto& t : model.trends) {
        if (dominates(c, t.duration, t.slope)) {
          anomalous = true;
          break;
        }
      }
    }
    if (anomalous) marked = AnomalousWindow{first, last, c.slope, c.exit};
  }

  DetectionResult result;
  result.mask.assign(static_cast<std::size_t>(series.size()), false);
  if (marked) {
    for (Eigen::Index k = marked->start_index; k <= marked->end_index; ++k)
      result.mask[static_cast<std::size_t>(k)] = true;
    result.windows.push_back(*marked);
    result.is_leaking = true;
  }
  return result;
}

PipelineResult run_pipeline(const TimeSeries& raw, const PrecogConfig& cfg) {
  cfg.validate();
  const TimeSeries series = preprocess(raw, cfg);
  const auto n = series.size();
  const auto split = static_cast<Eigen::Index>(std::floor(cfg.train_fraction * static_cast<double>(n)));
  const auto min_points = static_cast<Eigen::Index>(cfg.min_segment_points);
  if (split < min_points || n - split < min_points)
    throw Error(Errc::series_too_short,
                "preprocessed series has " + std::to_string(n) +
                    " points; both splits need at least " + std::to_string(min_points));

  TimeSeries head = series.slice(0, split - 1);
  TimeSeries tail = series.slice(split, n - 1);
  TrendModel model = train(head, cfg);
  DetectionResult detection = detect(tail, model, cfg);
  return {std::move(model), std::move(detection), std::move(tail)};
}

}  // namespace precog
