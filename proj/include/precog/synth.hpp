#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "precog/time_series.hpp"

namespace precog {

enum class Pattern {
  linear,               // leak: flat, then a noiseless ramp
  linear_noise,         // leak: same shape plus Gaussian noise
  sawtooth,             // leak: rise/partial-drop teeth on a rising floor
  flat_noise,           // normal: constant level plus noise
  stable_periodic,      // normal: sinusoidal load cycle
  plateau_ramp_history  // normal: a ramp seen in history replayed for less time
};

inline constexpr Pattern kAllPatterns[] = {
    Pattern::linear,      Pattern::linear_noise,    Pattern::sawtooth,
    Pattern::flat_noise,  Pattern::stable_periodic, Pattern::plateau_ramp_history};

std::string_view to_string(Pattern p) noexcept;
std::optional<Pattern> parse_pattern(std::string_view name);
bool is_leak(Pattern p) noexcept;

/// Generator parameters. Not every field applies to every pattern:
///   linear, linear_noise: base, slope_per_day, onset_fraction
///   sawtooth:             base, rise, drop_fraction, period_hours, onset_fraction
///   flat_noise:           base
///   stable_periodic:      base, amplitude, period_hours, phase
///   plateau_ramp_history: base, slope_per_day, history_start_days,
///                         history_duration_days, replay_fraction
struct PatternParams {
  double span_days = 5.0;
  Timestamp start_time = 1'700'000'000;
  double noise_sigma = 0.0;
  double base = 30.0;
  double slope_per_day = 0.0;
  double onset_fraction = 0.0;
  double rise = 0.0;
  double drop_fraction = 0.5;
  double period_hours = 24.0;
  double amplitude = 0.0;
  double phase = 0.0;
  double history_start_days = 0.0;
  double history_duration_days = 0.0;
  double replay_fraction = 0.5;

  friend bool operator==(const PatternParams&, const PatternParams&) = default;
};

struct Sample {
  std::string name;
  Pattern pattern;
  bool label;  // true = leaking
  PatternParams params;
  std::uint64_t seed;
  TimeSeries series;
  double drift_per_day;    // long-run growth of the noiseless signal
  double clean_end_value;  // noiseless value at the last timestamp
};

/// One observation per minute over params.span_days. Same (pattern,
/// params, seed) gives a bit-identical series. Values are clamped to
/// [0, 100]. Throws Error(invalid_params).
Sample generate(Pattern pattern, const PatternParams& params, std::uint64_t seed);

/// A seeded random draw of parameters for `pattern` from the corpus ranges.
/// `sigma` overrides the pattern's default noise range when set.
PatternParams draw_params(Pattern pattern, std::uint64_t seed, double span_days = 5.0,
                          std::optional<double> sigma = std::nullopt);

/// One table row: positives of one leak pattern plus negatives cycled from
/// `negative_mix`, all with noise drawn from [sigma_min, sigma_max].
struct CorpusRow {
  Pattern positive;
  std::size_t positives = 30;
  std::size_t negatives = 30;
  std::vector<Pattern> negative_mix;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

struct CorpusSpec {
  std::vector<CorpusRow> rows;
  double span_days = 5.0;

  /// Three rows (linear, linear_noise, sawtooth), `per_class` positives and
  /// negatives each.
  static CorpusSpec standard(std::size_t per_class = 30);
};

std::vector<Sample> generate_corpus(const CorpusSpec& spec, std::uint64_t seed);

}  // namespace precog
