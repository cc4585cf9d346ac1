#include "precog/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "precog/error.hpp"

namespace precog {

namespace {

constexpr double kSecondsPerDay = 86400.0;
constexpr Timestamp kStep = 60;  // one observation per minute

struct SigmaRange {
  double lo;
  double hi;
};

SigmaRange default_sigma(Pattern p) {
  switch (p) {
    case Pattern::linear: return {0.0, 0.0};
    case Pattern::linear_noise: return {0.5, 3.0};
    case Pattern::sawtooth: return {0.0, 1.5};
    case Pattern::flat_noise: return {0.5, 3.0};
    case Pattern::stable_periodic: return {0.5, 3.0};
    case Pattern::plateau_ramp_history: return {0.0, 1.5};
  }
  return {0.0, 0.0};
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::invalid_params, what);
}

void check_params(Pattern pattern, const PatternParams& p) {
  require(p.span_days > 0.0 && std::isfinite(p.span_days), "span_days must be positive");
  require(p.noise_sigma >= 0.0 && std::isfinite(p.noise_sigma), "noise_sigma must be >= 0");
  require(p.base >= 0.0 && p.base < 100.0, "base level must lie in [0, 100)");
  switch (pattern) {
    case Pattern::linear:
      require(p.noise_sigma == 0.0, "linear is noiseless; use linear_noise");
      [[fallthrough]];
    case Pattern::linear_noise:
      require(pattern == Pattern::linear || p.noise_sigma > 0.0, "linear_noise needs noise_sigma > 0");
      require(p.slope_per_day > 0.0, "leak slope must be positive");
      require(p.onset_fraction >= 0.0 && p.onset_fraction < 1.0, "onset_fraction must lie in [0, 1)");
      break;
    case Pattern::sawtooth:
      require(p.rise > 0.0, "sawtooth rise must be positive");
      require(p.drop_fraction > 0.0 && p.drop_fraction < 1.0, "drop_fraction must lie in (0, 1)");
      require(p.period_hours > 0.0, "period_hours must be positive");
      require(p.onset_fraction >= 0.0 && p.onset_fraction < 1.0, "onset_fraction must lie in [0, 1)");
      break;
    case Pattern::flat_noise:
      break;
    case Pattern::stable_periodic:
      require(p.amplitude >= 0.0, "amplitude must be >= 0");
      require(p.period_hours > 0.0, "period_hours must be positive");
      break;
    case Pattern::plateau_ramp_history:
      require(p.slope_per_day > 0.0, "ramp slope must be positive");
      require(p.history_start_days >= 0.0 && p.history_duration_days > 0.0,
              "history ramp must have a start >= 0 and positive duration");
      require(p.replay_fraction > 0.0 && p.replay_fraction < 1.0, "replay_fraction must lie in (0, 1)");
      require(p.history_start_days + p.history_duration_days <=
                  p.span_days - p.replay_fraction * p.history_duration_days,
              "history ramp must end before the replay starts");
      break;
  }
}

// Noiseless signal at `t` seconds after the series start.
double clean_value(Pattern pattern, const PatternParams& p, double t) {
  const double span = p.span_days * kSecondsPerDay;
  switch (pattern) {
    case Pattern::linear:
    case Pattern::linear_noise: {
      const double onset = p.onset_fraction * span;
      return t < onset ? p.base : p.base + p.slope_per_day * (t - onset) / kSecondsPerDay;
    }
    case Pattern::sawtooth: {
      const double onset = p.onset_fraction * span;
      if (t < onset) return p.base;
      const double period = p.period_hours * 3600.0;
      const double teeth = (t - onset) / period;
      const double k = std::floor(teeth);
      return p.base + k * p.rise * (1.0 - p.drop_fraction) + (teeth - k) * p.rise;
    }
    case Pattern::flat_noise:
      return p.base;
    case Pattern::stable_periodic:
      return p.base + p.amplitude * std::sin(2.0 * std::numbers::pi * t / (p.period_hours * 3600.0) +
                                             p.phase);
    case Pattern::plateau_ramp_history: {
      const double slope = p.slope_per_day / kSecondsPerDay;
      const double h0 = p.history_start_days * kSecondsPerDay;
      const double h1 = h0 + p.history_duration_days * kSecondsPerDay;
      const double replay = span - p.replay_fraction * p.history_duration_days * kSecondsPerDay;
      if (t >= h0 && t < h1) return p.base + slope * (t - h0);
      if (t >= replay) return p.base + slope * (t - replay);
      return p.base;
    }
  }
  return p.base;
}

double drift(Pattern pattern, const PatternParams& p) {
  switch (pattern) {
    case Pattern::linear:
    case Pattern::linear_noise: return p.slope_per_day;
    case Pattern::sawtooth: return p.rise * (1.0 - p.drop_fraction) / (p.period_hours / 24.0);
    default: return 0.0;
  }
}

double clamp_pct(double v) { return std::clamp(v, 0.0, 100.0); }

}  // namespace

std::string_view to_string(Pattern p) noexcept {
  switch (p) {
    case Pattern::linear: return "linear";
    case Pattern::linear_noise: return "linear_noise";
    case Pattern::sawtooth: return "sawtooth";
    case Pattern::flat_noise: return "flat_noise";
    case Pattern::stable_periodic: return "stable_periodic";
    case Pattern::plateau_ramp_history: return "plateau_ramp_history";
  }
  return "unknown";
}

std::optional<Pattern> parse_pattern(std::string_view name) {
  for (Pattern p : kAllPatterns)
    if (to_string(p) == name) return p;
  return std::nullopt;
}

bool is_leak(Pattern p) noexcept {
  return p == Pattern::linear || p == Pattern::linear_noise || p == Pattern::sawtooth;
}

Sample generate(Pattern pattern, const PatternParams& params, std::uint64_t seed) {
  check_params(pattern, params);

  const auto n = static_cast<Eigen::Index>(std::llround(params.span_days * 1440.0));
  require(n >= 1, "span shorter than one observation");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);

  TimestampVector t(n);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double offset = static_cast<double>(i * kStep);
    t(i) = params.start_time + i * kStep;
    double value = clean_value(pattern, params, offset);
    if (params.noise_sigma > 0.0) value += params.noise_sigma * noise(rng);
    v(i) = clamp_pct(value);
  }
  const double end_clean = clamp_pct(clean_value(pattern, params, static_cast<double>((n - 1) * kStep)));

  return Sample{std::string(to_string(pattern)),
                pattern,
                is_leak(pattern),
                params,
                seed,
                TimeSeries(std::move(t), std::move(v)),
                drift(pattern, params),
                end_clean};
}

PatternParams draw_params(Pattern pattern, std::uint64_t seed, double span_days,
                          std::optional<double> sigma) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };

  PatternParams p;
  p.span_days = span_days;
  if (sigma) {
    p.noise_sigma = *sigma;
  } else {
    const auto range = default_sigma(pattern);
    p.noise_sigma = range.hi > range.lo ? uniform(range.lo, range.hi) : range.lo;
  }

  switch (pattern) {
    case Pattern::linear:
    case Pattern::linear_noise: {
      // Normal usage, then a leak that reaches 100% 0.5-4.5 days after the
      // series ends.
      p.base = uniform(10.0, 40.0);
      p.onset_fraction = uniform(0.45, 0.8);
      const double to_full = uniform(0.5, 4.5);
      p.slope_per_day = (100.0 - p.base) / ((1.0 - p.onset_fraction) * span_days + to_full);
      break;
    }
    case Pattern::sawtooth: {
      p.base = uniform(10.0, 40.0);
      p.onset_fraction = uniform(0.55, 0.85);
      const double to_full = uniform(0.5, 4.5);
      p.period_hours = uniform(3.0, 8.0);
      p.drop_fraction = uniform(0.3, 0.7);
      const double floor_drift =
          (100.0 - p.base) / ((1.0 - p.onset_fraction) * span_days + to_full);
      p.rise = floor_drift * (p.period_hours / 24.0) / (1.0 - p.drop_fraction);
      break;
    }
    case Pattern::flat_noise:
      p.base = uniform(10.0, 70.0);
      break;
    case Pattern::stable_periodic:
      p.base = uniform(30.0, 50.0);
      p.amplitude = uniform(5.0, 20.0);
      p.period_hours = uniform(12.0, 36.0);
      p.phase = uniform(0.0, 2.0 * std::numbers::pi);
      break;
    case Pattern::plateau_ramp_history:
      p.base = uniform(20.0, 40.0);
      p.history_duration_days = uniform(0.75, 1.5);
      p.slope_per_day = uniform(20.0, 40.0);
      p.history_start_days = uniform(0.3, 1.2) * span_days / 5.0;
      p.replay_fraction = uniform(0.3, 0.7);
      break;
  }
  return p;
}

CorpusSpec CorpusSpec::standard(std::size_t per_class) {
  CorpusSpec spec;
  spec.rows = {
      {Pattern::linear, per_class, per_class,
       {Pattern::flat_noise, Pattern::plateau_ramp_history}, 0.0, 0.0},
      {Pattern::linear_noise, per_class, per_class,
       {Pattern::flat_noise, Pattern::stable_periodic}, 0.5, 3.0},
      {Pattern::sawtooth, per_class, per_class,
       {Pattern::stable_periodic, Pattern::plateau_ramp_history}, 0.0, 1.5},
  };
  return spec;
}

std::vector<Sample> generate_corpus(const CorpusSpec& spec, std::uint64_t seed) {
  std::size_t total = 0;
  for (const auto& row : spec.rows) {
    if (row.negatives > 0 && row.negative_mix.empty())
      throw Error(Errc::invalid_params, "corpus row has negatives but no negative patterns");
    if (!is_leak(row.positive))
      throw Error(Errc::invalid_params, "corpus row positive pattern must be a leak pattern");
    for (Pattern p : row.negative_mix)
      if (is_leak(p)) throw Error(Errc::invalid_params, "negative mix contains a leak pattern");
    total += row.positives + row.negatives;
  }
  if (total == 0) throw Error(Errc::invalid_params, "corpus spec requests no series");

  std::mt19937_64 master(seed);
  std::vector<Sample> corpus;
  corpus.reserve(total);

  auto emit = [&](const CorpusRow& row, Pattern pattern, const char* tag, std::size_t index) {
    const std::uint64_t param_seed = master();
    const std::uint64_t noise_seed = master();
    double sigma = row.sigma_min;
    if (row.sigma_max > row.sigma_min)
      sigma = std::uniform_real_distribution<double>(row.sigma_min, row.sigma_max)(master);
    if (pattern == Pattern::linear) sigma = 0.0;
    Sample s = generate(pattern, draw_params(pattern, param_seed, spec.span_days, sigma), noise_seed);
    std::array<char, 16> idx{};
    std::snprintf(idx.data(), idx.size(), "%03zu", index);
    s.name = std::string(to_string(row.positive)) + "_" + tag + "_" + idx.data();
    corpus.push_back(std::move(s));
  };

  for (const auto& row : spec.rows) {
    for (std::size_t i = 0; i < row.positives; ++i) emit(row, row.positive, "pos", i);
    for (std::size_t i = 0; i < row.negatives; ++i)
      emit(row, row.negative_mix[i % row.negative_mix.size()], "neg", i);
  }
  return corpus;
}

}  // namespace precog
