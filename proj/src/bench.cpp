#include "precog/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "precog/detector.hpp"
#include "precog/error.hpp"
#include "precog/preprocess.hpp"
#include "precog/synth.hpp"

namespace precog {

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

template <typename F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  // steady_clock can tick coarser than a tiny run; never report zero
  return std::max(elapsed.count(), 1e-6);
}

}  // namespace

TimeSeries tiled_series(std::size_t size, std::uint64_t seed, const PrecogConfig& cfg) {
  PatternParams params;
  params.base = 20.0;
  params.rise = 10.0;
  params.drop_fraction = 0.6;
  params.period_hours = 12.0;
  const TimeSeries base = preprocess(generate(Pattern::sawtooth, params, seed).series, cfg);

  const Timestamp step = cfg.resample_resolution.count();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> noise(0.0, 0.5);

  const auto n = static_cast<Eigen::Index>(size);
  TimestampVector t(n);
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    t(i) = base.front_time() + i * step;
    v(i) = std::clamp(base.values()(i % base.size()) + noise(rng), 0.0, 100.0);
  }
  return TimeSeries(std::move(t), std::move(v));
}

std::vector<BenchRow> bench_scaling(std::span<const std::size_t> sizes, std::size_t repetitions,
                                    std::uint64_t seed, const PrecogConfig& cfg) {
  if (sizes.empty()) throw Error(Errc::invalid_sizes, "no sizes given");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < kMinBenchSize)
      throw Error(Errc::invalid_sizes, "size " + std::to_string(sizes[i]) + " below minimum " +
                                           std::to_string(kMinBenchSize));
    if (i > 0 && sizes[i] <= sizes[i - 1])
      throw Error(Errc::invalid_sizes, "sizes must be strictly ascending");
  }
  if (repetitions == 0) throw Error(Errc::invalid_sizes, "repetitions must be positive");

  std::vector<BenchRow> rows;
  for (std::size_t size : sizes) {
    const TimeSeries series = tiled_series(size, seed, cfg);
    std::vector<double> train_times, predict_times;
    TrendModel model;
    for (std::size_t r = 0; r < repetitions; ++r) {
      train_times.push_back(time_ms([&] { model = train(series, cfg); }));
      predict_times.push_back(time_ms([&] { (void)detect(series, model, cfg); }));
    }
    rows.push_back({size, median(train_times), median(predict_times)});
  }
  return rows;
}

}  // namespace precog
