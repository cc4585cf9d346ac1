#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "precog/config.hpp"
#include "precog/time_series.hpp"

namespace precog {

struct BenchRow {
  std::size_t size;  // preprocessed points
  double train_ms;
  double predict_ms;
};

/// Smallest size accepted by bench_scaling.
inline constexpr std::size_t kMinBenchSize = 16;

/// A preprocessed-resolution series of exactly `size` points: a seeded
/// sawtooth leak day tiled end to end with fresh Gaussian noise per tile.
TimeSeries tiled_series(std::size_t size, std::uint64_t seed, const PrecogConfig& cfg = {});

/// Times train and detect on tiled series of each size. Each timing is the
/// median over `repetitions` runs on a monotonic clock. Sizes must be
/// ascending and at least kMinBenchSize, else Error(invalid_sizes).
std::vector<BenchRow> bench_scaling(std::span<const std::size_t> sizes, std::size_t repetitions,
                                    std::uint64_t seed, const PrecogConfig& cfg = {});

}  // namespace precog
