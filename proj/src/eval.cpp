#include "precog/eval.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "precog/detector.hpp"
#include "precog/error.hpp"

namespace precog {

Scores score_corpus(std::span<const Prediction> results) {
  if (results.empty()) throw Error(Errc::empty_input, "no predictions to score");
  Scores s;
  for (const auto& r : results) {
    if (r.predicted && r.label) ++s.tp;
    else if (r.predicted) ++s.fp;
    else if (r.label) ++s.fn;
    else ++s.tn;
  }
  const auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  s.precision = ratio(s.tp, s.tp + s.fp);
  s.recall = ratio(s.tp, s.tp + s.fn);
  s.f1 = (s.precision + s.recall) > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

std::vector<bool> predict_corpus(std::span<const LabeledSeries> corpus, const PrecogConfig& cfg,
                                 unsigned workers) {
  cfg.validate();
  std::vector<char> flags(corpus.size(), 0);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(corpus.size(), 1)));

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i = cursor++; i < corpus.size(); i = cursor++) {
      try {
        flags[i] = run_pipeline(corpus[i].series, cfg).detection.is_leaking ? 1 : 0;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return {flags.begin(), flags.end()};
}

std::vector<Prediction> pair_with_labels(std::span<const LabeledSeries> corpus,
                                         const std::vector<bool>& predicted) {
  if (predicted.size() != corpus.size())
    throw Error(Errc::invalid_params, "prediction count differs from corpus size");
  std::vector<Prediction> out;
  out.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) out.push_back({predicted[i], corpus[i].label});
  return out;
}

std::map<std::string, Scores> score_by_group(std::span<const LabeledSeries> corpus,
                                             const std::vector<bool>& predicted) {
  std::map<std::string, std::vector<Prediction>> groups;
  const auto pairs = pair_with_labels(corpus, predicted);
  for (std::size_t i = 0; i < corpus.size(); ++i) groups[corpus[i].group].push_back(pairs[i]);
  std::map<std::string, Scores> out;
  for (const auto& [name, preds] : groups) out.emplace(name, score_corpus(preds));
  return out;
}

std::vector<SweepPoint> sweep(std::span<const LabeledSeries> corpus, SweepParameter parameter,
                              std::span<const double> values, const PrecogConfig& base,
                              unsigned workers) {
  if (values.size() < 2) throw Error(Errc::invalid_params, "a sweep needs at least two values");
  std::vector<SweepPoint> points;
  points.reserve(values.size());
  for (double v : values) {
    PrecogConfig cfg = base;
    switch (parameter) {
      case SweepParameter::r2_min:
        cfg.r2_min = v;
        break;
      case SweepParameter::critical_time:
        cfg.critical_time = Seconds{static_cast<std::int64_t>(std::llround(v * 86400.0))};
        break;
    }
    const auto predicted = predict_corpus(corpus, cfg, workers);
    points.push_back({v, score_corpus(pair_with_labels(corpus, predicted))});
  }
  return points;
}

}  // namespace precog
