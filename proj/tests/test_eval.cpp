#include <doctest.h>

#include <algorithm>
#include <random>

#include "precog/error.hpp"
#include "precog/eval.hpp"
#include "precog/synth.hpp"

using namespace precog;

namespace {

std::vector<Prediction> confusion(std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn) {
  std::vector<Prediction> out;
  out.insert(out.end(), tp, {true, true});
  out.insert(out.end(), fp, {true, false});
  out.insert(out.end(), fn, {false, true});
  out.insert(out.end(), tn, {false, false});
  return out;
}

std::vector<LabeledSeries> labeled(const std::vector<Sample>& samples) {
  std::vector<LabeledSeries> out;
  for (const auto& s : samples) out.push_back({s.name, std::string(to_string(s.pattern)), s.label, s.series});
  return out;
}

}  // namespace

TEST_SUITE("eval") {
  TEST_CASE("perfect classifier") {
    const auto s = score_corpus(confusion(5, 0, 0, 5));
    CHECK(s.precision == 1.0);
    CHECK(s.recall == 1.0);
    CHECK(s.f1 == 1.0);
  }

  TEST_CASE("published VM-level arithmetic: TP 15, FP 0, FN 5") {
    const auto s = score_corpus(confusion(15, 0, 5, 40));
    CHECK(s.precision == 1.0);
    CHECK(s.recall == 0.75);
    CHECK(s.f1 == doctest::Approx(0.857).epsilon(5e-4));
    CHECK(s.total() == 60);
  }

  TEST_CASE("all-negative predictions score zero") {
    const auto s = score_corpus(confusion(0, 0, 4, 6));
    CHECK(s.precision == 0.0);
    CHECK(s.recall == 0.0);
    CHECK(s.f1 == 0.0);
  }

  TEST_CASE("empty input") {
    CHECK_THROWS_AS(score_corpus({}), Error);
  }

  TEST_CASE("property: bounded, counts sum, permutation invariant") {
    std::mt19937_64 rng(12);
    std::bernoulli_distribution coin(0.5);
    for (int k = 0; k < 100; ++k) {
      std::vector<Prediction> p(1 + k);
      for (auto& x : p) x = {coin(rng), coin(rng)};
      const auto s = score_corpus(p);
      CHECK(s.total() == p.size());
      for (double m : {s.precision, s.recall, s.f1}) {
        CHECK(m >= 0.0);
        CHECK(m <= 1.0);
      }
      std::shuffle(p.begin(), p.end(), rng);
      const auto t = score_corpus(p);
      CHECK(t.f1 == s.f1);
      CHECK(t.tp == s.tp);
      CHECK(t.fp == s.fp);
    }
  }

  TEST_CASE("parallel and serial prediction agree") {
    const auto corpus = labeled(generate_corpus(CorpusSpec::standard(3), 5));
    CHECK(predict_corpus(corpus, PrecogConfig{}, 1) == predict_corpus(corpus, PrecogConfig{}, 4));
  }

  TEST_CASE("sweep needs two values") {
    const auto corpus = labeled(generate_corpus(CorpusSpec::standard(1), 5));
    const double one[] = {0.75};
    CHECK_THROWS_AS(sweep(corpus, SweepParameter::r2_min, one), Error);
  }

  TEST_CASE("r2_min 0.5 vs 0.75 on noiseless lines and flats gives equal f1") {
    CorpusSpec spec;
    spec.rows = {{Pattern::linear, 10, 10, {Pattern::flat_noise}, 0.0, 0.0}};
    const auto corpus = labeled(generate_corpus(spec, 3));
    const double values[] = {0.5, 0.75};
    const auto points = sweep(corpus, SweepParameter::r2_min, values);
    REQUIRE(points.size() == 2);
    CHECK(points[0].scores.f1 == points[1].scores.f1);
  }

  TEST_CASE("per-group scores partition the corpus") {
    const auto corpus = labeled(generate_corpus(CorpusSpec::standard(2), 8));
    const auto predicted = predict_corpus(corpus, PrecogConfig{});
    std::size_t total = 0;
    for (const auto& [name, s] : score_by_group(corpus, predicted)) total += s.total();
    CHECK(total == corpus.size());
  }
}
