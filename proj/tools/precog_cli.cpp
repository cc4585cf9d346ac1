// precog: memory-leak trend mining and detection from the command line.
//
//   precog generate --pattern all --count 30 --seed 42 --out-dir corpus/
//   precog train    --input train.csv --model-out model.json
//   precog detect   --input test.csv --model model.json --out report.csv
//   precog evaluate --corpus-dir corpus/ [--sweep r2_min=0.5,0.75,0.95]
//   precog bench    --sizes 1000,10000,100000 --reps 3
//
// Exit codes: 0 ok / no leak, 2 leak detected, 64 usage, 65 data, 74 I/O,
// 78 configuration.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "precog/bench.hpp"
#include "precog/csv_io.hpp"
#include "precog/detector.hpp"
#include "precog/error.hpp"
#include "precog/eval.hpp"
#include "precog/model.hpp"
#include "precog/preprocess.hpp"
#include "precog/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace precog;

namespace {

constexpr int kExitLeak = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitIo = 74;
constexpr int kExitConfig = 78;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::io_error: return kExitIo;
    case Errc::invalid_config:
    case Errc::config_mismatch: return kExitConfig;
    case Errc::invalid_params:
    case Errc::invalid_sizes: return kExitUsage;
    default: return kExitData;
  }
}

struct ConfigFlags {
  double threshold_u = 100.0;
  double critical_days = 7.0;
  double resample_mins = 5.0;
  double smooth_mins = 60.0;
  double r2_min = 0.75;
  double z_threshold = 3.0;
  double train_fraction = 0.65;
  std::size_t min_segment_points = 5;

  void attach(CLI::App* app) {
    app->add_option("--threshold-u", threshold_u, "Utilization threshold U (percent)")
        ->capture_default_str();
    app->add_option("--critical-days", critical_days, "Critical time C (days)")->capture_default_str();
    app->add_option("--resample-mins", resample_mins, "Resample resolution (minutes)")
        ->capture_default_str();
    app->add_option("--smooth-mins", smooth_mins, "Median smoothing window (minutes)")
        ->capture_default_str();
    app->add_option("--r2-min", r2_min, "Minimum R^2 for a trend")->capture_default_str();
    app->add_option("--z-threshold", z_threshold, "Change point z-score threshold")
        ->capture_default_str();
    app->add_option("--train-fraction", train_fraction, "Training share for evaluate")
        ->capture_default_str();
    app->add_option("--min-segment-points", min_segment_points, "Shortest fitted segment")
        ->capture_default_str();
  }

  PrecogConfig build() const {
    auto secs = [](double v, double unit) { return Seconds{std::llround(v * unit)}; };
    PrecogConfig cfg;
    cfg.threshold_u = threshold_u;
    cfg.critical_time = secs(critical_days, 86400.0);
    cfg.resample_resolution = secs(resample_mins, 60.0);
    cfg.smoothing_window = secs(smooth_mins, 60.0);
    cfg.r2_min = r2_min;
    cfg.cpd_z_threshold = z_threshold;
    cfg.train_fraction = train_fraction;
    cfg.min_segment_points = min_segment_points;
    cfg.validate();
    return cfg;
  }
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error(Errc::io_error, "failed writing " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw Error(Errc::io_error, "cannot create directory " + dir.string());
}

TimeSeries load_series(const fs::path& path) {
  const auto validated = validate_series(read_series_csv(path));
  if (validated.clamped > 0)
    std::cerr << "warning: " << path.string() << ": clamped " << validated.clamped
              << " value(s) above 100 to 100\n";
  return validated.series;
}

json params_json(Pattern pattern, const PatternParams& p) {
  json j{{"span_days", p.span_days}, {"noise_sigma", p.noise_sigma}, {"base", p.base}};
  switch (pattern) {
    case Pattern::linear:
    case Pattern::linear_noise:
      j["slope_per_day"] = p.slope_per_day;
      j["onset_fraction"] = p.onset_fraction;
      break;
    case Pattern::sawtooth:
      j["rise"] = p.rise;
      j["drop_fraction"] = p.drop_fraction;
      j["period_hours"] = p.period_hours;
      j["onset_fraction"] = p.onset_fraction;
      break;
    case Pattern::flat_noise:
      break;
    case Pattern::stable_periodic:
      j["amplitude"] = p.amplitude;
      j["period_hours"] = p.period_hours;
      j["phase"] = p.phase;
      break;
    case Pattern::plateau_ramp_history:
      j["slope_per_day"] = p.slope_per_day;
      j["history_start_days"] = p.history_start_days;
      j["history_duration_days"] = p.history_duration_days;
      j["replay_fraction"] = p.replay_fraction;
      break;
  }
  return j;
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string pattern;
  std::size_t count = 30;
  double days = 5.0;
  std::uint64_t seed = 42;
  std::string out_dir;
};

int cmd_generate(const GenerateArgs& args) {
  std::vector<std::pair<std::string, Sample>> samples;  // (group, sample)
  if (args.pattern == "all") {
    CorpusSpec spec = CorpusSpec::standard(args.count);
    spec.span_days = args.days;
    for (auto& s : generate_corpus(spec, args.seed)) {
      std::string group = s.name.substr(0, s.name.find("_pos_") != std::string::npos
                                               ? s.name.find("_pos_")
                                               : s.name.find("_neg_"));
      samples.emplace_back(std::move(group), std::move(s));
    }
  } else {
    const Pattern pattern = *parse_pattern(args.pattern);
    if (args.count == 0) throw Error(Errc::invalid_params, "--count must be positive");
    std::mt19937_64 master(args.seed);
    for (std::size_t i = 0; i < args.count; ++i) {
      const std::uint64_t param_seed = master();
      const std::uint64_t noise_seed = master();
      Sample s = generate(pattern, draw_params(pattern, param_seed, args.days), noise_seed);
      std::ostringstream name;
      name << args.pattern << '_' << std::setw(3) << std::setfill('0') << i;
      s.name = name.str();
      samples.emplace_back(args.pattern, std::move(s));
    }
  }

  const fs::path dir(args.out_dir);
  ensure_dir(dir);
  json labels = json::object();
  for (const auto& [group, s] : samples) {
    const std::string file = s.name + ".csv";
    write_series_csv(dir / file, s.series);
    labels[file] = {{"label", s.label},
                    {"pattern", std::string(to_string(s.pattern))},
                    {"group", group},
                    {"seed", s.seed},
                    {"params", params_json(s.pattern, s.params)}};
  }
  write_text(dir / "labels.json", labels.dump(2) + "\n");
  std::cout << "wrote " << samples.size() << " series to " << dir.string() << "\n";
  return 0;
}

// ---- train ----------------------------------------------------------------

int cmd_train(const std::string& input, const std::string& model_out, const ConfigFlags& flags) {
  const PrecogConfig cfg = flags.build();
  const TimeSeries series = preprocess(load_series(input), cfg);
  const TrendModel model = train(series, cfg);
  save_model(model, model_out);
  std::cout << "trained on " << series.size() << " points: " << model.trends.size()
            << " trend(s), d_max=" << model.d_max << "s s_max=" << model.s_max << "%/s\n";
  return 0;
}

// ---- detect ---------------------------------------------------------------

int cmd_detect(const std::string& input, const std::string& model_path, const std::string& out,
               std::string summary, const ConfigFlags& flags) {
  const PrecogConfig cfg = flags.build();
  const TrendModel model = load_model(model_path);
  const TimeSeries series = preprocess(load_series(input), cfg);
  const DetectionResult result = detect(series, model, cfg);

  if (summary.empty()) summary = fs::path(out).replace_extension(".json").string();
  write_detection_csv(out, series, result);
  write_text(summary, detection_to_json(series, result));

  std::cout << (result.is_leaking ? "leak detected" : "no leak") << " (" << result.windows.size()
            << " window(s))\n";
  return result.is_leaking ? kExitLeak : 0;
}

// ---- evaluate -------------------------------------------------------------

json scores_json(const Scores& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1},
          {"tp", s.tp},               {"fp", s.fp},         {"tn", s.tn},
          {"fn", s.fn}};
}

std::vector<LabeledSeries> load_corpus(const fs::path& dir) {
  json labels;
  try {
    labels = json::parse(read_text(dir / "labels.json"));
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("labels.json: ") + e.what());
  }
  std::vector<LabeledSeries> corpus;
  for (const auto& [file, meta] : labels.items()) {
    try {
      const std::string group = meta.contains("group") ? meta.at("group").get<std::string>()
                                                       : meta.at("pattern").get<std::string>();
      corpus.push_back({file, group, meta.at("label").get<bool>(), load_series(dir / file)});
    } catch (const json::exception& e) {
      throw Error(Errc::parse_error, "labels.json entry " + file + ": " + e.what());
    }
  }
  if (corpus.empty()) throw Error(Errc::empty_input, "corpus " + dir.string() + " is empty");
  return corpus;
}

int cmd_evaluate(const std::string& corpus_dir, const std::string& sweep_spec, std::string out_dir,
                 unsigned workers, const ConfigFlags& flags) {
  const PrecogConfig cfg = flags.build();
  const auto corpus = load_corpus(corpus_dir);
  if (out_dir.empty()) out_dir = corpus_dir;
  ensure_dir(out_dir);

  if (!sweep_spec.empty()) {
    const auto eq = sweep_spec.find('=');
    const std::string name = sweep_spec.substr(0, eq);
    SweepParameter parameter;
    if (name == "r2_min") parameter = SweepParameter::r2_min;
    else if (name == "critical_time") parameter = SweepParameter::critical_time;
    else throw Error(Errc::invalid_params, "unknown sweep parameter '" + name + "'");
    if (eq == std::string::npos) throw Error(Errc::invalid_params, "--sweep expects param=v1,v2,...");

    std::vector<double> values;
    std::stringstream list(sweep_spec.substr(eq + 1));
    for (std::string item; std::getline(list, item, ',');) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(Errc::invalid_params, "bad sweep value '" + item + "'");
      }
    }

    const auto points = sweep(corpus, parameter, values, cfg, workers);
    std::ostringstream csv;
    csv << "parameter,value,precision,recall,f1\n";
    json rows = json::array();
    for (const auto& p : points) {
      csv << name << ',' << format_double(p.value) << ',' << format_double(p.scores.precision) << ','
          << format_double(p.scores.recall) << ',' << format_double(p.scores.f1) << '\n';
      json row = scores_json(p.scores);
      row["value"] = p.value;
      rows.push_back(std::move(row));
      std::cout << name << "=" << p.value << " f1=" << p.scores.f1 << "\n";
    }
    write_text(fs::path(out_dir) / "sweep.csv", csv.str());
    write_text(fs::path(out_dir) / "sweep.json",
               json{{"parameter", name}, {"points", rows}}.dump(2) + "\n");
    return 0;
  }

  const auto predicted = predict_corpus(corpus, cfg, workers);
  const Scores overall = score_corpus(pair_with_labels(corpus, predicted));

  std::ostringstream csv;
  csv << "file,group,label,predicted\n";
  for (std::size_t i = 0; i < corpus.size(); ++i)
    csv << corpus[i].name << ',' << corpus[i].group << ',' << (corpus[i].label ? 1 : 0) << ','
        << (predicted[i] ? 1 : 0) << '\n';
  write_text(fs::path(out_dir) / "results.csv", csv.str());

  json groups = json::object();
  for (const auto& [group, s] : score_by_group(corpus, predicted)) {
    groups[group] = scores_json(s);
    std::cout << group << ": f1=" << s.f1 << " precision=" << s.precision << " recall=" << s.recall
              << "\n";
  }
  write_text(fs::path(out_dir) / "summary.json",
             json{{"overall", scores_json(overall)}, {"groups", groups}}.dump(2) + "\n");
  std::cout << "overall: f1=" << overall.f1 << " precision=" << overall.precision
            << " recall=" << overall.recall << " (" << overall.total() << " series)\n";
  return 0;
}

// ---- bench ----------------------------------------------------------------

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t reps, std::uint64_t seed,
              const std::string& out, const ConfigFlags& flags) {
  const auto rows = bench_scaling(sizes, reps, seed, flags.build());
  std::ostringstream csv;
  csv << "size,train_ms,predict_ms\n";
  for (const auto& r : rows)
    csv << r.size << ',' << format_double(r.train_ms) << ',' << format_double(r.predict_ms) << '\n';
  if (out.empty()) std::cout << csv.str();
  else write_text(out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Memory-leak trend mining and detection for VM memory utilization"};
  app.require_subcommand(1);

  std::vector<std::string> pattern_names{"all"};
  for (Pattern p : kAllPatterns) pattern_names.emplace_back(to_string(p));

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a seeded synthetic corpus");
  generate_cmd->add_option("--pattern", gen.pattern, "Pattern name or 'all'")
      ->required()
      ->check(CLI::IsMember(pattern_names));
  generate_cmd->add_option("--count", gen.count, "Series per pattern (per class with 'all')")
      ->capture_default_str();
  generate_cmd->add_option("--days", gen.days, "Span of each series in days")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate_cmd->add_option("--out-dir", gen.out_dir, "Output directory")->required();

  ConfigFlags train_flags, detect_flags, eval_flags, bench_flags;
  std::string train_input, model_out;
  auto* train_cmd = app.add_subcommand("train", "Mine historic trends from a CSV series");
  train_cmd->add_option("--input", train_input, "timestamp,value CSV")->required();
  train_cmd->add_option("--model-out", model_out, "Model JSON to write")->required();
  train_flags.attach(train_cmd);

  std::string detect_input, model_in, detect_out, detect_summary;
  auto* detect_cmd = app.add_subcommand("detect", "Flag anomalous windows in a CSV series");
  detect_cmd->add_option("--input", detect_input, "timestamp,value CSV")->required();
  detect_cmd->add_option("--model", model_in, "Model JSON from 'train'")->required();
  detect_cmd->add_option("--out", detect_out, "Per-point CSV report")->required();
  detect_cmd->add_option("--summary", detect_summary, "Window JSON (default: --out with .json)");
  detect_flags.attach(detect_cmd);

  std::string corpus_dir, sweep_spec, eval_out;
  unsigned workers = 0;
  auto* eval_cmd = app.add_subcommand("evaluate", "Score a labeled corpus directory");
  eval_cmd->add_option("--corpus-dir", corpus_dir, "Directory with CSVs and labels.json")->required();
  eval_cmd->add_option("--sweep", sweep_spec, "r2_min=v1,v2,... or critical_time=days1,days2,...");
  eval_cmd->add_option("--out-dir", eval_out, "Where to write reports (default: corpus dir)");
  eval_cmd->add_option("--workers", workers, "Parallel workers (0 = all cores)");
  eval_flags.attach(eval_cmd);

  std::vector<std::size_t> sizes{1000, 10000, 100000};
  std::size_t reps = 3;
  std::uint64_t bench_seed = 42;
  std::string bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Time train and detect against series length");
  bench_cmd->add_option("--sizes", sizes, "Comma-separated point counts")->delimiter(',');
  bench_cmd->add_option("--reps", reps, "Repetitions per size")->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "RNG seed")->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "CSV output (default: stdout)");
  bench_flags.attach(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate_cmd) return cmd_generate(gen);
    if (*train_cmd) return cmd_train(train_input, model_out, train_flags);
    if (*detect_cmd) return cmd_detect(detect_input, model_in, detect_out, detect_summary, detect_flags);
    if (*eval_cmd) return cmd_evaluate(corpus_dir, sweep_spec, eval_out, workers, eval_flags);
    if (*bench_cmd) return cmd_bench(sizes, reps, bench_seed, bench_out, bench_flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
