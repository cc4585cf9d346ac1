#include "precog/model.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "precog/error.hpp"

namespace precog {

using nlohmann::json;

std::vector<AnomalousWindow> mask_runs(const std::vector<bool>& mask) {
  std::vector<AnomalousWindow> runs;
  const auto n = static_cast<Eigen::Index>(mask.size());
  Eigen::Index i = 0;
  while (i < n) {
    if (!mask[static_cast<std::size_t>(i)]) {
      ++i;
      continue;
    }
    Eigen::Index j = i;
    while (j + 1 < n && mask[static_cast<std::size_t>(j + 1)]) ++j;
    runs.push_back({i, j, 0.0, kInfinity});
    i = j + 1;
  }
  return runs;
}

namespace {

json config_to_json(const PrecogConfig& c) {
  return json{
      {"threshold_u", c.threshold_u},
      {"critical_time_s", c.critical_time.count()},
      {"resample_resolution_s", c.resample_resolution.count()},
      {"smoothing_window_s", c.smoothing_window.count()},
      {"r2_min", c.r2_min},
      {"cpd_z_threshold", c.cpd_z_threshold},
      {"min_segment_points", c.min_segment_points},
      {"train_fraction", c.train_fraction},
  };
}

PrecogConfig config_from_json(const json& j) {
  PrecogConfig c;
  c.threshold_u = j.at("threshold_u").get<double>();
  c.critical_time = Seconds{j.at("critical_time_s").get<std::int64_t>()};
  c.resample_resolution = Seconds{j.at("resample_resolution_s").get<std::int64_t>()};
  c.smoothing_window = Seconds{j.at("smoothing_window_s").get<std::int64_t>()};
  c.r2_min = j.at("r2_min").get<double>();
  c.cpd_z_threshold = j.at("cpd_z_threshold").get<double>();
  c.min_segment_points = j.at("min_segment_points").get<std::size_t>();
  c.train_fraction = j.at("train_fraction").get<double>();
  return c;
}

}  // namespace

std::string model_to_json(const TrendModel& model) {
  json trends = json::array();
  for (const auto& t : model.trends)
    trends.push_back({{"duration_s", t.duration}, {"slope_pct_per_s", t.slope}});
  json j{
      {"schema_version", model.schema_version},
      {"config", config_to_json(model.config)},
      {"trends", std::move(trends)},
      {"d_max_s", model.d_max},
      {"s_max_pct_per_s", model.s_max},
  };
  return j.dump(2) + "\n";
}

TrendModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("model file: ") + e.what());
  }
  try {
    const int version = j.at("schema_version").get<int>();
    if (version != kModelSchemaVersion)
      throw Error(Errc::schema_mismatch,
                  "model schema_version " + std::to_string(version) + ", expected " +
                      std::to_string(kModelSchemaVersion),
                  static_cast<std::size_t>(version < 0 ? 0 : version));
    TrendModel m;
    m.schema_version = version;
    m.config = config_from_json(j.at("config"));
    for (const auto& t : j.at("trends"))
      m.trends.push_back({t.at("duration_s").get<double>(), t.at("slope_pct_per_s").get<double>()});
    m.d_max = j.at("d_max_s").get<double>();
    m.s_max = j.at("s_max_pct_per_s").get<double>();
    return m;
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("model file: ") + e.what());
  }
}

void save_model(const TrendModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  out << model_to_json(model);
  if (!out) throw Error(Errc::io_error, "failed writing " + path.string());
}

TrendModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json(buf.str());
}

}  // namespace precog
