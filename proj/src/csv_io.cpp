#include "precog/csv_io.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>

#include "precog/error.hpp"

namespace precog {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

bool looks_like_epoch(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what, line);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

std::optional<Timestamp> parse_rfc3339(std::string_view s) {
  // YYYY-MM-DDTHH:MM:SS
  if (s.size() < 20) return std::nullopt;
  auto field = [&](std::size_t pos, std::size_t len) { return parse_number<int>(s.substr(pos, len)); };
  const auto year = field(0, 4), month = field(5, 2), day = field(8, 2);
  const auto hour = field(11, 2), minute = field(14, 2), second = field(17, 2);
  if (!year || !month || !day || !hour || !minute || !second) return std::nullopt;
  if (s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != 't' && s[10] != ' ') || s[13] != ':' ||
      s[16] != ':')
    return std::nullopt;
  if (*hour > 23 || *minute > 59 || *second > 60) return std::nullopt;

  const std::chrono::year_month_day ymd{std::chrono::year{*year},
                                        std::chrono::month{static_cast<unsigned>(*month)},
                                        std::chrono::day{static_cast<unsigned>(*day)}};
  if (!ymd.ok()) return std::nullopt;

  std::size_t pos = 19;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    const std::size_t digits = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == digits) return std::nullopt;
  }
  if (pos >= s.size()) return std::nullopt;

  std::int64_t offset = 0;
  if (s[pos] == 'Z' || s[pos] == 'z') {
    ++pos;
  } else if (s[pos] == '+' || s[pos] == '-') {
    if (s.size() - pos != 6 || s[pos + 3] != ':') return std::nullopt;
    const auto oh = field(pos + 1, 2), om = field(pos + 4, 2);
    if (!oh || !om || *oh > 23 || *om > 59) return std::nullopt;
    offset = (s[pos] == '+' ? 1 : -1) * (*oh * 3600 + *om * 60);
    pos += 6;
  } else {
    return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;

  const auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
  return static_cast<Timestamp>(days) * 86400 + *hour * 3600 + *minute * 60 + *second - offset;
}

RawSeries parse_series_csv(std::istream& in) {
  RawSeries raw;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  std::optional<bool> epoch;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    if (!header_seen) {
      const auto comma = row.find(',');
      if (comma == std::string_view::npos || trim(row.substr(0, comma)) != "timestamp" ||
          trim(row.substr(comma + 1)) != "value")
        parse_fail(lineno, "expected header 'timestamp,value'");
      header_seen = true;
      continue;
    }
    const auto comma = row.find(',');
    if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos)
      parse_fail(lineno, "expected exactly two fields");
    const std::string_view ts_text = trim(row.substr(0, comma));
    const std::string_view value_text = trim(row.substr(comma + 1));

    const bool is_epoch = looks_like_epoch(ts_text);
    if (!epoch) epoch = is_epoch;
    if (*epoch != is_epoch) parse_fail(lineno, "timestamp format differs from the first row");

    std::optional<Timestamp> ts =
        is_epoch ? parse_number<Timestamp>(ts_text.front() == '+' ? ts_text.substr(1) : ts_text)
                 : parse_rfc3339(ts_text);
    if (!ts) parse_fail(lineno, "bad timestamp '" + std::string(ts_text) + "'");
    const auto value = parse_number<double>(value_text);
    if (!value) parse_fail(lineno, "bad value '" + std::string(value_text) + "'");

    raw.timestamps.push_back(*ts);
    raw.values.push_back(*value);
  }
  if (!header_seen) parse_fail(lineno == 0 ? 1 : lineno, "missing header 'timestamp,value'");
  return raw;
}

RawSeries read_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  return parse_series_csv(in);
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return ec == std::errc{} ? std::string(buf.data(), ptr) : std::string("nan");
}

void write_series_csv(const std::filesystem::path& path, const TimeSeries& ts) {
  auto out = open_out(path);
  out << "timestamp,value\n";
  for (Eigen::Index i = 0; i < ts.size(); ++i)
    out << ts.timestamps()(i) << ',' << format_double(ts.values()(i)) << '\n';
  if (!out) throw Error(Errc::io_error, "failed writing " + path.string());
}

void write_detection_csv(const std::filesystem::path& path, const TimeSeries& ts,
                         const DetectionResult& result) {
  if (result.mask.size() != static_cast<std::size_t>(ts.size()))
    throw Error(Errc::invalid_params, "mask length differs from series length");
  auto out = open_out(path);
  out << "timestamp,value,anomalous\n";
  for (Eigen::Index i = 0; i < ts.size(); ++i)
    out << ts.timestamps()(i) << ',' << format_double(ts.values()(i)) << ','
        << (result.mask[static_cast<std::size_t>(i)] ? 1 : 0) << '\n';
  if (!out) throw Error(Errc::io_error, "failed writing " + path.string());
}

std::string detection_to_json(const TimeSeries& ts, const DetectionResult& result) {
  nlohmann::json windows = nlohmann::json::array();
  for (const auto& w : result.windows) {
    windows.push_back({
        {"start_index", w.start_index},
        {"end_index", w.end_index},
        {"start_timestamp", ts.timestamps()(w.start_index)},
        {"end_timestamp", ts.timestamps()(w.end_index)},
        {"slope_pct_per_s", w.slope},
        {"exit_time_s", w.exit_time},
    });
  }
  const nlohmann::json j{
      {"is_leaking", result.is_leaking},
      {"points", result.mask.size()},
      {"windows", std::move(windows)},
  };
  return j.dump(2) + "\n";
}

}  // namespace precog
