#include "rsnsim/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rsnsim {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

double to_double(std::string_view v, int line, const std::string& key) {
  double out = 0;
  auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc{} || r.ptr != v.data() + v.size())
    fail(line, "invalid number for '" + key + "'");
  return out;
}

int64_t to_i64(std::string_view v, int line, const std::string& key) {
  int64_t out = 0;
  auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc{} || r.ptr != v.data() + v.size())
    fail(line, "invalid integer for '" + key + "'");
  return out;
}

uint64_t to_u64(std::string_view v, int line, const std::string& key) {
  uint64_t out = 0;
  auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc{} || r.ptr != v.data() + v.size())
    fail(line, "invalid unsigned integer for '" + key + "'");
  return out;
}

int to_int(std::string_view v, int line, const std::string& key) {
  return static_cast<int>(to_i64(v, line, key));
}

bool to_bool(std::string_view v, int line, const std::string& key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  fail(line, "invalid boolean for '" + key + "' (use true/false)");
}

std::string num(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

AvtParams ScenarioConfig::avt_params() const {
  AvtParams p;
  p.v_min = avt_v_min;
  p.v_max = avt_v_max;
  p.accel = avt_accel;
  p.decel = avt_decel;
  p.delta_min = avt_delta_min;
  p.delta_max = avt_delta_max;
  return p;
}

bool ScenarioConfig::partition_enabled() const {
  return partition_end_s > partition_start_s && (partition_pinned > 0 || partition_courier);
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  bool delta_min_set = false, delta_max_set = false, v0_set = false;

  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "malformed section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "scenario" && section != "field" && section != "mobility" &&
          section != "radio" && section != "clocks" && section != "protocol" &&
          section != "avt" && section != "partition")
        fail(line_no, "unknown section '" + section + "'");
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) fail(line_no, "expected 'key = value'");
    if (section.empty()) fail(line_no, "key '" + key + "' outside any section");

    if (section == "scenario") {
      if (key == "protocol") {
        auto kind = protocol_from_name(value);
        if (!kind) fail(line_no, "unknown protocol '" + std::string(value) + "'");
        cfg.protocol = *kind;
      } else if (key == "seed") {
        cfg.seed = to_u64(value, line_no, key);
      } else if (key == "duration_s") {
        cfg.duration_s = to_double(value, line_no, key);
      } else if (key == "node_count") {
        cfg.node_count = to_int(value, line_no, key);
      } else if (key == "metric_interval_s") {
        cfg.metric_interval_s = to_double(value, line_no, key);
      } else {
        fail(line_no, "unknown key '" + key + "' in [scenario]");
      }
    } else if (section == "field") {
      if (key == "width_m") cfg.field.width = to_double(value, line_no, key);
      else if (key == "height_m") cfg.field.height = to_double(value, line_no, key);
      else fail(line_no, "unknown key '" + key + "' in [field]");
    } else if (section == "mobility") {
      if (key == "model") {
        if (value == "random_waypoint") cfg.mobility.model = MobilityModel::RandomWaypoint;
        else if (value == "static") cfg.mobility.model = MobilityModel::Static;
        else fail(line_no, "unknown mobility model '" + std::string(value) + "'");
      } else if (key == "speed_min_mps") cfg.mobility.speed_min = to_double(value, line_no, key);
      else if (key == "speed_max_mps") cfg.mobility.speed_max = to_double(value, line_no, key);
      else if (key == "pause_min_s") cfg.mobility.pause_min = to_double(value, line_no, key);
      else if (key == "pause_max_s") cfg.mobility.pause_max = to_double(value, line_no, key);
      else fail(line_no, "unknown key '" + key + "' in [mobility]");
    } else if (section == "radio") {
      if (key == "range_m") cfg.radio.range_m = to_double(value, line_no, key);
      else if (key == "loss_prob") cfg.radio.loss_prob = to_double(value, line_no, key);
      else if (key == "fade_width_m") cfg.radio.fade_width_m = to_double(value, line_no, key);
      else if (key == "propagation") {
        if (value == "unit_disk") cfg.radio.model = PropagationModel::UnitDisk;
        else if (value == "gaussian_edge") cfg.radio.model = PropagationModel::GaussianEdge;
        else fail(line_no, "unknown propagation model '" + std::string(value) + "'");
      } else if (key == "frame_ms") cfg.radio.frame_s = to_double(value, line_no, key) / 1000.0;
      else if (key == "backoff_min_ms") cfg.radio.backoff_min_s = to_double(value, line_no, key) / 1000.0;
      else if (key == "backoff_max_ms") cfg.radio.backoff_max_s = to_double(value, line_no, key) / 1000.0;
      else if (key == "max_backoffs") cfg.radio.max_backoffs = to_int(value, line_no, key);
      else fail(line_no, "unknown key '" + key + "' in [radio]");
    } else if (section == "clocks") {
      if (key == "drift_ppm") cfg.drift_ppm = to_double(value, line_no, key);
      else if (key == "start_offset_max_ticks") cfg.start_offset_max_ticks = to_i64(value, line_no, key);
      else fail(line_no, "unknown key '" + key + "' in [clocks]");
    } else if (section == "protocol") {
      if (key == "beacon_period_s") cfg.beacon_period_s = to_double(value, line_no, key);
      else if (key == "timer_jitter_ms") cfg.timer_jitter_ms = to_double(value, line_no, key);
      else if (key == "timestamp_sigma_us") cfg.timestamp_sigma_us = to_double(value, line_no, key);
      else if (key == "good_band_us") cfg.good_band_us = to_double(value, line_no, key);
      else if (key == "regression_entries") cfg.regression_entries = to_int(value, line_no, key);
      else if (key == "gtsp_max_neighbors") cfg.gtsp_max_neighbors = to_int(value, line_no, key);
      else if (key == "gtsp_stale_periods") cfg.gtsp_stale_periods = to_int(value, line_no, key);
      else fail(line_no, "unknown key '" + key + "' in [protocol]");
    } else if (section == "avt") {
      if (key == "v_min") cfg.avt_v_min = to_double(value, line_no, key);
      else if (key == "v_max") cfg.avt_v_max = to_double(value, line_no, key);
      else if (key == "accel") cfg.avt_accel = to_double(value, line_no, key);
      else if (key == "decel") cfg.avt_decel = to_double(value, line_no, key);
      else if (key == "delta_min") { cfg.avt_delta_min = to_double(value, line_no, key); delta_min_set = true; }
      else if (key == "delta_max") { cfg.avt_delta_max = to_double(value, line_no, key); delta_max_set = true; }
      else if (key == "v0") { cfg.avt_v0 = to_double(value, line_no, key); v0_set = true; }
      else fail(line_no, "unknown key '" + key + "' in [avt]");
    } else if (section == "partition") {
      if (key == "start_s") cfg.partition_start_s = to_double(value, line_no, key);
      else if (key == "end_s") cfg.partition_end_s = to_double(value, line_no, key);
      else if (key == "pinned_count") cfg.partition_pinned = to_int(value, line_no, key);
      else if (key == "courier") cfg.partition_courier = to_bool(value, line_no, key);
      else fail(line_no, "unknown key '" + key + "' in [partition]");
    }
  }

  // The step bounds and start value follow the search space unless pinned.
  double span = cfg.avt_v_max - cfg.avt_v_min;
  if (!delta_min_set) cfg.avt_delta_min = span * 1e-6;
  if (!delta_max_set) cfg.avt_delta_max = span / 4.0;
  if (!v0_set) cfg.avt_v0 = cfg.avt_v_min + span / 2.0;

  validate_config(cfg);
  return cfg;
}

ScenarioConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string render_config(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "[scenario]\n";
  out << "protocol = " << protocol_name(c.protocol) << "\n";
  out << "seed = " << c.seed << "\n";
  out << "duration_s = " << num(c.duration_s) << "\n";
  out << "node_count = " << c.node_count << "\n";
  out << "metric_interval_s = " << num(c.metric_interval_s) << "\n";
  out << "\n[field]\n";
  out << "width_m = " << num(c.field.width) << "\n";
  out << "height_m = " << num(c.field.height) << "\n";
  out << "\n[mobility]\n";
  out << "model = " << (c.mobility.model == MobilityModel::RandomWaypoint ? "random_waypoint" : "static") << "\n";
  out << "speed_min_mps = " << num(c.mobility.speed_min) << "\n";
  out << "speed_max_mps = " << num(c.mobility.speed_max) << "\n";
  out << "pause_min_s = " << num(c.mobility.pause_min) << "\n";
  out << "pause_max_s = " << num(c.mobility.pause_max) << "\n";
  out << "\n[radio]\n";
  out << "range_m = " << num(c.radio.range_m) << "\n";
  out << "loss_prob = " << num(c.radio.loss_prob) << "\n";
  out << "propagation = " << (c.radio.model == PropagationModel::UnitDisk ? "unit_disk" : "gaussian_edge") << "\n";
  out << "fade_width_m = " << num(c.radio.fade_width_m) << "\n";
  out << "frame_ms = " << num(c.radio.frame_s * 1000.0) << "\n";
  out << "backoff_min_ms = " << num(c.radio.backoff_min_s * 1000.0) << "\n";
  out << "backoff_max_ms = " << num(c.radio.backoff_max_s * 1000.0) << "\n";
  out << "max_backoffs = " << c.radio.max_backoffs << "\n";
  out << "\n[clocks]\n";
  out << "drift_ppm = " << num(c.drift_ppm) << "\n";
  out << "start_offset_max_ticks = " << c.start_offset_max_ticks << "\n";
  out << "\n[protocol]\n";
  out << "beacon_period_s = " << num(c.beacon_period_s) << "\n";
  out << "timer_jitter_ms = " << num(c.timer_jitter_ms) << "\n";
  out << "timestamp_sigma_us = " << num(c.timestamp_sigma_us) << "\n";
  out << "good_band_us = " << num(c.good_band_us) << "\n";
  out << "regression_entries = " << c.regression_entries << "\n";
  out << "gtsp_max_neighbors = " << c.gtsp_max_neighbors << "\n";
  out << "gtsp_stale_periods = " << c.gtsp_stale_periods << "\n";
  out << "\n[avt]\n";
  out << "v_min = " << num(c.avt_v_min) << "\n";
  out << "v_max = " << num(c.avt_v_max) << "\n";
  out << "accel = " << num(c.avt_accel) << "\n";
  out << "decel = " << num(c.avt_decel) << "\n";
  out << "delta_min = " << num(c.avt_delta_min) << "\n";
  out << "delta_max = " << num(c.avt_delta_max) << "\n";
  out << "v0 = " << num(c.avt_v0) << "\n";
  out << "\n[partition]\n";
  out << "start_s = " << num(c.partition_start_s) << "\n";
  out << "end_s = " << num(c.partition_end_s) << "\n";
  out << "pinned_count = " << c.partition_pinned << "\n";
  out << "courier = " << (c.partition_courier ? "true" : "false") << "\n";
  return out.str();
}

void validate_config(const ScenarioConfig& c) {
  auto reject = [](const std::string& message) { throw ConfigError("config: " + message); };

  if (c.node_count < 1) reject("node_count must be >= 1");
  if (c.duration_s < 0) reject("duration_s must be >= 0");
  if (c.metric_interval_s <= 0) reject("metric_interval_s must be > 0");
  if (c.field.width <= 0 || c.field.height <= 0) reject("field dimensions must be positive");

  if (c.mobility.speed_min <= 0 || c.mobility.speed_max < c.mobility.speed_min)
    reject("mobility speeds must satisfy 0 < speed_min <= speed_max");
  if (c.mobility.pause_min < 0 || c.mobility.pause_max < c.mobility.pause_min)
    reject("mobility pauses must satisfy 0 <= pause_min <= pause_max");

  if (c.radio.range_m <= 0) reject("radio range_m must be > 0");
  if (c.radio.loss_prob < 0 || c.radio.loss_prob > 1) reject("loss_prob must be in [0, 1]");
  if (c.radio.fade_width_m < 0) reject("fade_width_m must be >= 0");
  if (c.radio.frame_s <= 0) reject("frame_ms must be > 0");
  if (c.radio.backoff_min_s <= 0 || c.radio.backoff_max_s < c.radio.backoff_min_s)
    reject("backoff window must satisfy 0 < min <= max");
  if (c.radio.max_backoffs < 0) reject("max_backoffs must be >= 0");

  if (c.drift_ppm < 0 || c.drift_ppm > 1000) reject("drift_ppm must be in [0, 1000]");
  if (c.start_offset_max_ticks < 0) reject("start_offset_max_ticks must be >= 0");

  if (c.beacon_period_s <= 0) reject("beacon_period_s must be > 0");
  if (c.timer_jitter_ms < 0) reject("timer_jitter_ms must be >= 0");
  if (c.timestamp_sigma_us < 0) reject("timestamp_sigma_us must be >= 0");
  if (c.good_band_us < 0) reject("good_band_us must be >= 0");
  if (c.regression_entries < 2) reject("regression_entries must be >= 2");
  if (c.gtsp_max_neighbors < 1) reject("gtsp_max_neighbors must be >= 1");
  if (c.gtsp_stale_periods < 1) reject("gtsp_stale_periods must be >= 1");

  try {
    c.avt_params().validate();
  } catch (const std::invalid_argument& e) {
    reject(e.what());
  }
  if (c.avt_v0 < c.avt_v_min || c.avt_v0 > c.avt_v_max)
    reject("avt v0 must lie inside [v_min, v_max]");

  if (c.partition_end_s < c.partition_start_s) reject("partition end_s must be >= start_s");
  if (c.partition_pinned < 0) reject("partition pinned_count must be >= 0");
  int affected = c.partition_pinned + (c.partition_courier ? 1 : 0);
  if (c.partition_enabled()) {
    if (affected > c.node_count - 1)
      reject("partition must leave at least one unaffected node");
    if (c.partition_courier && c.field.width <= 2.0 * c.radio.range_m)
      reject("courier shuttle needs field width > 2 * radio range");
  }
}

}  // namespace rsnsim
