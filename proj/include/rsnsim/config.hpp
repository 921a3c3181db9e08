#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rsnsim/protocols.hpp"
#include "rsnsim/radio.hpp"
#include "rsnsim/world.hpp"

namespace rsnsim {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One simulation run, fully resolved. Field defaults are the reference
/// experiment values; parse_config() derives the AVT step bounds and start
/// value from the search space unless set explicitly.
struct ScenarioConfig {
  // [scenario]
  ProtocolKind protocol = ProtocolKind::AvtFlood;
  uint64_t seed = 1;
  double duration_s = 25000.0;
  int node_count = 100;
  double metric_interval_s = 10.0;

  // [field]
  FieldDim field{300.0, 300.0};

  // [mobility]
  MobilityParams mobility{};

  // [radio]
  ChannelParams radio{};

  // [clocks]
  double drift_ppm = 100.0;
  int64_t start_offset_max_ticks = 1000000;

  // [protocol]
  double beacon_period_s = 30.0;
  double timer_jitter_ms = 100.0;
  double timestamp_sigma_us = 5.0;
  double good_band_us = 1.0;
  int regression_entries = 8;
  int gtsp_max_neighbors = 10;
  int gtsp_stale_periods = 5;

  // [avt]
  double avt_v_min = -1e-4;
  double avt_v_max = 1e-4;
  double avt_accel = 2.0;
  double avt_decel = 1.0 / 3.0;
  double avt_delta_min = 2e-10;
  double avt_delta_max = 5e-5;
  double avt_v0 = 0.0;

  // [partition]
  double partition_start_s = 0.0;
  double partition_end_s = 0.0;
  int partition_pinned = 0;
  bool partition_courier = false;

  AvtParams avt_params() const;
  bool partition_enabled() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Parses the key-per-line document; unknown sections, unknown keys and
/// malformed or out-of-range values raise ConfigError. An empty document
/// yields the full default configuration.
ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config_file(const std::filesystem::path& path);

/// Canonical text form; parse_config(render_config(c)) round-trips.
std::string render_config(const ScenarioConfig& config);

void validate_config(const ScenarioConfig& config);

}  // namespace rsnsim
