#pragma once

#include <filesystem>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "rsnsim/config.hpp"
#include "rsnsim/metrics.hpp"
#include "rsnsim/radio.hpp"

namespace rsnsim {

struct RunResult {
  ScenarioConfig config;
  std::vector<ErrorSample> samples;
  ChannelCounters channel;
  RunSummary events;
  double steady_avg_us = std::numeric_limits<double>::quiet_NaN();  // final 50%
  double peak_us = std::numeric_limits<double>::quiet_NaN();
};

/// One complete deterministic run. Identical (config, seed) produce identical
/// results; the optional trace receives one line per dequeued event.
RunResult simulate(const ScenarioConfig& config, std::ostream* trace = nullptr);

/// Scripted mobility override derived from the partition settings: pinned
/// nodes are parked in a tight cluster beyond radio reach of the field, the
/// optional courier shuttles between the field interior and the cluster.
PartitionScript make_partition_script(const ScenarioConfig& config);

void write_timeseries_csv(const RunResult& result, std::ostream& out);

std::string summary_csv_header();
std::string summary_csv_row(const RunResult& result);

struct RunFiles {
  std::filesystem::path timeseries;
  std::filesystem::path summary;
};

/// Writes <prefix><protocol>_seed<seed>_{timeseries,summary}.csv under outdir.
RunFiles write_run_outputs(const RunResult& result, const std::filesystem::path& outdir,
                           const std::string& prefix = {});

}  // namespace rsnsim
