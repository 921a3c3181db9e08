#pragma once

#include <span>
#include <string>

#include "rsnsim/clocks.hpp"
#include "rsnsim/engine.hpp"

namespace rsnsim {

struct ErrorSample {
  SimTime t = 0.0;
  Micros global_error = 0.0;   // max - min over logical readings
  Micros mean_abs_dev = 0.0;   // mean |L_i - mean(L)|
  NodeId max_node = -1;
  NodeId min_node = -1;
};

/// Reads taken at one instant across all nodes; needs at least two readings.
ErrorSample sample_global_error(std::span<const Micros> readings, SimTime t);

/// Arithmetic mean of global_error over samples with from <= t <= to;
/// an empty window is rejected.
Micros average_global_error(std::span<const ErrorSample> samples, SimTime from,
                            SimTime to);

/// Locale-independent fixed-point formatting (std::to_chars).
std::string format_fixed(double value, int precision);

}  // namespace rsnsim
