#pragma once

#include <cstdint>

#include "rsnsim/engine.hpp"

namespace rsnsim {

using Ticks = int64_t;
using Micros = double;

/// Free-running oscillator: nominal frequency plus a constant fractional
/// drift, read as integer ticks.
class HardwareClock {
 public:
  HardwareClock() = default;
  HardwareClock(double nominal_freq_hz, double drift, Ticks start_offset);

  Ticks read(SimTime t) const;

  double drift() const { return drift_; }
  double nominal_freq_hz() const { return nominal_freq_hz_; }
  Ticks start_offset() const { return start_offset_; }

 private:
  double nominal_freq_hz_ = 1e6;
  double drift_ = 0.0;
  Ticks start_offset_ = 0;
};

/// Software clock over hardware ticks: piecewise linear with slope
/// (1 + rate_corr), continuous across rate changes. One tick = 1 us nominal.
class LogicalClock {
 public:
  LogicalClock() = default;
  LogicalClock(Micros base_value, Ticks base_hw);

  /// Reading at hw_now; hw_now < the last update point is rejected.
  Micros read(Ticks hw_now) const;

  /// Jumps the value by delta at hw_now; the rate is untouched.
  void adjust_offset(Ticks hw_now, Micros delta);

  /// Changes the slope from hw_now on; the reading at hw_now is preserved.
  /// rate_corr <= -1 is rejected (the clock must keep moving forward).
  void set_rate(Ticks hw_now, double rate_corr);

  double rate_corr() const { return rate_corr_; }
  Ticks base_hw() const { return base_hw_; }

 private:
  Micros base_value_ = 0.0;
  Ticks base_hw_ = 0;
  double rate_corr_ = 0.0;
};

}  // namespace rsnsim
