#include "rsnsim/clocks.hpp"

#include <cmath>
#include <stdexcept>

namespace rsnsim {

HardwareClock::HardwareClock(double nominal_freq_hz, double drift, Ticks start_offset)
    : nominal_freq_hz_(nominal_freq_hz), drift_(drift), start_offset_(start_offset) {
  if (nominal_freq_hz <= 0)
    throw std::invalid_argument("HardwareClock: nominal frequency must be positive");
  if (std::abs(drift) > 1e-3)
    throw std::invalid_argument("HardwareClock: drift out of supported range");
}

Ticks HardwareClock::read(SimTime t) const {
  if (t < 0) throw std::invalid_argument("HardwareClock::read: negative time");
  return start_offset_ + static_cast<Ticks>(std::llround(nominal_freq_hz_ * (1.0 + drift_) * t));
}

LogicalClock::LogicalClock(Micros base_value, Ticks base_hw)
    : base_value_(base_value), base_hw_(base_hw) {}

Micros LogicalClock::read(Ticks hw_now) const {
  if (hw_now < base_hw_)
    throw std::invalid_argument("LogicalClock::read: hardware clock ran backward");
  return base_value_ + static_cast<double>(hw_now - base_hw_) * (1.0 + rate_corr_);
}

void LogicalClock::adjust_offset(Ticks hw_now, Micros delta) {
  base_value_ = read(hw_now) + delta;
  base_hw_ = hw_now;
}

void LogicalClock::set_rate(Ticks hw_now, double rate_corr) {
  if (rate_corr <= -1.0)
    throw std::invalid_argument("LogicalClock::set_rate: rate_corr <= -1");
  base_value_ = read(hw_now);
  base_hw_ = hw_now;
  rate_corr_ = rate_corr;
}

}  // namespace rsnsim
