#include "rsnsim/metrics.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace rsnsim {

ErrorSample sample_global_error(std::span<const Micros> readings, SimTime t) {
  if (readings.size() < 2)
    throw std::invalid_argument("sample_global_error: need at least two nodes");
  ErrorSample s;
  s.t = t;
  s.max_node = 0;
  s.min_node = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < readings.size(); ++i) {
    sum += readings[i];
    if (readings[i] > readings[s.max_node]) s.max_node = static_cast<NodeId>(i);
    if (readings[i] < readings[s.min_node]) s.min_node = static_cast<NodeId>(i);
  }
  s.global_error = readings[s.max_node] - readings[s.min_node];
  double mean = sum / static_cast<double>(readings.size());
  double dev = 0.0;
  for (Micros r : readings) dev += std::abs(r - mean);
  s.mean_abs_dev = dev / static_cast<double>(readings.size());
  return s;
}

Micros average_global_error(std::span<const ErrorSample> samples, SimTime from,
                            SimTime to) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& s : samples) {
    if (s.t < from || s.t > to) continue;
    sum += s.global_error;
    ++count;
  }
  if (count == 0)
    throw std::invalid_argument("average_global_error: no samples in window");
  return sum / static_cast<double>(count);
}

std::string format_fixed(double value, int precision) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed,
                         precision);
  return std::string(buf, r.ptr);
}

}  // namespace rsnsim
