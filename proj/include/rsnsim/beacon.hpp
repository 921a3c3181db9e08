#pragma once

#include <cstdint>

#include "rsnsim/clocks.hpp"
#include "rsnsim/engine.hpp"

namespace rsnsim {

/// Periodic synchronization message. Time fields are stamped at the actual
/// transmission start.
struct Beacon {
  NodeId sender = -1;
  uint64_t seq = 0;
  Micros logical_time = 0.0;  // sender logical clock at transmit
  Ticks hw_time = 0;          // sender hardware clock at transmit
};

}  // namespace rsnsim
