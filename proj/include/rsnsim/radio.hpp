#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rsnsim/beacon.hpp"
#include "rsnsim/engine.hpp"
#include "rsnsim/rng.hpp"
#include "rsnsim/world.hpp"

namespace rsnsim {

enum class PropagationModel { UnitDisk, GaussianEdge };

struct ChannelParams {
  double range_m = 25.0;
  double loss_prob = 0.05;
  double fade_width_m = 2.0;  // soft edge of the Gaussian reception curve
  PropagationModel model = PropagationModel::GaussianEdge;
  double frame_s = 0.002;
  double backoff_min_s = 0.001;
  double backoff_max_s = 0.010;
  int max_backoffs = 5;
  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

/// UnitDisk: (1 - loss_prob) inside range, 0 beyond. GaussianEdge: full
/// in-range probability with a Gaussian tail past the range.
double reception_probability(double distance_m, const ChannelParams& params);

struct Transmission {
  uint64_t id = 0;
  NodeId sender = -1;
  SimTime start = 0.0;
  SimTime end = 0.0;
  Beacon beacon;
  Position sender_pos;
  std::vector<bool> sender_heard_by;  // node id -> sender within range
};

/// Sender-side carrier sense against the snapshot of scheduled transmissions:
/// sense at t, back off by a uniform delay while busy, give up (drop) after
/// max_backoffs retries.
std::optional<SimTime> csma_defer(const Position& sender_pos, SimTime t,
                                  std::span<const Transmission> active,
                                  const ChannelParams& params, Rng& rng);

/// A reception is corrupted when two or more transmissions audible at the
/// receiver overlap the received frame's interval.
bool reception_corrupted(const Transmission& tx, NodeId receiver,
                         std::span<const Transmission> all);

struct ChannelCounters {
  uint64_t sent = 0;
  uint64_t delivered = 0;
  uint64_t lost_channel = 0;
  uint64_t corrupted = 0;
  uint64_t mac_dropped = 0;
};

struct TxStamp {
  Micros logical_us = 0.0;
  Ticks hw_ticks = 0;
};

/// Called once per transmission at its resolved start time.
using StampFn = std::function<TxStamp(NodeId, SimTime)>;

/// Probabilistic wireless channel with CSMA deferral and collision
/// corruption. Geometry is evaluated once per transmission at the send
/// decision; motion over the few-ms MAC timescale is negligible.
class Channel {
 public:
  Channel(const ChannelParams& params, int node_count, Rng rng);

  /// Runs CSMA, stamps the beacon at the resolved start, draws one
  /// independent reception per other node and schedules MessageDelivery
  /// events at start + frame.
  void broadcast(NodeId sender, uint64_t seq, SimTime now,
                 const std::vector<Position>& positions, EventQueue& queue,
                 const StampFn& stamp);

  struct Reception {
    Beacon beacon;
    SimTime tx_start;
  };

  /// Resolves a scheduled delivery: nullopt when the frame was corrupted by
  /// overlapping transmissions.
  std::optional<Reception> resolve_delivery(uint64_t tx_id, NodeId receiver,
                                            SimTime now);

  const ChannelCounters& counters() const { return counters_; }
  std::size_t pending_transmissions() const { return txs_.size(); }

 private:
  void prune(SimTime now);

  ChannelParams params_;
  int node_count_;
  Rng rng_;
  uint64_t next_id_ = 1;
  std::vector<Transmission> txs_;
  ChannelCounters counters_;
};

}  // namespace rsnsim
