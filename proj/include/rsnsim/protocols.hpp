#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "rsnsim/avt.hpp"
#include "rsnsim/beacon.hpp"
#include "rsnsim/clocks.hpp"

namespace rsnsim {

enum class ProtocolKind { AvtFlood, AvtP2p, PulseSync, Gtsp };

const char* protocol_name(ProtocolKind kind);
std::optional<ProtocolKind> protocol_from_name(std::string_view name);

/// Sign of the synchronization error: positive means the local clock is
/// behind the sender, so the logical clock should speed up.
Feedback derive_feedback(Micros error_us);

/// Errors inside the dead band count as "good"; keeps the tracker settled
/// once residual errors are down at measurement-noise scale.
Feedback feedback_with_deadband(Micros error_us, Micros band_us);

struct OlsFit {
  double slope = 1.0;
  Micros intercept = 0.0;
};

/// Sliding window of (local hardware, remote logical) pairs, oldest evicted.
class RegressionTable {
 public:
  explicit RegressionTable(std::size_t capacity = 8);

  void add(Ticks local_hw, Micros remote_logical);

  /// Ordinary least squares of remote on local; nullopt with fewer than two
  /// points or no spread in x (callers fall back to offset-only mode).
  std::optional<OlsFit> fit() const;

  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }
  const std::vector<std::pair<Ticks, Micros>>& entries() const { return entries_; }

 private:
  std::size_t capacity_;
  std::vector<std::pair<Ticks, Micros>> entries_;
};

struct NeighborEntry {
  NodeId id = -1;
  Ticks last_local_hw = 0;
  Micros last_remote_us = 0.0;
  Ticks prev_local_hw = 0;
  Micros prev_remote_us = 0.0;
  bool has_prev = false;
  uint64_t last_heard_period = 0;

  /// Neighbor logical rate relative to the local hardware clock, minus one.
  /// Two-point estimate from the latest reading pair; 0 until two exist.
  double rel_rate() const;
};

/// Bounded neighbor tracking with staleness eviction.
class NeighborTable {
 public:
  NeighborTable(std::size_t capacity, uint64_t stale_after_periods);

  /// Updates a tracked neighbor or inserts a new one; returns false when the
  /// table is full and the sender unknown (reading discarded).
  bool observe(NodeId id, Ticks local_hw, Micros remote_us, uint64_t period);

  void evict_stale(uint64_t current_period);

  const std::vector<NeighborEntry>& entries() const { return entries_; }
  std::size_t capacity() const { return capacity_; }
  uint64_t stale_after() const { return stale_after_; }

 private:
  std::size_t capacity_;
  uint64_t stale_after_;
  std::vector<NeighborEntry> entries_;
};

struct ProtocolParams {
  ProtocolKind kind = ProtocolKind::AvtFlood;
  NodeId reference = 0;  // flooding protocols only
  Micros good_band_us = 1.0;
  AvtParams avt = {};
  double avt_v0 = 0.0;
  std::size_t regression_entries = 8;
  std::size_t gtsp_max_neighbors = 10;
  uint64_t gtsp_stale_periods = 5;
};

/// Per-node synchronization state. Which members are live depends on the
/// protocol; the AVT protocols keep no per-neighbor state at all.
struct NodeSync {
  NodeId id = -1;
  bool is_reference = false;
  LogicalClock logical;
  std::optional<Avt> avt;
  std::optional<uint64_t> highest_seq;
  uint64_t own_seq = 0;  // reference/p2p beacon counter; gtsp period index
  RegressionTable regression{8};
  NeighborTable neighbors{10, 5};
};

/// Event handlers for the four protocols behind one dispatch surface. The
/// handlers are pure state machines over NodeSync; the channel stamps time
/// fields at the actual transmission start.
class ProtocolRuntime {
 public:
  explicit ProtocolRuntime(ProtocolParams params);

  const ProtocolParams& params() const { return params_; }

  void init_node(NodeSync& node, NodeId id) const;

  /// Timer fired. Returns the sequence number to broadcast, if anything.
  std::optional<uint64_t> on_beacon_timer(NodeSync& node, Ticks hw_now);

  /// Uncorrupted beacon delivered; hw_now is the receiver's hardware clock
  /// at the moment the transmission started (receive-side timestamping).
  /// Returns a sequence number to forward immediately (pulse relaying).
  std::optional<uint64_t> on_receive(NodeSync& node, const Beacon& beacon, Ticks hw_now);

 private:
  void gtsp_average(NodeSync& node, Ticks hw_now) const;

  ProtocolParams params_;
};

}  // namespace rsnsim
