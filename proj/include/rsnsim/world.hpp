#pragma once

#include <optional>
#include <vector>

#include "rsnsim/engine.hpp"
#include "rsnsim/rng.hpp"

namespace rsnsim {

struct Position {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Position&, const Position&) = default;
};

struct FieldDim {
  double width = 300.0;
  double height = 300.0;
  friend bool operator==(const FieldDim&, const FieldDim&) = default;
};

double distance(const Position& a, const Position& b);

/// Euclidean distance <= range counts as connected (boundary inclusive).
bool in_range(const Position& a, const Position& b, double range_m);

enum class MobilityModel { RandomWaypoint, Static };

struct MobilityParams {
  MobilityModel model = MobilityModel::RandomWaypoint;
  double speed_min = 0.5;  // m/s
  double speed_max = 1.5;
  double pause_min = 0.0;  // s
  double pause_max = 60.0;
  friend bool operator==(const MobilityParams&, const MobilityParams&) = default;
};

enum class MotionPhase { Moving, Paused };

struct MobilityState {
  Position origin;  // position when the current phase began
  Position target;
  double speed = 0.0;
  MotionPhase phase = MotionPhase::Paused;
  SimTime phase_start = 0.0;
  SimTime phase_end = 0.0;  // arrival (Moving) or pause expiry (Paused)
};

/// count positions uniform over the field; count < 1 is rejected.
std::vector<Position> place_nodes(int count, const FieldDim& field, Rng& rng);

/// Starts a new travel leg from a paused state: uniform target over the
/// field, uniform speed, arrival at distance/speed.
MobilityState next_leg(const MobilityState& state, Rng& rng, const FieldDim& field,
                       const MobilityParams& params, SimTime now);

/// Position inside the current phase: linear interpolation while moving,
/// constant while paused. t outside [phase_start, phase_end] is rejected.
Position position_at(const MobilityState& state, SimTime t);

/// Scripted mobility override active inside [start, end): listed nodes are
/// held at fixed spots; an optional courier shuttles on a straight line
/// between two anchors, dwelling at each end.
struct PartitionScript {
  SimTime start = 0.0;
  SimTime end = 0.0;
  std::vector<NodeId> pinned;
  std::vector<Position> pin_at;
  std::optional<NodeId> courier;
  Position courier_a;
  Position courier_b;
  double courier_speed = 1.0;
  double courier_dwell = 30.0;

  bool enabled() const { return end > start && (!pinned.empty() || courier.has_value()); }
};

Position courier_position(const PartitionScript& script, SimTime t);

/// Node placement and motion over the deployment field. The underlying
/// mobility state machine keeps running during a partition window; the
/// script only overrides position queries.
class World {
 public:
  World(const FieldDim& field, const MobilityParams& params, int node_count, Rng rng);

  void init_placement();

  int node_count() const { return static_cast<int>(states_.size()); }
  bool mobile() const { return params_.model == MobilityModel::RandomWaypoint; }
  const MobilityState& state(NodeId id) const { return states_.at(id); }

  Position position(NodeId id, SimTime t) const;
  std::vector<Position> positions(SimTime t) const;

  /// Pause ended: begins the next leg, returns the arrival time.
  SimTime on_pause_expiry(NodeId id, SimTime now);

  /// Waypoint reached: begins a pause, returns its expiry time.
  SimTime on_arrival(NodeId id, SimTime now);

  void set_partition(PartitionScript script) { partition_ = std::move(script); }
  const PartitionScript* partition() const { return partition_ ? &*partition_ : nullptr; }

 private:
  FieldDim field_;
  MobilityParams params_;
  Rng rng_;
  std::vector<MobilityState> states_;
  std::optional<PartitionScript> partition_;
};

}  // namespace rsnsim
