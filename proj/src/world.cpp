#include "rsnsim/world.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rsnsim {

namespace {
constexpr SimTime kPhaseSlack = 1e-9;
constexpr SimTime kForever = std::numeric_limits<SimTime>::infinity();

Position lerp(const Position& a, const Position& b, double f) {
  return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
}
}  // namespace

double distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool in_range(const Position& a, const Position& b, double range_m) {
  return distance(a, b) <= range_m;
}

std::vector<Position> place_nodes(int count, const FieldDim& field, Rng& rng) {
  if (count < 1) throw std::invalid_argument("place_nodes: count must be >= 1");
  std::vector<Position> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back({rng.uniform(0.0, field.width), rng.uniform(0.0, field.height)});
  return out;
}

MobilityState next_leg(const MobilityState& state, Rng& rng, const FieldDim& field,
                       const MobilityParams& params, SimTime now) {
  if (state.phase != MotionPhase::Paused || now < state.phase_end - kPhaseSlack)
    throw std::logic_error("next_leg: node is not at the end of a pause");
  MobilityState leg;
  leg.origin = state.origin;
  leg.target = {rng.uniform(0.0, field.width), rng.uniform(0.0, field.height)};
  leg.speed = rng.uniform(params.speed_min, params.speed_max);
  leg.phase = MotionPhase::Moving;
  leg.phase_start = now;
  leg.phase_end = now + distance(leg.origin, leg.target) / leg.speed;
  return leg;
}

Position position_at(const MobilityState& state, SimTime t) {
  if (t < state.phase_start - kPhaseSlack || t > state.phase_end + kPhaseSlack)
    throw std::out_of_range("position_at: time outside the current phase");
  if (state.phase == MotionPhase::Paused) return state.origin;
  double total = distance(state.origin, state.target);
  if (total == 0.0) return state.target;
  double f = state.speed * (t - state.phase_start) / total;
  if (f >= 1.0) return state.target;
  if (f < 0.0) f = 0.0;
  return lerp(state.origin, state.target, f);
}

Position courier_position(const PartitionScript& script, SimTime t) {
  double travel = distance(script.courier_a, script.courier_b) / script.courier_speed;
  double cycle = 2.0 * (travel + script.courier_dwell);
  double u = std::fmod(t - script.start, cycle);
  if (u < script.courier_dwell) return script.courier_a;
  u -= script.courier_dwell;
  if (u < travel) return lerp(script.courier_a, script.courier_b, u / travel);
  u -= travel;
  if (u < script.courier_dwell) return script.courier_b;
  u -= script.courier_dwell;
  return lerp(script.courier_b, script.courier_a, u / travel);
}

World::World(const FieldDim& field, const MobilityParams& params, int node_count, Rng rng)
    : field_(field), params_(params), rng_(rng) {
  if (node_count < 1) throw std::invalid_argument("World: node_count must be >= 1");
  if (field.width <= 0 || field.height <= 0)
    throw std::invalid_argument("World: field dimensions must be positive");
  states_.resize(node_count);
}

void World::init_placement() {
  auto placed = place_nodes(node_count(), field_, rng_);
  for (int i = 0; i < node_count(); ++i) {
    auto& s = states_[i];
    s.origin = placed[i];
    s.target = placed[i];
    s.phase = MotionPhase::Paused;
    s.phase_start = 0.0;
    s.phase_end = mobile() ? rng_.uniform(params_.pause_min, params_.pause_max) : kForever;
  }
}

Position World::position(NodeId id, SimTime t) const {
  if (partition_ && partition_->enabled() && t >= partition_->start && t < partition_->end) {
    const auto& p = *partition_;
    if (p.courier && *p.courier == id) return courier_position(p, t);
    for (std::size_t k = 0; k < p.pinned.size(); ++k)
      if (p.pinned[k] == id) return p.pin_at[k];
  }
  return position_at(states_.at(id), t);
}

std::vector<Position> World::positions(SimTime t) const {
  std::vector<Position> out;
  out.reserve(states_.size());
  for (NodeId i = 0; i < node_count(); ++i) out.push_back(position(i, t));
  return out;
}

SimTime World::on_pause_expiry(NodeId id, SimTime now) {
  auto& s = states_.at(id);
  s = next_leg(s, rng_, field_, params_, now);
  return s.phase_end;
}

SimTime World::on_arrival(NodeId id, SimTime now) {
  auto& s = states_.at(id);
  if (s.phase != MotionPhase::Moving || now < s.phase_end - kPhaseSlack)
    throw std::logic_error("on_arrival: node is not arriving");
  s.origin = s.target;
  s.phase = MotionPhase::Paused;
  s.phase_start = now;
  s.phase_end = now + rng_.uniform(params_.pause_min, params_.pause_max);
  return s.phase_end;
}

}  // namespace rsnsim
