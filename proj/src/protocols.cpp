#include "rsnsim/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsnsim {

const char* protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::AvtFlood: return "avt_flood";
    case ProtocolKind::AvtP2p: return "avt_p2p";
    case ProtocolKind::PulseSync: return "pulsesync";
    case ProtocolKind::Gtsp: return "gtsp";
  }
  return "unknown";
}

std::optional<ProtocolKind> protocol_from_name(std::string_view name) {
  if (name == "avt_flood") return ProtocolKind::AvtFlood;
  if (name == "avt_p2p") return ProtocolKind::AvtP2p;
  if (name == "pulsesync") return ProtocolKind::PulseSync;
  if (name == "gtsp") return ProtocolKind::Gtsp;
  return std::nullopt;
}

Feedback derive_feedback(Micros error_us) {
  if (error_us > 0) return Feedback::Up;
  if (error_us < 0) return Feedback::Down;
  return Feedback::Good;
}

Feedback feedback_with_deadband(Micros error_us, Micros band_us) {
  if (std::abs(error_us) <= band_us) return Feedback::Good;
  return derive_feedback(error_us);
}

RegressionTable::RegressionTable(std::size_t capacity) : capacity_(capacity) {
  if (capacity < 1) throw std::invalid_argument("RegressionTable: capacity must be >= 1");
}

void RegressionTable::add(Ticks local_hw, Micros remote_logical) {
  if (entries_.size() >= capacity_) entries_.erase(entries_.begin());
  entries_.emplace_back(local_hw, remote_logical);
}

std::optional<OlsFit> RegressionTable::fit() const {
  if (entries_.size() < 2) return std::nullopt;
  double n = static_cast<double>(entries_.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [x, y] : entries_) {
    mean_x += static_cast<double>(x);
    mean_y += y;
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : entries_) {
    double dx = static_cast<double>(x) - mean_x;
    sxx += dx * dx;
    sxy += dx * (y - mean_y);
  }
  if (sxx == 0.0) return std::nullopt;
  double slope = sxy / sxx;
  return OlsFit{slope, mean_y - slope * mean_x};
}

double NeighborEntry::rel_rate() const {
  if (!has_prev || last_local_hw <= prev_local_hw) return 0.0;
  return (last_remote_us - prev_remote_us) /
             static_cast<double>(last_local_hw - prev_local_hw) -
         1.0;
}

NeighborTable::NeighborTable(std::size_t capacity, uint64_t stale_after_periods)
    : capacity_(capacity), stale_after_(stale_after_periods) {
  if (capacity < 1) throw std::invalid_argument("NeighborTable: capacity must be >= 1");
  if (stale_after_ < 1) throw std::invalid_argument("NeighborTable: stale_after must be >= 1");
}

bool NeighborTable::observe(NodeId id, Ticks local_hw, Micros remote_us, uint64_t period) {
  for (auto& e : entries_) {
    if (e.id != id) continue;
    e.prev_local_hw = e.last_local_hw;
    e.prev_remote_us = e.last_remote_us;
    e.has_prev = true;
    e.last_local_hw = local_hw;
    e.last_remote_us = remote_us;
    e.last_heard_period = period;
    return true;
  }
  if (entries_.size() >= capacity_) return false;
  NeighborEntry e;
  e.id = id;
  e.last_local_hw = local_hw;
  e.last_remote_us = remote_us;
  e.last_heard_period = period;
  entries_.push_back(e);
  return true;
}

void NeighborTable::evict_stale(uint64_t current_period) {
  std::erase_if(entries_, [&](const NeighborEntry& e) {
    return current_period - e.last_heard_period >= stale_after_;
  });
}

ProtocolRuntime::ProtocolRuntime(ProtocolParams params) : params_(std::move(params)) {
  params_.avt.validate();
  if (params_.avt_v0 < params_.avt.v_min || params_.avt_v0 > params_.avt.v_max)
    throw std::invalid_argument("ProtocolRuntime: avt_v0 outside the search space");
}

void ProtocolRuntime::init_node(NodeSync& node, NodeId id) const {
  node.id = id;
  bool flooding = params_.kind == ProtocolKind::AvtFlood || params_.kind == ProtocolKind::PulseSync;
  node.is_reference = flooding && id == params_.reference;
  node.avt.reset();
  if (!node.is_reference &&
      (params_.kind == ProtocolKind::AvtFlood || params_.kind == ProtocolKind::AvtP2p))
    node.avt.emplace(params_.avt, params_.avt_v0);
  node.highest_seq.reset();
  node.own_seq = 0;
  node.regression = RegressionTable(params_.regression_entries);
  node.neighbors = NeighborTable(params_.gtsp_max_neighbors, params_.gtsp_stale_periods);
}

std::optional<uint64_t> ProtocolRuntime::on_beacon_timer(NodeSync& node, Ticks hw_now) {
  switch (params_.kind) {
    case ProtocolKind::AvtFlood:
      if (node.is_reference) return ++node.own_seq;
      // Relay the freshest sequence seen, stamped with the node's own
      // logical time; a node that never heard anything stays silent.
      return node.highest_seq;
    case ProtocolKind::AvtP2p:
      return ++node.own_seq;
    case ProtocolKind::PulseSync:
      if (node.is_reference) return ++node.own_seq;
      return std::nullopt;  // relays forward pulses on arrival instead
    case ProtocolKind::Gtsp: {
      ++node.own_seq;  // period index
      node.neighbors.evict_stale(node.own_seq);
      gtsp_average(node, hw_now);
      return node.own_seq;
    }
  }
  return std::nullopt;
}

std::optional<uint64_t> ProtocolRuntime::on_receive(NodeSync& node, const Beacon& beacon,
                                                    Ticks hw_now) {
  switch (params_.kind) {
    case ProtocolKind::AvtFlood: {
      if (node.is_reference) return std::nullopt;
      if (node.highest_seq && beacon.seq <= *node.highest_seq) return std::nullopt;
      node.highest_seq = beacon.seq;
      Micros error = beacon.logical_time - node.logical.read(hw_now);
      node.logical.adjust_offset(hw_now, error);
      node.avt->adjust(feedback_with_deadband(error, params_.good_band_us));
      node.logical.set_rate(hw_now, node.avt->value());
      return std::nullopt;
    }
    case ProtocolKind::AvtP2p: {
      // Completely blind: no sender identity, no sequence filtering.
      Micros error = beacon.logical_time - node.logical.read(hw_now);
      node.logical.adjust_offset(hw_now, error / 2.0);
      node.avt->adjust(feedback_with_deadband(error, params_.good_band_us));
      node.logical.set_rate(hw_now, node.avt->value());
      return std::nullopt;
    }
    case ProtocolKind::PulseSync: {
      if (node.is_reference) return std::nullopt;
      if (node.highest_seq && beacon.seq <= *node.highest_seq) return std::nullopt;
      node.highest_seq = beacon.seq;
      node.regression.add(hw_now, beacon.logical_time);
      if (auto f = node.regression.fit()) {
        Micros fitted = f->intercept + f->slope * static_cast<double>(hw_now);
        node.logical.adjust_offset(hw_now, fitted - node.logical.read(hw_now));
        node.logical.set_rate(hw_now, f->slope - 1.0);
      } else {
        // Single point (or no x spread): snap to the pulse, keep the rate.
        node.logical.adjust_offset(hw_now, beacon.logical_time - node.logical.read(hw_now));
      }
      return beacon.seq;  // forward as fast as the MAC allows
    }
    case ProtocolKind::Gtsp:
      node.neighbors.observe(beacon.sender, hw_now, beacon.logical_time, node.own_seq);
      return std::nullopt;
  }
  return std::nullopt;
}

void ProtocolRuntime::gtsp_average(NodeSync& node, Ticks hw_now) const {
  const auto& entries = node.neighbors.entries();
  if (entries.empty()) return;
  Micros own = node.logical.read(hw_now);
  double rate_sum = node.logical.rate_corr();
  Micros value_sum = own;
  for (const auto& nb : entries) {
    double rel = nb.rel_rate();
    value_sum += nb.last_remote_us +
                 static_cast<double>(hw_now - nb.last_local_hw) * (1.0 + rel);
    rate_sum += rel;
  }
  double k = 1.0 + static_cast<double>(entries.size());
  node.logical.adjust_offset(hw_now, value_sum / k - own);
  node.logical.set_rate(hw_now, rate_sum / k);
}

}  // namespace rsnsim
