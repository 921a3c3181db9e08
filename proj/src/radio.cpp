#include "rsnsim/radio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsnsim {

double reception_probability(double distance_m, const ChannelParams& params) {
  if (distance_m < 0)
    throw std::invalid_argument("reception_probability: negative distance");
  double base = 1.0 - params.loss_prob;
  switch (params.model) {
    case PropagationModel::UnitDisk:
      return distance_m <= params.range_m ? base : 0.0;
    case PropagationModel::GaussianEdge: {
      double excess = std::max(0.0, distance_m - params.range_m);
      if (excess == 0.0) return base;
      if (params.fade_width_m <= 0.0) return 0.0;
      double z = excess / params.fade_width_m;
      return base * std::exp(-0.5 * z * z);
    }
  }
  return 0.0;
}

std::optional<SimTime> csma_defer(const Position& sender_pos, SimTime t,
                                  std::span<const Transmission> active,
                                  const ChannelParams& params, Rng& rng) {
  auto busy = [&](SimTime at) {
    for (const auto& tx : active)
      if (at >= tx.start && at < tx.end && in_range(sender_pos, tx.sender_pos, params.range_m))
        return true;
    return false;
  };
  SimTime at = t;
  for (int attempt = 0;; ++attempt) {
    if (!busy(at)) return at;
    if (attempt >= params.max_backoffs) return std::nullopt;
    at += rng.uniform(params.backoff_min_s, params.backoff_max_s);
  }
}

bool reception_corrupted(const Transmission& tx, NodeId receiver,
                         std::span<const Transmission> all) {
  int audible = 0;
  for (const auto& other : all) {
    if (other.start < tx.end && tx.start < other.end && receiver >= 0 &&
        static_cast<std::size_t>(receiver) < other.sender_heard_by.size() &&
        other.sender_heard_by[receiver]) {
      if (++audible >= 2) return true;
    }
  }
  return false;
}

Channel::Channel(const ChannelParams& params, int node_count, Rng rng)
    : params_(params), node_count_(node_count), rng_(rng) {
  if (node_count < 1) throw std::invalid_argument("Channel: node_count must be >= 1");
  if (params.frame_s <= 0) throw std::invalid_argument("Channel: frame must be positive");
}

void Channel::broadcast(NodeId sender, uint64_t seq, SimTime now,
                        const std::vector<Position>& positions, EventQueue& queue,
                        const StampFn& stamp) {
  if (static_cast<int>(positions.size()) != node_count_)
    throw std::invalid_argument("Channel::broadcast: position count mismatch");
  prune(now);

  const Position& at = positions[sender];
  auto start = csma_defer(at, now, txs_, params_, rng_);
  if (!start) {
    ++counters_.mac_dropped;
    return;
  }

  TxStamp ts = stamp(sender, *start);
  Transmission tx;
  tx.id = next_id_++;
  tx.sender = sender;
  tx.start = *start;
  tx.end = *start + params_.frame_s;
  tx.beacon = Beacon{sender, seq, ts.logical_us, ts.hw_ticks};
  tx.sender_pos = at;
  tx.sender_heard_by.resize(positions.size());
  for (std::size_t r = 0; r < positions.size(); ++r)
    tx.sender_heard_by[r] = in_range(at, positions[r], params_.range_m);

  ++counters_.sent;
  for (NodeId r = 0; r < static_cast<NodeId>(positions.size()); ++r) {
    if (r == sender) continue;
    double prob = reception_probability(distance(at, positions[r]), params_);
    if (prob <= 0.0) continue;
    if (rng_.uniform01() < prob)
      queue.schedule({tx.end, EventKind::MessageDelivery, r, tx.id});
    else
      ++counters_.lost_channel;
  }
  txs_.push_back(std::move(tx));
}

std::optional<Channel::Reception> Channel::resolve_delivery(uint64_t tx_id,
                                                            NodeId receiver,
                                                            SimTime /*now*/) {
  const Transmission* tx = nullptr;
  for (auto it = txs_.rbegin(); it != txs_.rend(); ++it)
    if (it->id == tx_id) {
      tx = &*it;
      break;
    }
  if (!tx) throw std::logic_error("Channel::resolve_delivery: unknown transmission");
  if (reception_corrupted(*tx, receiver, txs_)) {
    ++counters_.corrupted;
    return std::nullopt;
  }
  ++counters_.delivered;
  return Reception{tx->beacon, tx->start};
}

void Channel::prune(SimTime now) {
  if (txs_.size() < 64) return;
  // A frame delivering at `now` started at now - frame; only transmissions
  // ending after that can still overlap anything undelivered.
  double cutoff = now - params_.frame_s - 1e-9;
  std::erase_if(txs_, [&](const Transmission& tx) { return tx.end <= cutoff; });
}

}  // namespace rsnsim
