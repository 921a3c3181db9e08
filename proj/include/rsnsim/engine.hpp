#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <queue>
#include <vector>

namespace rsnsim {

using SimTime = double;  // seconds
using NodeId = int32_t;

inline constexpr NodeId kGlobalTarget = -1;

enum class EventKind : uint8_t {
  BeaconTimer = 0,
  MessageDelivery,
  WaypointArrival,
  PauseExpiry,
  MetricSample,
};

inline constexpr std::size_t kEventKindCount = 5;

const char* event_kind_name(EventKind kind);

struct SimEvent {
  SimTime time = 0.0;
  EventKind kind = EventKind::BeaconTimer;
  NodeId target = kGlobalTarget;
  uint64_t payload = 0;
};

/// Pending events ordered by (time, kind, target, insertion order), so
/// equal-time ties pop identically on every run.
class EventQueue {
 public:
  /// Rejects events scheduled before the current time.
  void schedule(const SimEvent& event);

  /// Next event with time <= horizon, advancing now(); nullopt otherwise.
  std::optional<SimEvent> pop_next(SimTime horizon);

  SimTime now() const { return now_; }
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

 private:
  struct Entry {
    SimEvent event;
    uint64_t order;
    bool operator>(const Entry& other) const;
  };

  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
  SimTime now_ = 0.0;
  uint64_t next_order_ = 0;
};

struct RunSummary {
  uint64_t processed = 0;
  std::array<uint64_t, kEventKindCount> by_kind{};
  SimTime end_time = 0.0;
};

using EventHandler = std::function<void(const SimEvent&)>;

/// Drains every event with time <= horizon in order. When trace is set, each
/// dequeued event is logged as "time<TAB>kind<TAB>target<TAB>payload-hex".
RunSummary run_until(EventQueue& queue, SimTime horizon,
                     const EventHandler& handler, std::ostream* trace = nullptr);

void write_trace_line(std::ostream& out, const SimEvent& event);

}  // namespace rsnsim
