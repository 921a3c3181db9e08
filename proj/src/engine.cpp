#include "rsnsim/engine.hpp"

#include <charconv>
#include <stdexcept>
#include <tuple>

namespace rsnsim {

const char* event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::BeaconTimer: return "beacon_timer";
    case EventKind::MessageDelivery: return "message_delivery";
    case EventKind::WaypointArrival: return "waypoint_arrival";
    case EventKind::PauseExpiry: return "pause_expiry";
    case EventKind::MetricSample: return "metric_sample";
  }
  return "unknown";
}

bool EventQueue::Entry::operator>(const Entry& other) const {
  auto key = [](const Entry& e) {
    return std::make_tuple(e.event.time, static_cast<uint8_t>(e.event.kind),
                           e.event.target, e.order);
  };
  return key(*this) > key(other);
}

void EventQueue::schedule(const SimEvent& event) {
  if (event.time < now_)
    throw std::invalid_argument("EventQueue::schedule: event time is in the past");
  heap_.push(Entry{event, next_order_++});
}

std::optional<SimEvent> EventQueue::pop_next(SimTime horizon) {
  if (heap_.empty() || heap_.top().event.time > horizon) return std::nullopt;
  SimEvent event = heap_.top().event;
  heap_.pop();
  now_ = event.time;
  return event;
}

void write_trace_line(std::ostream& out, const SimEvent& event) {
  char buf[48];
  auto r = std::to_chars(buf, buf + sizeof buf, event.time,
                         std::chars_format::fixed, 9);
  out.write(buf, r.ptr - buf);
  out << '\t' << event_kind_name(event.kind) << '\t' << event.target << '\t';
  auto h = std::to_chars(buf, buf + sizeof buf, event.payload, 16);
  out.write(buf, h.ptr - buf);
  out << '\n';
}

RunSummary run_until(EventQueue& queue, SimTime horizon,
                     const EventHandler& handler, std::ostream* trace) {
  if (horizon < 0)
    throw std::invalid_argument("run_until: negative horizon");
  RunSummary summary;
  while (auto event = queue.pop_next(horizon)) {
    if (trace) write_trace_line(*trace, *event);
    handler(*event);
    ++summary.processed;
    ++summary.by_kind[static_cast<std::size_t>(event->kind)];
    summary.end_time = event->time;
  }
  return summary;
}

}  // namespace rsnsim
