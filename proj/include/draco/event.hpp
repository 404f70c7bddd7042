#pragma once

#include <cstdint>
#include <variant>

#include "draco/data.hpp"
#include "draco/geometry.hpp"
#include "draco/ids.hpp"

namespace draco {

// Resource advertisement gossiped every advert_interval. Values are a
// snapshot at send time; receivers overwrite their n_att row for the sender.
struct AdvertisementMessage {
    NodeId sender;
    int non = 0;    // sender's fresh neighbor-table size
    int rm = 0;     // sender's free buffer slots
};

using MessagePayload = std::variant<AdvertisementMessage, DataMessage>;

struct SenseTimerEvent {
    NodeId node;
};
struct AdvertTimerEvent {
    NodeId node;
};
struct MessageDeliveryEvent {
    NodeId from;
    NodeId to;
    MessagePayload payload;
};
struct NodeFailureEvent {
    NodeId node;
};
struct SinkArrivalEvent {
    Point site;
};
struct PhaseBoundaryEvent {};

using EventKind = std::variant<SenseTimerEvent, AdvertTimerEvent, MessageDeliveryEvent,
                               NodeFailureEvent, SinkArrivalEvent, PhaseBoundaryEvent>;

// Total deterministic order: fire time, then insertion order.
struct Event {
    double fire_at = 0.0;
    std::uint64_t tiebreak_seq = 0;
    EventKind kind;
};

struct EventAfter {
    bool operator()(const Event& a, const Event& b) const {
        if (a.fire_at != b.fire_at) return a.fire_at > b.fire_at;
        return a.tiebreak_seq > b.tiebreak_seq;
    }
};

enum class Phase { Dissemination, Collection, Done };

struct SimClock {
    double now = 0.0;
    double dissemination_duration = 0.0;
    Phase phase = Phase::Dissemination;
};

} // namespace draco
