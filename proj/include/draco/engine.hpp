#pragma once

#include <cstdint>

#include "draco/world.hpp"

namespace draco {

// Builds a ready-to-run world: deployment, adjacency, node states, failure
// plan, and the initial timer/failure/boundary events. All randomness comes
// from named streams derived from (seed, stream tag).
World make_world(const SimConfig& config, std::uint64_t seed, bool trace_events = false);

// Enqueues an event. Scheduling into the past is a programming error and
// throws std::logic_error.
void schedule(World& world, double fire_at, EventKind kind);

// One delivery per alive adjacency neighbor of `from`, each at now + hop_delay.
void broadcast(World& world, NodeId from, const MessagePayload& payload);

// Single delivery at now + hop_delay. `to` must be an adjacency neighbor of
// `from` (throws std::logic_error otherwise); if `to` is dead at delivery
// time the message is silently lost.
void unicast(World& world, NodeId from, NodeId to, const MessagePayload& payload);

// Pops and dispatches a single event. Returns false when the queue is empty.
bool step(World& world);

// Processes events through both phases and freezes the outcome.
SimulationRecord run_until_done(World& world);

// Convenience: make_world + run_until_done.
SimulationRecord run_simulation(const SimConfig& config, std::uint64_t seed,
                                bool trace_events = false);

} // namespace draco
