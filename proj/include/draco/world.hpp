#pragma once

#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "draco/collection.hpp"
#include "draco/config.hpp"
#include "draco/data.hpp"
#include "draco/event.hpp"
#include "draco/failure.hpp"
#include "draco/ledger.hpp"
#include "draco/topology.hpp"

namespace draco {

// Everything one simulation run owns. Strictly single-threaded; independent
// runs share nothing mutable.
struct World {
    SimConfig config;
    std::uint64_t seed = 0;

    NodeLayout layout;
    AdjacencyMap adjacency;
    std::vector<NodeState> nodes;   // index = id - 1
    SinkState sink;
    CollectionTrace trace;
    ReplicaLedger ledger;
    FailurePlan failure_plan;
    SimClock clock;
    int total_items_generated = 0;

    Rng rng_strategy;   // random-replication picks
    Rng rng_sites;      // sink site generation
    Rng rng_loss;       // drop_probability hook

    std::priority_queue<Event, std::vector<Event>, EventAfter> queue;
    std::uint64_t next_tiebreak = 0;
    int pending_sense_timers = 0;   // scheduled SenseTimer events not yet popped
    long in_flight_messages = 0;    // scheduled MessageDelivery events not yet popped

    bool trace_events = false;
    std::vector<std::string> event_log;

    NodeState& node(NodeId id) { return nodes[id.value - 1]; }
    const NodeState& node(NodeId id) const { return nodes[id.value - 1]; }
    bool alive(NodeId id) const { return nodes[id.value - 1].alive; }
};

// Immutable outcome of a finished run; metrics are pure functions of this.
struct SimulationRecord {
    SimConfig config;
    std::uint64_t seed = 0;
    NodeLayout layout;
    ReplicaLedger ledger;
    FailurePlan failure_plan;
    CollectionTrace trace;
    std::vector<NodeState> final_nodes;
    SinkState sink;
    int total_items_generated = 0;
    std::vector<std::string> event_log;
};

} // namespace draco
