#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "draco/geometry.hpp"
#include "draco/ids.hpp"

namespace draco {

struct DataItem {
    DataItemId id;
    double generated_at = 0.0;

    friend bool operator==(const DataItem&, const DataItem&) = default;
};

// In-flight replication envelope. Travels hop by hop until the remaining
// replica budget hits zero or no candidate can be found.
struct DataMessage {
    DataItem item;
    int remaining_r = 0;            // replicas still to place
    std::vector<NodeId> pr;         // previous replica holders, placement order
    std::vector<NodeId> pv;         // previously visited nodes, visit order
    std::set<NodeId> cn;            // 1-hop neighbors of previous replica holders
    int hop_count = 0;              // forwarding transmissions undergone

    bool visited(NodeId n) const {
        return std::find(pv.begin(), pv.end(), n) != pv.end();
    }
    bool is_replica_holder(NodeId n) const {
        return std::find(pr.begin(), pr.end(), n) != pr.end();
    }

    friend bool operator==(const DataMessage&, const DataMessage&) = default;
};

// One row of a node's neighbor attribute table.
struct NeighborAttributes {
    NodeId node;
    int non = 0;            // neighbor count advertised by `node`
    int rm = 0;             // free buffer slots advertised by `node`
    double last_heard = 0.0;

    friend bool operator==(const NeighborAttributes&, const NeighborAttributes&) = default;
};

struct NodeState {
    NodeId id;
    Point position;
    std::vector<DataItemId> buffer;               // insertion-ordered, bounded
    std::map<NodeId, NeighborAttributes> n_att;
    double sense_interval = 0.0;
    std::uint32_t next_seq = 0;
    bool alive = true;

    int stored_count() const { return static_cast<int>(buffer.size()); }

    bool holds(const DataItemId& id) const {
        return std::find(buffer.begin(), buffer.end(), id) != buffer.end();
    }

    // Fresh rows only: a row older than the staleness window is treated as
    // gone (its node may have failed).
    int known_neighbor_count(double now, double stale_after) const {
        int count = 0;
        for (const auto& [nid, row] : n_att) {
            if (now - row.last_heard <= stale_after) ++count;
        }
        return count;
    }
};

// Mobile collector state. `collected` only grows; `visited_sites` records
// every stop, productive or not.
struct SinkState {
    Point position;
    double cr = 0.0;                    // communication radius
    std::set<DataItemId> collected;
    std::vector<Point> visited_sites;
    std::set<NodeId> visited_nodes;
    int max_sites = 0;

    int sites_visited() const { return static_cast<int>(visited_sites.size()); }
};

} // namespace draco
