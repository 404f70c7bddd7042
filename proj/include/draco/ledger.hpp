#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "draco/ids.hpp"

namespace draco {

// Why a replication chain ended without meeting its degree.
//   no_candidate         — chain holder stored a copy but found no next hop
//   buffer_full_terminal — chain reached a full node that also had no next hop
//   in_transit_loss      — the next hop failed while the message was in flight
enum class DropReason {
    no_candidate,
    buffer_full_terminal,
    in_transit_loss,
};

std::string_view to_string(DropReason r);

struct ReplicaPlacement {
    NodeId holder;
    int replica_index = 0;      // 1-based, contiguous in placement order
    double placed_at = 0.0;
};

struct DropRecord {
    DataItemId item;
    NodeId node;
    DropReason reason = DropReason::no_candidate;
    double at = 0.0;
};

// Global ground-truth record of every copy placement, kept strictly outside
// node behavior: nodes write to it through the simulation plumbing and never
// read it, so the replication protocol stays fully distributed.
class ReplicaLedger {
public:
    void record_placement(const DataItemId& item, NodeId holder, int replica_index, double at) {
        placements_[item].push_back({holder, replica_index, at});
        ++total_placements_;
    }

    void record_drop(const DataItemId& item, NodeId node, DropReason reason, double at) {
        drops_.push_back({item, node, reason, at});
    }

    const std::map<DataItemId, std::vector<ReplicaPlacement>>& placements() const {
        return placements_;
    }
    const std::vector<DropRecord>& drops() const { return drops_; }

    std::size_t total_placements() const { return total_placements_; }
    std::size_t items_with_copies() const { return placements_.size(); }

    const std::vector<ReplicaPlacement>* placements_for(const DataItemId& item) const {
        auto it = placements_.find(item);
        return it == placements_.end() ? nullptr : &it->second;
    }

private:
    std::map<DataItemId, std::vector<ReplicaPlacement>> placements_;
    std::vector<DropRecord> drops_;
    std::size_t total_placements_ = 0;
};

} // namespace draco
