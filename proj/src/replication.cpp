#include "draco/replication.hpp"

#include "draco/engine.hpp"
#include "draco/world.hpp"

namespace draco {

namespace {

bool row_fresh(const NeighborAttributes& row, double now, double stale_after) {
    return now - row.last_heard <= stale_after;
}

// Ascending-id scan with a strictly-greater comparison, so ties always
// resolve to the lowest node id.
template <typename Eligible, typename Score>
std::optional<NodeId> argmax_row(const NodeState& node, Eligible eligible, Score score) {
    std::optional<NodeId> best;
    int best_score = 0;
    for (const auto& [nid, row] : node.n_att) {
        if (!eligible(row)) continue;
        if (!best || score(row) > best_score) {
            best = nid;
            best_score = score(row);
        }
    }
    return best;
}

} // namespace

std::optional<NodeId> draco_select_candidate(const NodeState& node, const DataMessage& msg,
                                             bool is_owner, double now, double stale_after) {
    auto non_of = [](const NeighborAttributes& r) { return r.non; };
    if (is_owner) {
        return argmax_row(
            node,
            [&](const NeighborAttributes& r) {
                return row_fresh(r, now, stale_after) && r.rm > 0;
            },
            non_of);
    }
    // First pass steers away from every prior holder's neighborhood.
    auto first = argmax_row(
        node,
        [&](const NeighborAttributes& r) {
            return row_fresh(r, now, stale_after) && r.rm > 0 && !msg.visited(r.node) &&
                   !msg.is_replica_holder(r.node) && !msg.cn.contains(r.node);
        },
        non_of);
    if (first) return first;
    // Second pass relaxes only the common-neighbor exclusion.
    return argmax_row(
        node,
        [&](const NeighborAttributes& r) {
            return row_fresh(r, now, stale_after) && r.rm > 0 && !msg.visited(r.node) &&
                   !msg.is_replica_holder(r.node);
        },
        non_of);
}

std::optional<NodeId> greedy_select_candidate(const NodeState& node, const DataMessage& msg,
                                              bool /*is_owner*/, double now, double stale_after) {
    return argmax_row(
        node,
        [&](const NeighborAttributes& r) {
            return row_fresh(r, now, stale_after) && r.rm > 0 && !msg.visited(r.node);
        },
        [](const NeighborAttributes& r) { return r.rm; });
}

std::optional<NodeId> random_select_candidate(const NodeState& node, const DataMessage& msg,
                                              bool /*is_owner*/, double now, double stale_after,
                                              Rng& rng) {
    std::vector<NodeId> eligible;
    for (const auto& [nid, row] : node.n_att) {
        if (row_fresh(row, now, stale_after) && !msg.visited(nid)) eligible.push_back(nid);
    }
    if (eligible.empty()) return std::nullopt;
    return eligible[uniform_index(rng, eligible.size())];
}

namespace {

std::optional<NodeId> select_candidate(World& world, const NodeState& node,
                                       const DataMessage& msg, bool is_owner) {
    const double now = world.clock.now;
    const double stale = world.config.stale_window();
    switch (world.config.replication_strategy) {
        case ReplicationStrategyKind::Draco:
            return draco_select_candidate(node, msg, is_owner, now, stale);
        case ReplicationStrategyKind::Greedy:
            return greedy_select_candidate(node, msg, is_owner, now, stale);
        case ReplicationStrategyKind::Random:
            return random_select_candidate(node, msg, is_owner, now, stale, world.rng_strategy);
    }
    return std::nullopt;
}

} // namespace

void on_sense_timer(World& world, NodeId node_id) {
    NodeState& node = world.node(node_id);
    const double now = world.clock.now;

    DataItem item{DataItemId{node_id, node.next_seq}, now};
    ++node.next_seq;
    ++world.total_items_generated;

    DataMessage msg;
    msg.item = item;
    msg.remaining_r = world.config.replication_degree;
    handle_data_message(world, node_id, std::move(msg));

    const double next = now + node.sense_interval;
    if (next <= world.clock.dissemination_duration) {
        schedule(world, next, SenseTimerEvent{node_id});
    }
}

void on_advert_timer(World& world, NodeId node_id) {
    NodeState& node = world.node(node_id);
    const double now = world.clock.now;

    AdvertisementMessage adv;
    adv.sender = node_id;
    adv.non = node.known_neighbor_count(now, world.config.stale_window());
    adv.rm = world.config.buffer_capacity - node.stored_count();
    broadcast(world, node_id, adv);

    const double next = now + world.config.advert_interval;
    if (next <= world.clock.dissemination_duration) {
        schedule(world, next, AdvertTimerEvent{node_id});
    }
}

void on_receive_advert(World& world, NodeId receiver, const AdvertisementMessage& adv) {
    NodeState& node = world.node(receiver);
    node.n_att[adv.sender] =
        NeighborAttributes{adv.sender, adv.non, adv.rm, world.clock.now};
}

void handle_data_message(World& world, NodeId node_id, DataMessage msg) {
    NodeState& node = world.node(node_id);
    const double now = world.clock.now;
    const bool is_owner = msg.item.id.owner == node_id;

    bool stored = false;
    if (node.stored_count() < world.config.buffer_capacity) {
        node.buffer.push_back(msg.item.id);
        world.ledger.record_placement(msg.item.id, node_id,
                                      static_cast<int>(msg.pr.size()) + 1, now);
        --msg.remaining_r;
        msg.pv.push_back(node_id);
        msg.pr.push_back(node_id);
        stored = true;
    } else {
        msg.pv.push_back(node_id);
    }

    if (msg.remaining_r <= 0) return;   // replication satisfied

    auto candidate = select_candidate(world, node, msg, is_owner);
    if (!candidate) {
        world.ledger.record_drop(msg.item.id, node_id,
                                 stored ? DropReason::no_candidate
                                        : DropReason::buffer_full_terminal,
                                 now);
        return;
    }
    // A replica holder contributes its neighborhood to CN only when handing
    // the message on, after its own selection: the candidate filter must see
    // the common neighbors of prior holders, not of the node selecting.
    if (stored) {
        for (NodeId nb : world.adjacency.of(node_id)) msg.cn.insert(nb);
    }
    ++msg.hop_count;
    unicast(world, node_id, *candidate, std::move(msg));
}

} // namespace draco
