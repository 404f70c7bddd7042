#pragma once

#include <optional>

#include "draco/data.hpp"
#include "draco/event.hpp"
#include "draco/rng.hpp"

namespace draco {

struct World;

// Candidate selection over the node's neighbor attribute table. Rows older
// than `stale_after` are ignored everywhere: their nodes may be dead.
//
// Owner rule: max NoN among rows with rm > 0, no exclusions.
// Non-owner rule: max NoN among rows with rm > 0 excluding PV, PR and CN;
// if that leaves nothing, retry with the CN exclusion relaxed.
// All ties break to the lowest node id.
std::optional<NodeId> draco_select_candidate(const NodeState& node, const DataMessage& msg,
                                             bool is_owner, double now, double stale_after);

// Max advertised rm among rows with rm > 0, excluding PV (termination guard).
std::optional<NodeId> greedy_select_candidate(const NodeState& node, const DataMessage& msg,
                                              bool is_owner, double now, double stale_after);

// Uniform pick among rows excluding PV; no memory check, full nodes just
// pass the message along.
std::optional<NodeId> random_select_candidate(const NodeState& node, const DataMessage& msg,
                                              bool is_owner, double now, double stale_after,
                                              Rng& rng);

// Timer and delivery handlers, run inside the event loop.
void on_sense_timer(World& world, NodeId node);
void on_advert_timer(World& world, NodeId node);
void on_receive_advert(World& world, NodeId receiver, const AdvertisementMessage& adv);

// Store-and-forward step executed when a node generates or receives a data
// message: store a copy if there is room, then pick the next hop and forward
// while the replica budget allows.
void handle_data_message(World& world, NodeId node, DataMessage msg);

} // namespace draco
