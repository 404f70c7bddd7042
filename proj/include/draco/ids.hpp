#pragma once

#include <compare>
#include <cstdint>

namespace draco {

// Node identifier, 1-based and dense within a deployment.
struct NodeId {
    std::uint32_t value = 0;

    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

// Identity of a sensed datum: owning node plus a per-owner sequence number.
// Items carry no payload; (owner, seq) is all the metrics ever need.
struct DataItemId {
    NodeId owner;
    std::uint32_t seq = 0;

    friend auto operator<=>(const DataItemId&, const DataItemId&) = default;
};

} // namespace draco
