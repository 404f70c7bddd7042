#pragma once

#include <map>
#include <set>

#include "draco/config.hpp"
#include "draco/ids.hpp"
#include "draco/rng.hpp"

namespace draco {

struct World;

// Exact-count random permanent failures: |victims| = round(fraction * n),
// never probabilistic. DuringDissemination draws failure times uniformly in
// (0, duration]; AtPhaseBoundary pins them all to the duration itself.
struct FailurePlan {
    double fraction = 0.0;
    FailureMode mode = FailureMode::DuringDissemination;
    std::set<NodeId> victims;
    std::map<NodeId, double> times;
};

FailurePlan plan_failures(int n, double fraction, FailureMode mode, double duration, Rng& rng);

// Kills the node: no further sends, receives, stores, or replies. Pending
// timers and in-flight deliveries to it become no-ops.
void apply_failure(World& world, NodeId node, double at);

// Text form for scenario pinning: "node,time" per line, ascending node id.
std::string failure_plan_to_text(const FailurePlan& plan);

} // namespace draco
