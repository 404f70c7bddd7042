#include "draco/failure.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "draco/serialize.hpp"
#include "draco/world.hpp"

namespace draco {

FailurePlan plan_failures(int n, double fraction, FailureMode mode, double duration, Rng& rng) {
    if (fraction < 0.0 || fraction > 1.0) {
        throw std::invalid_argument("plan_failures: fraction must be in [0,1]");
    }
    FailurePlan plan;
    plan.fraction = fraction;
    plan.mode = mode;

    const int count = static_cast<int>(std::floor(fraction * n + 0.5));   // round half up
    if (count == 0) return plan;

    // Partial Fisher-Yates over 1..n: first `count` entries are the victims.
    std::vector<std::uint32_t> ids(n);
    std::iota(ids.begin(), ids.end(), 1u);
    for (int i = 0; i < count; ++i) {
        const auto j = i + uniform_index(rng, static_cast<std::uint64_t>(n - i));
        std::swap(ids[i], ids[j]);
        plan.victims.insert(NodeId{ids[i]});
    }
    // Times drawn in ascending victim order so the plan is independent of
    // the draw order above.
    for (NodeId victim : plan.victims) {
        const double at = mode == FailureMode::AtPhaseBoundary
                              ? duration
                              : duration * (1.0 - uniform01(rng));   // (0, duration]
        plan.times.emplace(victim, at);
    }
    return plan;
}

void apply_failure(World& world, NodeId node_id, double /*at*/) {
    NodeState& node = world.node(node_id);
    if (!node.alive) throw std::logic_error("apply_failure: node already dead");
    node.alive = false;
    // Timers and in-flight deliveries are cancelled lazily: every handler
    // checks liveness before acting, and deliveries to a dead node no-op.
}

std::string failure_plan_to_text(const FailurePlan& plan) {
    std::string out;
    for (const auto& [node, at] : plan.times) {
        out += std::to_string(node.value) + "," + format_double(at) + "\n";
    }
    return out;
}

} // namespace draco
