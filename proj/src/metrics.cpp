#include "draco/metrics.hpp"

#include <map>

namespace draco {

double data_availability(const ReplicaLedger& ledger, const FailurePlan& plan, int total_unique) {
    if (total_unique <= 0) return 1.0;
    long available = 0;
    for (const auto& [item, placements] : ledger.placements()) {
        for (const auto& p : placements) {
            if (!plan.victims.contains(p.holder)) {
                ++available;
                break;
            }
        }
    }
    return static_cast<double>(available) / total_unique;
}

double average_replicas(const ReplicaLedger& ledger, int total_unique, bool* undefined) {
    if (undefined) *undefined = total_unique <= 0;
    if (total_unique <= 0) return 0.0;
    return static_cast<double>(ledger.total_placements()) / total_unique;
}

std::vector<SpreadRow> replica_spread(const ReplicaLedger& ledger, const NodeLayout& layout) {
    std::map<int, std::pair<double, long>> by_index;   // index -> (distance sum, count)
    for (const auto& [item, placements] : ledger.placements()) {
        const Point owner_pos = layout.positions.at(item.owner);
        for (const auto& p : placements) {
            auto& [sum, count] = by_index[p.replica_index];
            sum += distance(owner_pos, layout.positions.at(p.holder));
            ++count;
        }
    }
    std::vector<SpreadRow> rows;
    rows.reserve(by_index.size());
    for (const auto& [index, agg] : by_index) {
        rows.push_back({index, agg.first / agg.second, agg.second});
    }
    return rows;
}

std::vector<EfficiencyPoint> collection_efficiency(const CollectionTrace& trace,
                                                   int total_unique) {
    std::vector<EfficiencyPoint> curve;
    curve.push_back({0, 0.0});
    if (total_unique <= 0) return curve;
    int visits = 0;
    for (const auto& visit : trace) {
        if (!visit.selected) continue;
        ++visits;
        curve.push_back({visits, 100.0 * visit.cumulative_unique / total_unique});
    }
    return curve;
}

MetricsReport compute_metrics(const SimulationRecord& record) {
    MetricsReport report;
    report.total_unique = record.total_items_generated;
    report.total_placements = static_cast<long>(record.ledger.total_placements());
    report.zero_copy_items =
        record.total_items_generated - static_cast<long>(record.ledger.items_with_copies());
    report.data_availability =
        data_availability(record.ledger, record.failure_plan, record.total_items_generated);
    report.average_replicas = average_replicas(record.ledger, record.total_items_generated,
                                               &report.average_replicas_undefined);
    report.replica_spread = replica_spread(record.ledger, record.layout);
    report.efficiency_curve = collection_efficiency(record.trace, record.total_items_generated);
    return report;
}

} // namespace draco
