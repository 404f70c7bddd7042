#pragma once

#include <vector>

#include "draco/collection.hpp"
#include "draco/failure.hpp"
#include "draco/ledger.hpp"
#include "draco/topology.hpp"
#include "draco/world.hpp"

namespace draco {

struct SpreadRow {
    int replica_index = 0;      // 1-based
    double mean_distance = 0.0; // meters from the data owner
    long count = 0;
};

struct EfficiencyPoint {
    int nodes_visited = 0;      // productive visits so far
    double percent_collected = 0.0;
};

struct MetricsReport {
    double data_availability = 0.0;
    double average_replicas = 0.0;
    bool average_replicas_undefined = false;    // no items generated
    std::vector<SpreadRow> replica_spread;
    std::vector<EfficiencyPoint> efficiency_curve;
    int total_unique = 0;
    long total_placements = 0;
    long zero_copy_items = 0;
};

// Fraction of unique items with at least one copy on a node that is still
// alive at the end of dissemination (every planned failure has struck by
// then). Items that never got a copy count against the denominator.
double data_availability(const ReplicaLedger& ledger, const FailurePlan& plan, int total_unique);

// Total placements over total unique items, counted at end of dissemination
// regardless of later failures. total_unique == 0 reports 0 with the flag.
double average_replicas(const ReplicaLedger& ledger, int total_unique,
                        bool* undefined = nullptr);

// Mean owner-to-holder distance per replica index, indices contiguous from 1.
std::vector<SpreadRow> replica_spread(const ReplicaLedger& ledger, const NodeLayout& layout);

// Percent of all generated unique items gathered after each productive
// visit, starting from (0, 0). Plateaus below 100 when data was lost.
std::vector<EfficiencyPoint> collection_efficiency(const CollectionTrace& trace,
                                                   int total_unique);

MetricsReport compute_metrics(const SimulationRecord& record);

} // namespace draco
