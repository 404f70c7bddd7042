#pragma once

#include <map>
#include <set>
#include <string>

#include "draco/geometry.hpp"
#include "draco/ids.hpp"
#include "draco/rng.hpp"

namespace draco {

struct NodeLayout {
    std::map<NodeId, Point> positions;
    FieldGeometry geometry;
};

// Disk-model connectivity: i and j are neighbors iff their distance is at
// most radius_alpha (closed disk, so exact ties connect).
struct AdjacencyMap {
    double radius_alpha = 0.0;
    std::map<NodeId, std::set<NodeId>> neighbors;

    const std::set<NodeId>& of(NodeId n) const { return neighbors.at(n); }
    bool connected(NodeId a, NodeId b) const { return neighbors.at(a).contains(b); }
};

// n independent uniform positions, ids 1..n. Deterministic given the rng state.
NodeLayout deploy_uniform(int n, const FieldGeometry& geometry, Rng& rng);

AdjacencyMap build_adjacency(const NodeLayout& layout, double alpha);

// Analytic per-node neighbor estimate pi*alpha^2*n/area - 1. May be negative
// for tiny n*alpha^2; returned as-is.
double expected_neighbors_per_node(double alpha, int n, double area);

// Analytic count of nodes within sink range at a random site: pi*cr^2*n/area.
double expected_nodes_in_sink_range(double cr, int n, double area);

// Text form: one "node_id,x,y" line per node, ascending id.
std::string layout_to_text(const NodeLayout& layout);
NodeLayout layout_from_text(const std::string& text, const FieldGeometry& geometry);

} // namespace draco
