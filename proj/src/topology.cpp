#include "draco/topology.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

#include "draco/serialize.hpp"

namespace draco {

NodeLayout deploy_uniform(int n, const FieldGeometry& geometry, Rng& rng) {
    if (n < 1) throw std::invalid_argument("deploy_uniform: n must be >= 1");
    NodeLayout layout;
    layout.geometry = geometry;
    for (int i = 1; i <= n; ++i) {
        Point p{uniform_real(rng, geometry.c1.x, geometry.c2.x),
                uniform_real(rng, geometry.c1.y, geometry.c2.y)};
        layout.positions.emplace(NodeId{static_cast<std::uint32_t>(i)}, p);
    }
    return layout;
}

AdjacencyMap build_adjacency(const NodeLayout& layout, double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("build_adjacency: alpha must be > 0");
    AdjacencyMap adj;
    adj.radius_alpha = alpha;
    for (const auto& [id, pos] : layout.positions) adj.neighbors[id];
    for (auto it = layout.positions.begin(); it != layout.positions.end(); ++it) {
        auto jt = it;
        for (++jt; jt != layout.positions.end(); ++jt) {
            if (distance(it->second, jt->second) <= alpha) {
                adj.neighbors[it->first].insert(jt->first);
                adj.neighbors[jt->first].insert(it->first);
            }
        }
    }
    return adj;
}

double expected_neighbors_per_node(double alpha, int n, double area) {
    return std::numbers::pi * alpha * alpha * n / area - 1.0;
}

double expected_nodes_in_sink_range(double cr, int n, double area) {
    return std::numbers::pi * cr * cr * n / area;
}

std::string layout_to_text(const NodeLayout& layout) {
    std::string out;
    for (const auto& [id, pos] : layout.positions) {
        out += std::to_string(id.value) + "," + format_double(pos.x) + "," +
               format_double(pos.y) + "\n";
    }
    return out;
}

NodeLayout layout_from_text(const std::string& text, const FieldGeometry& geometry) {
    NodeLayout layout;
    layout.geometry = geometry;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto f = split(line, ',');
        if (f.size() != 3) throw std::invalid_argument("bad layout line: '" + line + "'");
        NodeId id{static_cast<std::uint32_t>(parse_double(f[0]))};
        Point p{parse_double(f[1]), parse_double(f[2])};
        if (!geometry.contains(p)) {
            throw std::invalid_argument("layout position outside field: '" + line + "'");
        }
        if (!layout.positions.emplace(id, p).second) {
            throw std::invalid_argument("duplicate node id in layout: " + std::to_string(id.value));
        }
    }
    return layout;
}

} // namespace draco
