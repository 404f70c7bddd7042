#include "draco/collection.hpp"

#include <algorithm>
#include <stdexcept>

#include "draco/serialize.hpp"
#include "draco/world.hpp"

namespace draco {

Point generate_site(Rng& rng, const FieldGeometry& geometry, std::optional<Point> current_pos,
                    double cr, const std::vector<Point>& pvs) {
    if (current_pos && cr >= std::min(geometry.width(), geometry.height()) / 2.0) {
        throw std::invalid_argument("generate_site: cr must be < half the smaller field side");
    }
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
        Point candidate{uniform_real(rng, geometry.c1.x, geometry.c2.x),
                        uniform_real(rng, geometry.c1.y, geometry.c2.y)};
        if (current_pos && distance(candidate, *current_pos) <= cr) continue;
        // Exact-equality membership: revisiting the same coordinates is the
        // literal exclusion; overlap with old sites' radii is allowed.
        if (std::find(pvs.begin(), pvs.end(), candidate) != pvs.end()) continue;
        return candidate;
    }
    throw std::runtime_error("generate_site: rejection sampling did not terminate");
}

namespace {

struct Candidate {
    NodeId id;
    double dist = 0.0;
    int new_items = 0;
};

// Alive nodes within sink range at the site, ascending id. When
// `exclude_visited` is set, previously selected nodes do not respond.
std::vector<Candidate> gather_candidates(const World& world, Point site, bool exclude_visited) {
    std::vector<Candidate> out;
    for (const auto& node : world.nodes) {
        if (!node.alive) continue;
        const double d = distance(node.position, site);
        if (d > world.sink.cr) continue;
        if (exclude_visited && world.sink.visited_nodes.contains(node.id)) continue;
        int fresh = 0;
        for (const auto& item : node.buffer) {
            if (!world.sink.collected.contains(item)) ++fresh;
        }
        out.push_back({node.id, d, fresh});
    }
    return out;
}

// Moves every not-yet-collected buffered item of `chosen` into the sink.
int transfer_new_items(World& world, NodeId chosen) {
    int moved = 0;
    for (const auto& item : world.node(chosen).buffer) {
        if (world.sink.collected.insert(item).second) ++moved;
    }
    return moved;
}

void finish_visit(World& world, Point site, std::optional<NodeId> selected, int new_items,
                  std::vector<Candidate> candidates) {
    SinkState& sink = world.sink;
    sink.position = site;
    sink.visited_sites.push_back(site);
    CollectionVisit visit;
    visit.site = site;
    visit.selected = selected;
    visit.new_items = new_items;
    visit.cumulative_unique = static_cast<int>(sink.collected.size());
    visit.replies.reserve(candidates.size());
    for (const auto& c : candidates) visit.replies.emplace_back(c.id, c.new_items);
    world.trace.push_back(std::move(visit));
}

} // namespace

void sink_arrive_draco(World& world, Point site) {
    auto candidates = gather_candidates(world, site, /*exclude_visited=*/true);
    // Highest number of new items wins; zero-new replies never get selected.
    const Candidate* best = nullptr;
    for (const auto& c : candidates) {
        if (c.new_items > 0 && (!best || c.new_items > best->new_items)) best = &c;
    }
    if (!best) {
        finish_visit(world, site, std::nullopt, 0, std::move(candidates));
        return;
    }
    const NodeId chosen = best->id;
    const int moved = transfer_new_items(world, chosen);
    world.sink.visited_nodes.insert(chosen);
    finish_visit(world, site, chosen, moved, std::move(candidates));
}

void sink_arrive_sa_rw(World& world, Point site) {
    auto candidates = gather_candidates(world, site, /*exclude_visited=*/true);
    // Nearest unvisited node, even if it has nothing new to offer.
    const Candidate* best = nullptr;
    for (const auto& c : candidates) {
        if (!best || c.dist < best->dist) best = &c;
    }
    if (!best) {
        finish_visit(world, site, std::nullopt, 0, std::move(candidates));
        return;
    }
    const NodeId chosen = best->id;
    const int moved = transfer_new_items(world, chosen);
    world.sink.visited_nodes.insert(chosen);
    finish_visit(world, site, chosen, moved, std::move(candidates));
}

void sink_arrive_rw(World& world, Point site) {
    auto candidates = gather_candidates(world, site, /*exclude_visited=*/false);
    const Candidate* best = nullptr;
    for (const auto& c : candidates) {
        if (!best || c.dist < best->dist) best = &c;
    }
    if (!best) {
        finish_visit(world, site, std::nullopt, 0, std::move(candidates));
        return;
    }
    // Revisits are possible and then simply yield nothing new.
    const NodeId chosen = best->id;
    const int moved = transfer_new_items(world, chosen);
    finish_visit(world, site, chosen, moved, std::move(candidates));
}

std::string trace_to_csv(const CollectionTrace& trace) {
    std::string out = "site_x,site_y,selected_node,new_items,cumulative_unique\n";
    for (const auto& v : trace) {
        out += format_double(v.site.x) + "," + format_double(v.site.y) + ",";
        out += v.selected ? std::to_string(v.selected->value) : std::string("-");
        out += "," + std::to_string(v.new_items) + "," + std::to_string(v.cumulative_unique) + "\n";
    }
    return out;
}

} // namespace draco
