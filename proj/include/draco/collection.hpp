#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "draco/config.hpp"
#include "draco/data.hpp"
#include "draco/geometry.hpp"
#include "draco/rng.hpp"

namespace draco {

struct World;

// One sink stop. `replies` records every candidate's new-item count at the
// site (ascending node id) so selection optimality is checkable afterwards.
struct CollectionVisit {
    Point site;
    std::optional<NodeId> selected;
    int new_items = 0;
    int cumulative_unique = 0;
    std::vector<std::pair<NodeId, int>> replies;
};

using CollectionTrace = std::vector<CollectionVisit>;

// Draws uniform points until one is outside `cr` of the current position and
// not exactly equal to a previously visited site. Requires cr < min(side)/2;
// throws after 1e6 rejections (misconfigured geometry).
Point generate_site(Rng& rng, const FieldGeometry& geometry, std::optional<Point> current_pos,
                    double cr, const std::vector<Point>& pvs);

// Arrival handlers: presence broadcast, reply collection, node selection and
// transfer, then bookkeeping (visited_sites, trace entry) — one site each.
void sink_arrive_draco(World& world, Point site);
void sink_arrive_sa_rw(World& world, Point site);
void sink_arrive_rw(World& world, Point site);

// Drives sink arrivals until m sites are visited or (Draco/SaRw) every alive
// node has been visited. Requires the world to be in the Collection phase.
const CollectionTrace& run_collection(World& world, int m);

std::string trace_to_csv(const CollectionTrace& trace);

} // namespace draco
