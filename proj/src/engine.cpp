#include "draco/engine.hpp"

#include <stdexcept>

#include "draco/replication.hpp"
#include "draco/serialize.hpp"

namespace draco {

namespace {

void log_event(World& world, const Event& ev, const std::string& kind, const std::string& actor) {
    if (!world.trace_events) return;
    world.event_log.push_back(format_double(ev.fire_at) + "," + std::to_string(ev.tiebreak_seq) +
                              "," + kind + "," + actor);
}

std::string arrow(NodeId from, NodeId to) {
    return std::to_string(from.value) + "->" + std::to_string(to.value);
}

void start_collection_phase(World& world);
void advance_sink(World& world);

void dispatch(World& world, Event& ev) {
    std::visit(
        [&](auto& e) {
            using E = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<E, SenseTimerEvent>) {
                --world.pending_sense_timers;
                if (!world.alive(e.node)) return;   // lazily cancelled timer
                if (world.clock.phase != Phase::Dissemination) return;
                log_event(world, ev, "sense", std::to_string(e.node.value));
                on_sense_timer(world, e.node);
            } else if constexpr (std::is_same_v<E, AdvertTimerEvent>) {
                if (!world.alive(e.node)) return;
                if (world.clock.phase != Phase::Dissemination) return;
                log_event(world, ev, "advert", std::to_string(e.node.value));
                on_advert_timer(world, e.node);
            } else if constexpr (std::is_same_v<E, MessageDeliveryEvent>) {
                --world.in_flight_messages;
                const bool data = std::holds_alternative<DataMessage>(e.payload);
                if (!world.alive(e.to)) {
                    // receiver failed while the message was in flight
                    if (data) {
                        const auto& msg = std::get<DataMessage>(e.payload);
                        world.ledger.record_drop(msg.item.id, e.to, DropReason::in_transit_loss,
                                                 world.clock.now);
                    }
                    return;
                }
                if (world.config.drop_probability > 0.0 &&
                    uniform01(world.rng_loss) < world.config.drop_probability) {
                    if (data) {
                        const auto& msg = std::get<DataMessage>(e.payload);
                        world.ledger.record_drop(msg.item.id, e.to, DropReason::in_transit_loss,
                                                 world.clock.now);
                    }
                    return;
                }
                log_event(world, ev, data ? "delivery_data" : "delivery_advert",
                          arrow(e.from, e.to));
                if (data) {
                    handle_data_message(world, e.to, std::get<DataMessage>(e.payload));
                } else {
                    on_receive_advert(world, e.to, std::get<AdvertisementMessage>(e.payload));
                }
            } else if constexpr (std::is_same_v<E, NodeFailureEvent>) {
                if (!world.alive(e.node)) return;
                log_event(world, ev, "failure", std::to_string(e.node.value));
                apply_failure(world, e.node, world.clock.now);
            } else if constexpr (std::is_same_v<E, SinkArrivalEvent>) {
                if (world.clock.phase != Phase::Collection) {
                    throw std::logic_error("SinkArrival outside Collection phase");
                }
                log_event(world, ev, "sink_arrival",
                          format_double(e.site.x) + ":" + format_double(e.site.y));
                switch (world.config.collection_strategy) {
                    case SinkStrategyKind::Draco: sink_arrive_draco(world, e.site); break;
                    case SinkStrategyKind::SaRw: sink_arrive_sa_rw(world, e.site); break;
                    case SinkStrategyKind::Rw: sink_arrive_rw(world, e.site); break;
                }
                advance_sink(world);
            } else if constexpr (std::is_same_v<E, PhaseBoundaryEvent>) {
                if (world.clock.phase != Phase::Dissemination) return;
                // The dissemination phase ends only once every sense timer has
                // fired and every in-flight message has drained; until then the
                // barrier re-queues itself just behind the next pending event.
                if ((world.pending_sense_timers > 0 || world.in_flight_messages > 0) &&
                    !world.queue.empty()) {
                    schedule(world, world.queue.top().fire_at, PhaseBoundaryEvent{});
                    return;
                }
                log_event(world, ev, "phase_boundary", "-");
                if (world.failure_plan.mode == FailureMode::AtPhaseBoundary) {
                    for (NodeId victim : world.failure_plan.victims) {
                        if (world.alive(victim)) apply_failure(world, victim, world.clock.now);
                    }
                }
                world.clock.phase = Phase::Collection;
                start_collection_phase(world);
            }
        },
        ev.kind);
}

void start_collection_phase(World& world) {
    if (!world.config.collection_enabled || world.config.effective_max_sites() <= 0) {
        world.clock.phase = Phase::Done;
        return;
    }
    Point first = generate_site(world.rng_sites, world.layout.geometry, std::nullopt,
                                world.sink.cr, world.sink.visited_sites);
    schedule(world, world.clock.now, SinkArrivalEvent{first});
}

// After each arrival: either queue the next site or end the run.
void advance_sink(World& world) {
    const SinkState& sink = world.sink;
    bool done = sink.sites_visited() >= sink.max_sites;
    if (!done && world.config.collection_strategy != SinkStrategyKind::Rw) {
        bool all_visited = true;
        for (const auto& node : world.nodes) {
            if (node.alive && !sink.visited_nodes.contains(node.id)) {
                all_visited = false;
                break;
            }
        }
        done = all_visited;
    }
    if (done) {
        world.clock.phase = Phase::Done;
        return;
    }
    Point next = generate_site(world.rng_sites, world.layout.geometry, sink.position, sink.cr,
                               sink.visited_sites);
    schedule(world, world.clock.now, SinkArrivalEvent{next});
}

} // namespace

World make_world(const SimConfig& config, std::uint64_t seed, bool trace_events) {
    config.validate();
    World world;
    world.config = config;
    world.seed = seed;
    world.trace_events = trace_events;
    world.clock = SimClock{0.0, config.dissemination_duration, Phase::Dissemination};

    Rng layout_rng = derive_rng(seed, "layout");
    world.layout = deploy_uniform(config.n_nodes, config.field(), layout_rng);
    world.adjacency = build_adjacency(world.layout, config.alpha);

    Rng interval_rng = derive_rng(seed, "sense_intervals");
    world.nodes.reserve(config.n_nodes);
    for (int i = 1; i <= config.n_nodes; ++i) {
        NodeState node;
        node.id = NodeId{static_cast<std::uint32_t>(i)};
        node.position = world.layout.positions.at(node.id);
        node.sense_interval = uniform_real(interval_rng, config.sense_min, config.sense_max);
        world.nodes.push_back(std::move(node));
    }

    Rng failure_rng = derive_rng(seed, "failure");
    world.failure_plan = plan_failures(config.n_nodes, config.failure_fraction,
                                       config.failure_mode, config.dissemination_duration,
                                       failure_rng);

    world.rng_strategy = derive_rng(seed, "strategy");
    world.rng_sites = derive_rng(seed, "sites");
    world.rng_loss = derive_rng(seed, "loss");

    world.sink.cr = config.sink_cr;
    world.sink.max_sites = config.effective_max_sites();

    // Initial events, all inserted in node-id order for a stable tiebreak:
    // a hello advertisement at t=0, the first sense at one interval, then the
    // failure plan and the phase barrier.
    for (const auto& node : world.nodes) {
        schedule(world, 0.0, AdvertTimerEvent{node.id});
    }
    for (const auto& node : world.nodes) {
        if (node.sense_interval <= config.dissemination_duration) {
            schedule(world, node.sense_interval, SenseTimerEvent{node.id});
        }
    }
    if (world.failure_plan.mode == FailureMode::DuringDissemination) {
        for (const auto& [victim, at] : world.failure_plan.times) {
            schedule(world, at, NodeFailureEvent{victim});
        }
    }
    schedule(world, config.dissemination_duration, PhaseBoundaryEvent{});
    return world;
}

void schedule(World& world, double fire_at, EventKind kind) {
    if (fire_at < world.clock.now) {
        throw std::logic_error("schedule: event time " + format_double(fire_at) +
                               " is before now " + format_double(world.clock.now));
    }
    if (std::holds_alternative<SenseTimerEvent>(kind)) ++world.pending_sense_timers;
    if (std::holds_alternative<MessageDeliveryEvent>(kind)) ++world.in_flight_messages;
    world.queue.push(Event{fire_at, world.next_tiebreak++, std::move(kind)});
}

void broadcast(World& world, NodeId from, const MessagePayload& payload) {
    for (NodeId nb : world.adjacency.of(from)) {
        if (!world.alive(nb)) continue;
        schedule(world, world.clock.now + world.config.hop_delay,
                 MessageDeliveryEvent{from, nb, payload});
    }
}

void unicast(World& world, NodeId from, NodeId to, const MessagePayload& payload) {
    if (!world.adjacency.connected(from, to)) {
        throw std::logic_error("unicast: " + std::to_string(to.value) +
                               " is not a neighbor of " + std::to_string(from.value));
    }
    schedule(world, world.clock.now + world.config.hop_delay,
             MessageDeliveryEvent{from, to, payload});
}

bool step(World& world) {
    if (world.queue.empty()) return false;
    Event ev = world.queue.top();
    world.queue.pop();
    world.clock.now = ev.fire_at;
    dispatch(world, ev);
    return true;
}

SimulationRecord run_until_done(World& world) {
    while (step(world)) {
    }
    if (world.clock.phase == Phase::Dissemination) {
        // no events at all (e.g. zero-duration edge in tests)
        world.clock.phase = Phase::Done;
    }
    if (world.clock.phase == Phase::Collection) world.clock.phase = Phase::Done;

    SimulationRecord record;
    record.config = world.config;
    record.seed = world.seed;
    record.layout = world.layout;
    record.ledger = std::move(world.ledger);
    record.failure_plan = world.failure_plan;
    record.trace = std::move(world.trace);
    record.final_nodes = std::move(world.nodes);
    record.sink = std::move(world.sink);
    record.total_items_generated = world.total_items_generated;
    record.event_log = std::move(world.event_log);
    return record;
}

SimulationRecord run_simulation(const SimConfig& config, std::uint64_t seed, bool trace_events) {
    World world = make_world(config, seed, trace_events);
    return run_until_done(world);
}

const CollectionTrace& run_collection(World& world, int m) {
    if (world.clock.phase != Phase::Collection) {
        throw std::logic_error("run_collection: world is not in the Collection phase");
    }
    world.sink.max_sites = m;
    if (m > 0 && world.sink.sites_visited() < m) {
        Point first = generate_site(world.rng_sites, world.layout.geometry,
                                    world.sink.visited_sites.empty()
                                        ? std::optional<Point>{}
                                        : std::optional<Point>{world.sink.position},
                                    world.sink.cr, world.sink.visited_sites);
        schedule(world, world.clock.now, SinkArrivalEvent{first});
        while (world.clock.phase == Phase::Collection && step(world)) {
        }
    } else {
        world.clock.phase = Phase::Done;
    }
    return world.trace;
}

} // namespace draco
