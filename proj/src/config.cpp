#include "draco/config.hpp"

#include <stdexcept>
#include <string>

#include "draco/rng.hpp"
#include "draco/serialize.hpp"

namespace draco {

std::string_view to_string(ReplicationStrategyKind k) {
    switch (k) {
        case ReplicationStrategyKind::Draco: return "draco";
        case ReplicationStrategyKind::Greedy: return "greedy";
        case ReplicationStrategyKind::Random: return "random";
    }
    return "?";
}

std::string_view to_string(SinkStrategyKind k) {
    switch (k) {
        case SinkStrategyKind::Draco: return "draco";
        case SinkStrategyKind::SaRw: return "sa_rw";
        case SinkStrategyKind::Rw: return "rw";
    }
    return "?";
}

std::string_view to_string(FailureMode m) {
    switch (m) {
        case FailureMode::DuringDissemination: return "during_dissemination";
        case FailureMode::AtPhaseBoundary: return "at_phase_boundary";
    }
    return "?";
}

ReplicationStrategyKind parse_replication_strategy(std::string_view s) {
    if (s == "draco") return ReplicationStrategyKind::Draco;
    if (s == "greedy") return ReplicationStrategyKind::Greedy;
    if (s == "random") return ReplicationStrategyKind::Random;
    throw std::invalid_argument("unknown replication strategy: '" + std::string(s) +
                                "' (expected draco|greedy|random)");
}

SinkStrategyKind parse_sink_strategy(std::string_view s) {
    if (s == "draco") return SinkStrategyKind::Draco;
    if (s == "sa_rw") return SinkStrategyKind::SaRw;
    if (s == "rw") return SinkStrategyKind::Rw;
    throw std::invalid_argument("unknown collection strategy: '" + std::string(s) +
                                "' (expected draco|sa_rw|rw)");
}

FailureMode parse_failure_mode(std::string_view s) {
    if (s == "during_dissemination") return FailureMode::DuringDissemination;
    if (s == "at_phase_boundary") return FailureMode::AtPhaseBoundary;
    throw std::invalid_argument("unknown failure mode: '" + std::string(s) +
                                "' (expected during_dissemination|at_phase_boundary)");
}

void SimConfig::validate() const {
    auto fail = [](const std::string& key, const std::string& why) {
        throw std::invalid_argument("config error: " + key + " " + why);
    };
    if (!(field_width > 0)) fail("field.width", "must be > 0");
    if (!(field_height > 0)) fail("field.height", "must be > 0");
    if (n_nodes < 1) fail("nodes.count", "must be >= 1");
    if (!(alpha > 0)) fail("nodes.alpha", "must be > 0");
    if (buffer_capacity < 1) fail("nodes.buffer_capacity", "must be >= 1");
    if (!(sense_min > 0) || sense_max < sense_min)
        fail("nodes.sense_min/sense_max", "need 0 < sense_min <= sense_max");
    if (replication_degree < 1) fail("replication.degree", "must be >= 1");
    if (failure_fraction < 0 || failure_fraction > 1)
        fail("failure.fraction", "must be in [0,1]");
    if (collection_enabled) {
        if (!(sink_cr > 0)) fail("collection.cr", "must be > 0");
        if (sink_cr >= std::min(field_width, field_height) / 2)
            fail("collection.cr", "must be < half the smaller field side (site sampling)");
        if (max_sites < 0) fail("collection.max_sites", "must be >= 0");
    }
    if (!(dissemination_duration > 0)) fail("sim.dissemination_duration", "must be > 0");
    if (!(advert_interval > 0)) fail("sim.advert_interval", "must be > 0");
    if (!(hop_delay > 0)) fail("sim.hop_delay", "must be > 0");
    if (!(stale_factor > 0)) fail("sim.stale_factor", "must be > 0");
    if (drop_probability < 0 || drop_probability > 1)
        fail("sim.drop_probability", "must be in [0,1]");
}

std::string SimConfig::canonical_text() const {
    std::string out;
    auto kv = [&out](std::string_view key, const std::string& value) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    };
    kv("field.width", format_double(field_width));
    kv("field.height", format_double(field_height));
    kv("nodes.count", std::to_string(n_nodes));
    kv("nodes.alpha", format_double(alpha));
    kv("nodes.buffer_capacity", std::to_string(buffer_capacity));
    kv("nodes.sense_min", format_double(sense_min));
    kv("nodes.sense_max", format_double(sense_max));
    kv("replication.strategy", std::string(to_string(replication_strategy)));
    kv("replication.degree", std::to_string(replication_degree));
    kv("failure.fraction", format_double(failure_fraction));
    kv("failure.mode", std::string(to_string(failure_mode)));
    kv("collection.enabled", collection_enabled ? "1" : "0");
    kv("collection.strategy", std::string(to_string(collection_strategy)));
    kv("collection.cr", format_double(sink_cr));
    kv("collection.max_sites", std::to_string(max_sites));
    kv("sim.dissemination_duration", format_double(dissemination_duration));
    kv("sim.advert_interval", format_double(advert_interval));
    kv("sim.hop_delay", format_double(hop_delay));
    kv("sim.stale_factor", format_double(stale_factor));
    kv("sim.drop_probability", format_double(drop_probability));
    return out;
}

std::uint64_t SimConfig::hash() const {
    return fnv1a64(canonical_text());
}

void SimConfig::apply_override(std::string_view key, std::string_view value) {
    auto as_int = [&](int min_v) {
        int v = static_cast<int>(parse_double(value));
        if (v < min_v) throw std::invalid_argument("config error: " + std::string(key) + " out of range");
        return v;
    };
    if (key == "field.width") field_width = parse_double(value);
    else if (key == "field.height") field_height = parse_double(value);
    else if (key == "nodes.count") n_nodes = as_int(1);
    else if (key == "nodes.alpha") alpha = parse_double(value);
    else if (key == "nodes.buffer_capacity") buffer_capacity = as_int(1);
    else if (key == "nodes.sense_min") sense_min = parse_double(value);
    else if (key == "nodes.sense_max") sense_max = parse_double(value);
    else if (key == "replication.strategy") replication_strategy = parse_replication_strategy(value);
    else if (key == "replication.degree") replication_degree = as_int(1);
    else if (key == "failure.fraction") failure_fraction = parse_double(value);
    else if (key == "failure.mode") failure_mode = parse_failure_mode(value);
    else if (key == "collection.enabled") collection_enabled = value == "1" || value == "true";
    else if (key == "collection.strategy") collection_strategy = parse_sink_strategy(value);
    else if (key == "collection.cr") sink_cr = parse_double(value);
    else if (key == "collection.max_sites") max_sites = as_int(0);
    else if (key == "sim.dissemination_duration") dissemination_duration = parse_double(value);
    else if (key == "sim.advert_interval") advert_interval = parse_double(value);
    else if (key == "sim.hop_delay") hop_delay = parse_double(value);
    else if (key == "sim.stale_factor") stale_factor = parse_double(value);
    else if (key == "sim.drop_probability") drop_probability = parse_double(value);
    else throw std::invalid_argument("config error: unknown key '" + std::string(key) + "'");
}

} // namespace draco
