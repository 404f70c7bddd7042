#include "draco/serialize.hpp"

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <system_error>

namespace draco {

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, end);
}

double parse_double(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad double: '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

namespace {

std::int64_t parse_i64(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad integer: '" + std::string(s) + "'");
    }
    return v;
}

std::uint32_t parse_u32(std::string_view s) {
    auto v = parse_i64(s);
    if (v < 0 || v > 0xFFFFFFFFll) throw std::invalid_argument("integer out of range");
    return static_cast<std::uint32_t>(v);
}

std::string item_token(const DataItemId& id) {
    return std::to_string(id.owner.value) + ":" + std::to_string(id.seq);
}

DataItemId parse_item_token(std::string_view tok) {
    auto parts = split(tok, ':');
    if (parts.size() != 2) throw std::invalid_argument("bad item token");
    return DataItemId{NodeId{parse_u32(parts[0])}, parse_u32(parts[1])};
}

template <typename Range, typename Fmt>
std::string join(const Range& r, Fmt fmt) {
    std::string out;
    bool first = true;
    for (const auto& v : r) {
        if (!first) out += ';';
        out += fmt(v);
        first = false;
    }
    return out;
}

std::string join_ids(const std::vector<NodeId>& ids) {
    return join(ids, [](NodeId n) { return std::to_string(n.value); });
}

std::vector<NodeId> parse_id_list(std::string_view field) {
    std::vector<NodeId> out;
    if (field.empty()) return out;
    for (auto tok : split(field, ';')) out.push_back(NodeId{parse_u32(tok)});
    return out;
}

} // namespace

std::string_view to_string(DropReason r) {
    switch (r) {
        case DropReason::no_candidate: return "no_candidate";
        case DropReason::buffer_full_terminal: return "buffer_full_terminal";
        case DropReason::in_transit_loss: return "in_transit_loss";
    }
    return "?";
}

std::string to_line(const FieldGeometry& g) {
    return format_double(g.c1.x) + "," + format_double(g.c1.y) + "," +
           format_double(g.c2.x) + "," + format_double(g.c2.y);
}

std::string to_line(const DataItemId& id) {
    return std::to_string(id.owner.value) + "," + std::to_string(id.seq);
}

std::string to_line(const DataItem& item) {
    return to_line(item.id) + "," + format_double(item.generated_at);
}

std::string to_line(const DataMessage& msg) {
    return to_line(msg.item) + "," + std::to_string(msg.remaining_r) + "," +
           std::to_string(msg.hop_count) + "," + join_ids(msg.pr) + "," + join_ids(msg.pv) +
           "," + join(msg.cn, [](NodeId n) { return std::to_string(n.value); });
}

std::string to_line(const NeighborAttributes& row) {
    return std::to_string(row.node.value) + "," + std::to_string(row.non) + "," +
           std::to_string(row.rm) + "," + format_double(row.last_heard);
}

std::string to_line(const NodeState& node) {
    std::string natt = join(node.n_att, [](const auto& kv) {
        const NeighborAttributes& r = kv.second;
        return std::to_string(r.node.value) + ":" + std::to_string(r.non) + ":" +
               std::to_string(r.rm) + ":" + format_double(r.last_heard);
    });
    return std::to_string(node.id.value) + "," + format_double(node.position.x) + "," +
           format_double(node.position.y) + "," + format_double(node.sense_interval) + "," +
           std::to_string(node.next_seq) + "," + (node.alive ? "1" : "0") + "," +
           join(node.buffer, item_token) + "," + natt;
}

std::string to_line(const SinkState& sink) {
    return format_double(sink.position.x) + "," + format_double(sink.position.y) + "," +
           format_double(sink.cr) + "," + std::to_string(sink.max_sites) + "," +
           join(sink.collected, item_token) + "," +
           join(sink.visited_nodes, [](NodeId n) { return std::to_string(n.value); }) + "," +
           join(sink.visited_sites, [](const Point& p) {
               return format_double(p.x) + ":" + format_double(p.y);
           });
}

std::string to_line(const DataItemId& item, const ReplicaPlacement& p) {
    return to_line(item) + "," + std::to_string(p.holder.value) + "," +
           std::to_string(p.replica_index) + "," + format_double(p.placed_at);
}

std::string to_line(const DropRecord& d) {
    return to_line(d.item) + "," + std::to_string(d.node.value) + "," +
           std::string(to_string(d.reason)) + "," + format_double(d.at);
}

namespace {

void expect_fields(const std::vector<std::string_view>& f, std::size_t n, const char* what) {
    if (f.size() != n) {
        throw std::invalid_argument(std::string("bad ") + what + " line: expected " +
                                    std::to_string(n) + " fields, got " + std::to_string(f.size()));
    }
}

} // namespace

FieldGeometry parse_field_geometry(std::string_view line) {
    auto f = split(line, ',');
    expect_fields(f, 4, "FieldGeometry");
    return FieldGeometry::from_corners({parse_double(f[0]), parse_double(f[1])},
                                       {parse_double(f[2]), parse_double(f[3])});
}

DataItemId parse_data_item_id(std::string_view line) {
    auto f = split(line, ',');
    expect_fields(f, 2, "DataItemId");
    return DataItemId{NodeId{parse_u32(f[0])}, parse_u32(f[1])};
}

DataItem parse_data_item(std::string_view line) {
    auto f = split(line, ',');
    expect_fields(f, 3, "DataItem");
    return DataItem{{NodeId{parse_u32(f[0])}, parse_u32(f[1])}, parse_double(f[2])};
}

DataMessage parse_data_message(std::string_view line) {
    auto f = split(line, ',');
    expect_fields(f, 8, "DataMessage");
    DataMessage msg;
    msg.item = DataItem{{NodeId{parse_u32(f[0])}, parse_u32(f[1])}, parse_double(f[2])};
    msg.remaining_r = static_cast<int>(parse_i64(f[3]));
    msg.hop_count = static_cast<int>(parse_i64(f[4]));
    msg.pr = parse_id_list(f[5]);
    msg.pv = parse_id_list(f[6]);
    for (auto n : parse_id_list(f[7])) msg.cn.insert(n);
    return msg;
}

NeighborAttributes parse_neighbor_attributes(std::string_view line) {
    auto f = split(line, ',');
    expect_fields(f, 4, "NeighborAttributes");
    return NeighborAttributes{NodeId{parse_u32(f[0])}, static_cast<int>(parse_i64(f[1])),
                              static_cast<int>(parse_i64(f[2])), parse_double(f[3])};
}

NodeState parse_node_state(std::string_view line) {
    auto f = split(line, ',');
    expect_fields(f, 8, "NodeState");
    NodeState node;
    node.id = NodeId{parse_u32(f[0])};
    node.position = {parse_double(f[1]), parse_double(f[2])};
    node.sense_interval = parse_double(f[3]);
    node.next_seq = parse_u32(f[4]);
    node.alive = f[5] == "1";
    if (!f[6].empty()) {
        for (auto tok : split(f[6], ';')) node.buffer.push_back(parse_item_token(tok));
    }
    if (!f[7].empty()) {
        for (auto tok : split(f[7], ';')) {
            auto parts = split(tok, ':');
            expect_fields(parts, 4, "n_att row");
            NeighborAttributes row{NodeId{parse_u32(parts[0])}, static_cast<int>(parse_i64(parts[1])),
                                   static_cast<int>(parse_i64(parts[2])), parse_double(parts[3])};
            node.n_att.emplace(row.node, row);
        }
    }
    return node;
}

SinkState parse_sink_state(std::string_view line) {
    auto f = split(line, ',');
    expect_fields(f, 7, "SinkState");
    SinkState sink;
    sink.position = {parse_double(f[0]), parse_double(f[1])};
    sink.cr = parse_double(f[2]);
    sink.max_sites = static_cast<int>(parse_i64(f[3]));
    if (!f[4].empty()) {
        for (auto tok : split(f[4], ';')) sink.collected.insert(parse_item_token(tok));
    }
    for (auto n : parse_id_list(f[5])) sink.visited_nodes.insert(n);
    if (!f[6].empty()) {
        for (auto tok : split(f[6], ';')) {
            auto parts = split(tok, ':');
            expect_fields(parts, 2, "point");
            sink.visited_sites.push_back({parse_double(parts[0]), parse_double(parts[1])});
        }
    }
    return sink;
}

} // namespace draco
