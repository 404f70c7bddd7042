#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "draco/data.hpp"
#include "draco/geometry.hpp"
#include "draco/ledger.hpp"

namespace draco {

// Canonical line-oriented text forms, one record per line, comma-separated
// fields. List-valued fields join their elements with ';'; nested tuples use
// ':'. Doubles print as the shortest representation that parses back to the
// identical value. Field orders:
//
//   FieldGeometry       c1x,c1y,c2x,c2y
//   DataItemId          owner,seq
//   DataItem            owner,seq,generated_at
//   DataMessage         owner,seq,generated_at,remaining_r,hop_count,pr,pv,cn
//   NeighborAttributes  node,non,rm,last_heard
//   NodeState           id,x,y,sense_interval,next_seq,alive,buffer,n_att
//   SinkState           x,y,cr,max_sites,collected,visited_nodes,visited_sites
//   ReplicaPlacement    owner,seq,holder,replica_index,placed_at
//   DropRecord          owner,seq,node,reason,at
//
// Inside lists: DataItemId as owner:seq, n_att rows as node:non:rm:last_heard,
// points as x:y.

std::string format_double(double v);
double parse_double(std::string_view s);

std::string to_line(const FieldGeometry& g);
std::string to_line(const DataItemId& id);
std::string to_line(const DataItem& item);
std::string to_line(const DataMessage& msg);
std::string to_line(const NeighborAttributes& row);
std::string to_line(const NodeState& node);
std::string to_line(const SinkState& sink);
std::string to_line(const DataItemId& item, const ReplicaPlacement& p);
std::string to_line(const DropRecord& d);

FieldGeometry parse_field_geometry(std::string_view line);
DataItemId parse_data_item_id(std::string_view line);
DataItem parse_data_item(std::string_view line);
DataMessage parse_data_message(std::string_view line);
NeighborAttributes parse_neighbor_attributes(std::string_view line);
NodeState parse_node_state(std::string_view line);
SinkState parse_sink_state(std::string_view line);

std::vector<std::string_view> split(std::string_view s, char sep);

} // namespace draco
