#pragma once

#include <iosfwd>
#include <string>

#include "pf/graph.hpp"

namespace pf {

/// graph6 encoding of the loopless part (the format cannot carry loops).
std::string to_graph6(const BitGraph& g);
BitGraph from_graph6(const std::string& s);

/// Edge-list text: one "u v" row per edge with u <= v, loops as "u u".
void write_edge_list(const BitGraph& g, std::ostream& out);
/// Parses an edge list; n is max index + 1 unless a larger n is forced.
BitGraph read_edge_list(std::istream& in, std::int32_t force_n = -1);

/// Canonical loopless edge list used for hashing: sorted "u v" pairs with
/// u < v, one per line, newline-terminated.
std::string canonical_edge_list(const BitGraph& g);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

}  // namespace pf
