#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "msetdim/graph.hpp"

namespace msetdim {

/// Edge-list text: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// graph6 ASCII encoding: N(n) followed by the upper triangle of the
/// adjacency matrix in column order, packed big-endian into 6-bit groups
/// biased by 63. n <= 62 uses the one-byte size; larger n the 126- or
/// 126 126-prefixed forms.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view line); // tolerates ">>graph6<<" header

} // namespace msetdim
