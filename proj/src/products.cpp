#include "msetdim/products.hpp"

#include <algorithm>
#include <stdexcept>

#include "msetdim/distance.hpp"
#include "msetdim/errors.hpp"

namespace msetdim {

std::pair<Graph, ProductIndexMap> strong_product(const Graph& g, const Graph& h) {
    ProductIndexMap map{g.vertex_count(), h.vertex_count()};
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < g.vertex_count(); ++a) {
        for (int x = 0; x < h.vertex_count(); ++x) {
            const int u = map.flat(a, x);
            // stay/step in the left factor x stay/step in the right one
            h.neighbors(x).for_each([&](int y) {
                if (x < y) edges.emplace_back(u, map.flat(a, y));
            });
            g.neighbors(a).for_each([&](int b) {
                if (a < b) {
                    edges.emplace_back(u, map.flat(b, x));
                    h.neighbors(x).for_each([&](int y) { edges.emplace_back(u, map.flat(b, y)); });
                }
            });
        }
    }
    return {Graph::from_edge_list(map.left_size * map.right_size, edges), map};
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path graph needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(leaves + 1, edges);
}

std::string format_coords(std::span<const GridCoord> coords) {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += "(" + std::to_string(coords[i].i) + "," + std::to_string(coords[i].j) + ")";
    }
    return out;
}

KingGrid::KingGrid(int side)
    : side_(side), graph_(strong_product(path_graph(side), path_graph(side)).first) {}

std::vector<int> KingGrid::flatten(std::span<const GridCoord> coords) const {
    std::vector<int> out;
    out.reserve(coords.size());
    for (GridCoord c : coords) {
        if (c.i < 1 || c.i > side_ || c.j < 1 || c.j > side_)
            throw std::invalid_argument("grid coordinate out of range");
        out.push_back(flat(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<GridCoord>> king_grid_witness(int side) {
    if (side <= 3) return std::nullopt; // diameter <= 2, no multiset resolving set
    if (side == 4)
        return std::vector<GridCoord>{{1, 1}, {2, 1}, {4, 1}, {1, 3}, {2, 3}, {2, 4}};
    if (side == 5) return std::vector<GridCoord>{{1, 1}, {2, 1}, {5, 1}, {1, 5}};
    if (side == 6) return std::vector<GridCoord>{{2, 1}, {2, 2}, {6, 1}, {1, 6}};
    if (side % 2 == 1) return std::vector<GridCoord>{{1, 1}, {2, 1}, {side, 1}, {1, side}};
    return std::vector<GridCoord>{{2, 2}, {2, 3}, {side, 2}, {2, side}};
}

MultisetCode predicted_border_code(int side, GridCoord v) {
    if (side < 7 || side % 2 == 0)
        throw std::invalid_argument("border codes are defined for odd sides >= 7");
    const auto n = static_cast<std::uint16_t>(side);
    auto u16 = [](int x) { return static_cast<std::uint16_t>(x); };
    if (v.j == side) // top row, including both corners
        return MultisetCode({u16(v.i - 1), u16(n - 1), u16(n - 1), u16(n - 1)});
    if (v.i == side) // right column below the top corner
        return MultisetCode({u16(v.j - 1), u16(n - 2), u16(n - 1), u16(n - 1)});
    if (v.i == 1 && v.j == 1)
        return MultisetCode({0, 1, u16(n - 1), u16(n - 1)});
    if (v.i == 1) // left column, corners excluded
        return MultisetCode({u16(v.j - 1), u16(v.j - 1), u16(n - v.j), u16(n - 1)});
    if (v.j == 1) // bottom row, corners excluded
        return MultisetCode({u16(v.i - 2), u16(v.i - 1), u16(n - v.i), u16(n - 1)});
    throw std::invalid_argument("vertex is not on the grid boundary");
}

bool is_multiset_distance_irregular(const Graph& g) {
    if (!is_connected(g))
        throw DisconnectedError("multiset distance irregularity requires a connected graph");
    const DistanceMatrix dm = all_pairs_distances(g);
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    return is_multiset_resolving(dm, all);
}

Graph spider(int legs) {
    if (legs < 3) throw std::invalid_argument("spider needs at least three legs");
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int leg = 0; leg < legs; ++leg) {
        int prev = 0; // center
        for (int step = 0; step <= leg; ++step) { // leg `leg` has leg+1 edges
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edge_list(next, edges);
}

StrongCompleteClass classify_strong_with_complete(const Graph& g, int n) {
    if (n < 2) throw std::invalid_argument("the complete factor needs at least two vertices");
    if (!is_connected(g))
        throw DisconnectedError("classification requires a connected left factor");
    StrongCompleteClass verdict;
    if (n >= 3) return verdict; // two same-copy vertices would share a code
    if (is_multiset_distance_irregular(g)) {
        verdict.finite = true;
        verdict.value = g.vertex_count(); // one full copy of g is a witness
    }
    return verdict;
}

std::string code_grid_text(const KingGrid& kg, std::span<const int> landmarks) {
    const DistanceMatrix dm = all_pairs_distances(kg.graph());
    const bool single_digit = diameter(dm) <= 9;
    std::string out;
    for (int j = kg.side(); j >= 1; --j) {
        for (int i = 1; i <= kg.side(); ++i) {
            if (i > 1) out += ' ';
            MultisetCode code = multiset_rep(dm, kg.flat({i, j}), landmarks);
            if (single_digit) {
                for (std::uint16_t e : code.entries()) out += static_cast<char>('0' + e);
            } else {
                out += code.to_string();
            }
        }
        out += '\n';
    }
    return out;
}

} // namespace msetdim
