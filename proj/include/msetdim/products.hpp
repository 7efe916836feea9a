#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "msetdim/codes.hpp"
#include "msetdim/graph.hpp"

namespace msetdim {

/// Bijection between factor pairs and flat product indices, left factor
/// major: (g, h) <-> g * right_size + h.
struct ProductIndexMap {
    int left_size = 0;
    int right_size = 0;

    int flat(int g, int h) const { return g * right_size + h; }
    std::pair<int, int> factors(int f) const { return {f / right_size, f % right_size}; }
};

/// Strong product: (g,h) ~ (g',h') iff each coordinate stays equal or moves
/// along an edge of its factor (and the pair moves at all).
std::pair<Graph, ProductIndexMap> strong_product(const Graph& g, const Graph& h);

Graph path_graph(int n);     // n >= 1
Graph complete_graph(int n); // n >= 1
Graph star(int leaves);      // K_{1,leaves}, center is vertex 0

/// 1-based grid coordinate; i is the column (first factor), j the row.
struct GridCoord {
    int i = 1;
    int j = 1;
    bool operator==(const GridCoord&) const = default;
};
std::string format_coords(std::span<const GridCoord> coords); // "(1,1),(2,1)"

/// P_n x P_n under the strong product (king moves on an n x n board),
/// with the coordinate <-> flat index map.
class KingGrid {
public:
    explicit KingGrid(int side);

    int side() const { return side_; }
    const Graph& graph() const { return graph_; }

    int flat(GridCoord c) const { return (c.i - 1) * side_ + (c.j - 1); }
    GridCoord coord(int v) const { return {v / side_ + 1, v % side_ + 1}; }
    std::vector<int> flatten(std::span<const GridCoord> coords) const; // sorted

private:
    int side_;
    Graph graph_;
};

/// Known multiset resolving set of the side-n king grid, or nullopt for
/// side <= 3 where none exists. Fixed 6-set for side 4; fixed corner sets
/// for sides 5 and 6; closed-form 4-sets for side >= 7 (one family per
/// parity).
std::optional<std::vector<GridCoord>> king_grid_witness(int side);

/// Closed-form code of a boundary vertex of the odd-side (>= 7) king grid
/// w.r.t. king_grid_witness(side). Throws std::invalid_argument when side
/// is even/too small or v is interior.
MultisetCode predicted_border_code(int side, GridCoord v);

/// True iff the codes w.r.t. the full vertex set are pairwise distinct.
bool is_multiset_distance_irregular(const Graph& g);

/// Tree with center 0 and `legs` legs of lengths 1, 2, ..., legs.
/// Requires legs >= 3. Leg vertices are numbered center-out, leg by leg.
Graph spider(int legs);

/// Verdict for the multiset dimension of g x K_n: finite exactly when
/// n == 2 and g is multiset distance irregular, in which case the value is
/// |V(g)|. Decided from the twin structure of the complete factor; the
/// exponential solver is never invoked.
struct StrongCompleteClass {
    bool finite = false;
    long long value = 0; // |V(g)| when finite
};
StrongCompleteClass classify_strong_with_complete(const Graph& g, int n);

/// Per-vertex code grid as text, rows printed top (j = side) to bottom
/// (j = 1). Cells are digit strings when every distance fits one digit,
/// comma-separated otherwise.
std::string code_grid_text(const KingGrid& kg, std::span<const int> landmarks);

} // namespace msetdim
