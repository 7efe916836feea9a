#pragma once

#include <cstdint>
#include <vector>

#include "msetdim/graph.hpp"

namespace msetdim {

/// All-pairs hop distances. Entries are exact BFS distances; pairs with no
/// connecting path hold kUnreachable.
class DistanceMatrix {
public:
    static constexpr std::uint16_t kUnreachable = 0xffff;

    int size() const { return n_; }

    std::uint16_t operator()(int u, int v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(v)];
    }
    const std::uint16_t* row(int u) const {
        return d_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n_);
    }

    /// True iff no entry is kUnreachable (i.e. the graph was connected).
    bool all_reachable() const { return all_reachable_; }

private:
    explicit DistanceMatrix(int n)
        : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

    int n_ = 0;
    bool all_reachable_ = true;
    std::vector<std::uint16_t> d_;

    friend DistanceMatrix all_pairs_distances(const Graph& g);
};

/// Breadth-first search from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Maximum distance. Throws DisconnectedError when any pair is unreachable.
int diameter(const DistanceMatrix& dm);

/// Vertices at distance exactly q from v, ascending. Empty set allowed;
/// q = 0 yields {v}.
std::vector<int> distance_shell(const DistanceMatrix& dm, int v, int q);

} // namespace msetdim
