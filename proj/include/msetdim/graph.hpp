#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "msetdim/errors.hpp"

namespace msetdim {

/// Fixed-size bit set used for adjacency rows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits), words_((static_cast<std::size_t>(nbits) + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool operator==(const Bitset&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
                f(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            }
        }
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Adjacency is stored as one bit set per vertex; an optional label per
/// vertex is carried alongside and never consulted by any algorithm.
class Graph {
public:
    Graph() = default; // empty graph

    /// Builds a graph from an edge list. Duplicate edges collapse.
    /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges,
                                std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }
    const Bitset& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    long long edge_count() const;
    /// All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edge_list() const;

    /// Per-vertex display labels; empty vector when the graph is unlabeled.
    const std::vector<std::string>& labels() const { return labels_; }

private:
    Graph(int n, std::vector<Bitset> adj, std::vector<std::string> labels)
        : n_(n), adj_(std::move(adj)), labels_(std::move(labels)) {}

    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

/// True iff one traversal from vertex 0 reaches all vertices (true for n <= 1).
bool is_connected(const Graph& g);

} // namespace msetdim
