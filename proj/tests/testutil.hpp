#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "msetdim/distance.hpp"
#include "msetdim/graph.hpp"

namespace msetdim::testutil {

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform, unlike the std distributions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

/// Random connected graph: random recursive tree plus extra edges.
Graph random_connected_graph(Rng& rng, int n);

/// Random vertex subset, ascending; may be empty.
std::vector<int> random_subset(Rng& rng, int n);

/// Every connected graph on exactly n vertices, one per isomorphism class
/// (canonical form = minimum adjacency bit string over all vertex
/// permutations). Feasible for n <= 6.
std::vector<Graph> connected_graph_catalog(int n);

/// Pruning-free reference: scans all subsets by size (lex order within a
/// size) with the comparison-sort verifier. Independent of the solver
/// pipeline; value is empty when no subset resolves.
struct ReferenceDim {
    std::optional<int> value;
    std::vector<int> witness;
};
ReferenceDim reference_multiset_dimension(const Graph& g);

/// True iff some k-subset is multiset resolving (plain nested enumeration).
bool any_multiset_resolving_of_size(const DistanceMatrix& dm, int k);

} // namespace msetdim::testutil
