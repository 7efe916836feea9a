#include "testutil.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "msetdim/codes.hpp"

namespace msetdim::testutil {

Graph random_connected_graph(Rng& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
    // sprinkle extra edges with a density drawn per graph
    const std::uint64_t density = rng.below(70); // percent
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(density, 100)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

std::vector<int> random_subset(Rng& rng, int n) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (rng.chance(1, 3)) s.push_back(v);
    return s;
}

namespace {

// pair (u, v), u < v  <->  bit index in lexicographic pair order
int pair_bit(int u, int v, int n) {
    int idx = 0;
    for (int a = 0; a < u; ++a) idx += n - 1 - a;
    return idx + (v - u - 1);
}

bool mask_connected(int n, std::uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (!(mask >> b & 1)) continue;
            std::uint32_t ubit = std::uint32_t{1} << pairs[b].first;
            std::uint32_t vbit = std::uint32_t{1} << pairs[b].second;
            if ((seen & ubit) && !(seen & vbit)) next |= vbit;
            if ((seen & vbit) && !(seen & ubit)) next |= ubit;
        }
        seen |= next;
        frontier = next;
    }
    return seen == (std::uint32_t{1} << n) - 1;
}

} // namespace

std::vector<Graph> connected_graph_catalog(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int nbits = static_cast<int>(pairs.size());

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> bit_maps; // target bit index per permutation
    do {
        std::vector<int> map(static_cast<std::size_t>(nbits));
        for (int b = 0; b < nbits; ++b) {
            int u = perm[static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].first)];
            int v = perm[static_cast<std::size_t>(pairs[static_cast<std::size_t>(b)].second)];
            if (u > v) std::swap(u, v);
            map[static_cast<std::size_t>(b)] = pair_bit(u, v, n);
        }
        bit_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::unordered_set<std::uint32_t> canon_seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << nbits); ++mask) {
        if (n > 1 && !mask_connected(n, mask, pairs)) continue;
        std::uint32_t canon = ~std::uint32_t{0};
        for (const auto& map : bit_maps) {
            std::uint32_t relabeled = 0;
            for (int b = 0; b < nbits; ++b)
                if (mask >> b & 1) relabeled |= std::uint32_t{1} << map[static_cast<std::size_t>(b)];
            canon = std::min(canon, relabeled);
            if (canon == 0) break;
        }
        if (!canon_seen.insert(canon).second) continue;
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < nbits; ++b)
            if (canon >> b & 1) edges.push_back(pairs[static_cast<std::size_t>(b)]);
        out.push_back(Graph::from_edge_list(n, edges));
    }
    return out;
}

bool any_multiset_resolving_of_size(const DistanceMatrix& dm, int k) {
    const int n = dm.size();
    if (k == 0) return n <= 1;
    if (k > n) return false;
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    for (;;) {
        if (is_multiset_resolving(dm, c, CheckStrategy::sorted)) return true;
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

ReferenceDim reference_multiset_dimension(const Graph& g) {
    const int n = g.vertex_count();
    const DistanceMatrix dm = all_pairs_distances(g);
    for (int k = 0; k <= n; ++k) {
        if (k == 0) {
            if (n <= 1) return {0, {}};
            continue;
        }
        std::vector<int> c(static_cast<std::size_t>(k));
        std::iota(c.begin(), c.end(), 0);
        for (;;) {
            if (is_multiset_resolving(dm, c, CheckStrategy::sorted)) return {k, c};
            int i = k - 1;
            while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return {std::nullopt, {}};
}

} // namespace msetdim::testutil
