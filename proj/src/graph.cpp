#include "msetdim/graph.hpp"

#include <string>
#include <vector>

namespace msetdim {

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges,
                            std::vector<std::string> labels) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("label count does not match vertex count");

    std::vector<Bitset> adj(static_cast<std::size_t>(n), Bitset(n));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ")");
        adj[static_cast<std::size_t>(u)].set(v);
        adj[static_cast<std::size_t>(v)].set(u);
    }
    return Graph(n, std::move(adj), std::move(labels));
}

long long Graph::edge_count() const {
    long long deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += degree(v);
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
        adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        g.neighbors(u).for_each([&](int v) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        });
    }
    return reached == n;
}

} // namespace msetdim
