#include "msetdim/distance.hpp"

#include <vector>

#include "msetdim/errors.hpp"

namespace msetdim {

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dm(n);
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        auto* row = dm.d_.data() + static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
        row[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[static_cast<std::size_t>(head++)];
            std::uint16_t next = static_cast<std::uint16_t>(row[u] + 1);
            g.neighbors(u).for_each([&](int v) {
                if (row[v] == DistanceMatrix::kUnreachable) {
                    row[v] = next;
                    queue[static_cast<std::size_t>(tail++)] = v;
                }
            });
        }
        if (tail < n) dm.all_reachable_ = false;
    }
    return dm;
}

int diameter(const DistanceMatrix& dm) {
    if (!dm.all_reachable())
        throw DisconnectedError("diameter undefined: graph is disconnected");
    int best = 0;
    const int n = dm.size();
    for (int u = 0; u < n; ++u) {
        const std::uint16_t* row = dm.row(u);
        for (int v = 0; v < n; ++v)
            if (row[v] > best) best = row[v];
    }
    return best;
}

std::vector<int> distance_shell(const DistanceMatrix& dm, int v, int q) {
    if (v < 0 || v >= dm.size()) throw std::invalid_argument("vertex out of range");
    if (q < 0) throw std::invalid_argument("shell radius must be non-negative");
    std::vector<int> out;
    const std::uint16_t* row = dm.row(v);
    for (int u = 0; u < dm.size(); ++u)
        if (row[u] == q) out.push_back(u);
    return out;
}

} // namespace msetdim
