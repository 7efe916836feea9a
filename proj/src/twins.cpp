#include "msetdim/twins.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace msetdim {

namespace {

std::uint64_t hash_words(const std::vector<std::uint64_t>& words) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : words) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

// Groups vertices by key(v) equality; appends groups of size >= 2.
template <typename KeyFn>
void collect(const Graph& g, TwinKind kind, KeyFn key, std::vector<TwinClass>& out) {
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    const int n = g.vertex_count();
    std::vector<Bitset> keys;
    keys.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) keys.push_back(key(v));
    for (int v = 0; v < n; ++v) buckets[hash_words(keys[static_cast<std::size_t>(v)].words())].push_back(v);

    for (auto& [h, verts] : buckets) {
        // resolve hash buckets into true equality classes
        std::vector<char> used(verts.size(), 0);
        for (std::size_t a = 0; a < verts.size(); ++a) {
            if (used[a]) continue;
            TwinClass cls{kind, {verts[a]}};
            for (std::size_t b = a + 1; b < verts.size(); ++b) {
                if (!used[b] && keys[static_cast<std::size_t>(verts[a])] ==
                                    keys[static_cast<std::size_t>(verts[b])]) {
                    used[b] = 1;
                    cls.members.push_back(verts[b]);
                }
            }
            if (cls.members.size() >= 2) out.push_back(std::move(cls));
        }
    }
}

} // namespace

int TwinReport::max_class_size() const {
    int best = 0;
    for (const auto& c : classes) best = std::max(best, static_cast<int>(c.members.size()));
    return best;
}

TwinReport twin_classes(const Graph& g) {
    TwinReport report;
    collect(g, TwinKind::open, [&](int v) { return g.neighbors(v); }, report.classes);
    collect(
        g, TwinKind::closed,
        [&](int v) {
            Bitset closed = g.neighbors(v);
            closed.set(v);
            return closed;
        },
        report.classes);
    for (auto& c : report.classes) std::sort(c.members.begin(), c.members.end());
    std::sort(report.classes.begin(), report.classes.end(),
              [](const TwinClass& a, const TwinClass& b) {
                  return a.members.front() < b.members.front();
              });
    return report;
}

} // namespace msetdim
