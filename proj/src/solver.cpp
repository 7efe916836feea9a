#include "msetdim/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <limits>
#include <mutex>
#include <thread>

#include "msetdim/distance.hpp"
#include "msetdim/errors.hpp"
#include "msetdim/twins.hpp"

namespace msetdim {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a > kU64Max - b) ? kU64Max : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kU64Max / b) return kU64Max;
    return a * b;
}

// C(n, k), saturating at uint64 max.
std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is integral at every step
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > kU64Max / num) return kU64Max;
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

// Number of k-subsets of [0, n) lexicographically before c.
std::uint64_t lex_rank(std::span<const int> c, int n) {
    std::uint64_t rank = 0;
    int prev = -1;
    const int k = static_cast<int>(c.size());
    for (int t = 0; t < k; ++t) {
        for (int j = prev + 1; j < c[t]; ++j)
            rank = sat_add(rank, binom(n - 1 - j, k - 1 - t));
        prev = c[t];
    }
    return rank;
}

struct Deadline {
    std::chrono::steady_clock::time_point at{};
    bool enabled = false;

    static Deadline in(double seconds) {
        Deadline d;
        if (seconds > 0) {
            d.enabled = true;
            d.at = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(seconds));
        }
        return d;
    }
    bool expired() const { return enabled && std::chrono::steady_clock::now() >= at; }
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Advances c (with c[0] pinned) to the next combination over [c[0]+1, n).
// Returns false when the range is exhausted.
bool next_suffix(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 1; --i) {
        if (c[static_cast<std::size_t>(i)] < n - (k - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// Lexicographically first size-k subset of [0, n) accepted by the predicate,
// or nullopt. Work splits into independent ranges by first element; the
// merge keeps the range with the smallest first element, so the result does
// not depend on the worker count. make_pred() is called once per worker and
// must return an independent callable.
template <typename MakePred>
std::optional<std::vector<int>> find_first_subset(int n, int k, int threads,
                                                  const Deadline& deadline,
                                                  const MakePred& make_pred) {
    if (k == 0) {
        auto pred = make_pred();
        if (pred(std::span<const int>{})) return std::vector<int>{};
        return std::nullopt;
    }
    if (k > n) return std::nullopt;

    const int range_count = n - k + 1;
    threads = std::min(resolve_threads(threads), range_count);

    std::atomic<int> next_first{0};
    std::atomic<int> best_first{std::numeric_limits<int>::max()};
    std::atomic<bool> out_of_time{false};
    std::vector<std::vector<int>> hits(static_cast<std::size_t>(range_count));

    auto worker = [&]() {
        auto pred = make_pred();
        std::vector<int> c(static_cast<std::size_t>(k));
        for (;;) {
            int first = next_first.fetch_add(1);
            if (first >= range_count) return;
            if (first >= best_first.load(std::memory_order_relaxed)) return;

            for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = first + i;
            unsigned tick = 0;
            do {
                if (pred(std::span<const int>(c))) {
                    hits[static_cast<std::size_t>(first)] = c;
                    int seen = best_first.load();
                    while (first < seen && !best_first.compare_exchange_weak(seen, first)) {
                    }
                    break;
                }
                if ((++tick & 0x3ff) == 0) {
                    if (best_first.load(std::memory_order_relaxed) < first) break;
                    if (deadline.expired()) {
                        out_of_time.store(true);
                        return;
                    }
                }
            } while (next_suffix(c, n));
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (out_of_time.load()) throw GuardError("wall-clock budget exceeded during subset scan");

    int winner = best_first.load();
    if (winner == std::numeric_limits<int>::max()) return std::nullopt;
    return hits[static_cast<std::size_t>(winner)];
}

void check_subset_budget(const SolverOptions& opts, std::uint64_t already,
                         std::uint64_t next_size) {
    if (opts.max_subsets > 0 && sat_add(already, next_size) > opts.max_subsets)
        throw GuardError("subset budget exceeded: scanning the next size needs " +
                         std::to_string(next_size) + " more candidates (limit " +
                         std::to_string(opts.max_subsets) + ")");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<int> path_endpoints(const Graph& g) {
    std::vector<int> ends;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) ends.push_back(v);
    return ends;
}

} // namespace

std::string_view to_string(InfiniteReason reason) {
    switch (reason) {
        case InfiniteReason::none: return "none";
        case InfiniteReason::twin_class_overflow: return "twin-class-overflow";
        case InfiniteReason::exhausted_all_subsets: return "exhausted-all-subsets";
        case InfiniteReason::diameter_two_shortcut: return "diameter-two-shortcut";
    }
    return "unknown";
}

std::uint64_t multichoose(int d, int k) {
    if (k < 0) throw std::invalid_argument("multichoose: k must be non-negative");
    if (d < 1) throw std::invalid_argument("multichoose: d must be positive");
    return binom(d + k - 1, k);
}

int counting_lower_bound(int n, int d) {
    if (d < 1) return n <= 1 ? 0 : 1;
    int k = 0;
    while (multichoose(d, k) < static_cast<std::uint64_t>(std::max(0, n - k))) ++k;
    return k;
}

bool is_path_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g)) return false;
    if (n <= 2) return true;
    int deg1 = 0;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 1)
            ++deg1;
        else if (d != 2)
            return false;
    }
    return deg1 == 2;
}

std::string DimResult::to_key_value() const {
    std::string out;
    out += "value = " + (value ? std::to_string(*value) : std::string("infinity")) + "\n";
    out += "reason = " + std::string(to_string(reason)) + "\n";
    if (value) {
        out += "witness = ";
        for (std::size_t i = 0; i < witness.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(witness[i]);
        }
        out += "\n";
    }
    out += "lower_bound.path-check = " + std::to_string(lower_bounds.path_check) + "\n";
    out += "lower_bound.no-size-2 = " + std::to_string(lower_bounds.no_size_two) + "\n";
    out += "lower_bound.metric-dimension = " + std::to_string(lower_bounds.metric_dimension) + "\n";
    out += "lower_bound.twin-pairs = " + std::to_string(lower_bounds.twin_pairs) + "\n";
    out += "lower_bound.multichoose = " + std::to_string(lower_bounds.multichoose) + "\n";
    out += "subsets_examined = " + std::to_string(subsets_examined) + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "wall_time_ms = %.3f\n", wall_time_ms);
    out += buf;
    return out;
}

MetricDimResult metric_dimension(const Graph& g, const SolverOptions& opts) {
    if (!is_connected(g)) throw DisconnectedError("metric dimension requires a connected graph");
    const int n = g.vertex_count();
    if (n > opts.max_n)
        throw GuardError("graph has " + std::to_string(n) +
                         " vertices; exhaustive search guard is " + std::to_string(opts.max_n));

    const DistanceMatrix dm = all_pairs_distances(g);
    const Deadline deadline = Deadline::in(opts.budget_seconds);
    auto make_pred = [&dm]() {
        return [checker = ResolvingChecker(dm)](std::span<const int> s) mutable {
            return checker.resolving(s);
        };
    };

    MetricDimResult result;
    std::uint64_t examined = 0;
    for (int k = (n == 1 ? 0 : 1); k <= n; ++k) {
        check_subset_budget(opts, examined, binom(n, k));
        auto hit = find_first_subset(n, k, opts.threads, deadline, make_pred);
        if (hit) {
            result.value = k;
            result.witness = std::move(*hit);
            result.subsets_examined =
                sat_add(examined, sat_add(lex_rank(result.witness, n), 1));
            return result;
        }
        examined = sat_add(examined, binom(n, k));
    }
    // S = V always resolves a connected graph, so the loop cannot fall through
    throw std::logic_error("metric dimension search exhausted all sizes");
}

DimResult multiset_dimension(const Graph& g, const SolverOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!is_connected(g))
        throw DisconnectedError("multiset dimension requires a connected graph");
    const int n = g.vertex_count();
    if (n > opts.max_n)
        throw GuardError("graph has " + std::to_string(n) +
                         " vertices; exhaustive search guard is " + std::to_string(opts.max_n));

    DimResult result;
    if (n == 1) { // the empty set distinguishes a single vertex
        result.value = 0;
        result.wall_time_ms = ms_since(t0);
        return result;
    }
    if (is_path_graph(g)) {
        auto ends = path_endpoints(g);
        result.value = 1;
        result.witness = {*std::min_element(ends.begin(), ends.end())};
        result.lower_bounds.path_check = 1;
        result.wall_time_ms = ms_since(t0);
        return result;
    }

    const TwinReport twins = twin_classes(g);
    if (twins.max_class_size() >= 3) {
        // two members would stay outside any candidate set (or sit inside it
        // together) and share a code either way
        result.reason = InfiniteReason::twin_class_overflow;
        result.wall_time_ms = ms_since(t0);
        return result;
    }

    const DistanceMatrix dm = all_pairs_distances(g);
    const int d = diameter(dm);

    result.lower_bounds.path_check = 2;
    result.lower_bounds.no_size_two = 3;
    result.lower_bounds.metric_dimension = metric_dimension(g, opts).value;
    result.lower_bounds.twin_pairs = twins.class_count();
    result.lower_bounds.multichoose = counting_lower_bound(n, d);

    if (opts.diameter_two_shortcut && d <= 2) {
        result.reason = InfiniteReason::diameter_two_shortcut;
        result.wall_time_ms = ms_since(t0);
        return result;
    }

    const int start = std::max({3, result.lower_bounds.metric_dimension,
                                result.lower_bounds.twin_pairs,
                                result.lower_bounds.multichoose});
    const Deadline deadline = Deadline::in(opts.budget_seconds);
    auto make_pred = [&dm]() {
        return [checker = ResolvingChecker(dm)](std::span<const int> s) mutable {
            return checker.multiset_resolving(s);
        };
    };

    std::uint64_t examined = 0;
    for (int k = start; k <= n; ++k) {
        check_subset_budget(opts, examined, binom(n, k));
        auto hit = find_first_subset(n, k, opts.threads, deadline, make_pred);
        if (hit) {
            result.value = k;
            result.witness = std::move(*hit);
            result.subsets_examined =
                sat_add(examined, sat_add(lex_rank(result.witness, n), 1));
            result.wall_time_ms = ms_since(t0);
            return result;
        }
        examined = sat_add(examined, binom(n, k));
    }
    result.reason = InfiniteReason::exhausted_all_subsets;
    result.subsets_examined = examined;
    result.wall_time_ms = ms_since(t0);
    return result;
}

SizeScan scan_multiset_resolving(const DistanceMatrix& dm, int k, const SolverOptions& opts) {
    if (k < 0 || k > dm.size()) throw std::invalid_argument("subset size out of range");
    check_subset_budget(opts, 0, binom(dm.size(), k));
    const Deadline deadline = Deadline::in(opts.budget_seconds);
    auto make_pred = [&dm]() {
        return [checker = ResolvingChecker(dm)](std::span<const int> s) mutable {
            return checker.multiset_resolving(s);
        };
    };
    SizeScan scan;
    scan.witness = find_first_subset(dm.size(), k, opts.threads, deadline, make_pred);
    scan.examined = scan.witness ? sat_add(lex_rank(*scan.witness, dm.size()), 1)
                                 : binom(dm.size(), k);
    return scan;
}

std::optional<std::vector<int>> multiset_dimension_constrained(
    const Graph& g, std::span<const std::vector<int>> groups, int k,
    const SolverOptions& opts) {
    if (static_cast<int>(groups.size()) != k)
        throw std::invalid_argument("constrained search: k must equal the group count");
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& group : groups) {
        if (group.empty()) throw std::invalid_argument("constrained search: empty group");
        for (int v : group) {
            if (v < 0 || v >= n) throw std::invalid_argument("constrained search: vertex out of range");
            if (seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("constrained search: overlapping groups");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    if (!is_connected(g))
        throw DisconnectedError("constrained search requires a connected graph");

    std::uint64_t total = 1;
    for (const auto& group : groups) total = sat_mul(total, group.size());
    if (opts.max_subsets > 0 && total > opts.max_subsets)
        throw GuardError("constrained search: " + std::to_string(total) +
                         " candidates exceed the budget of " + std::to_string(opts.max_subsets));

    const DistanceMatrix dm = all_pairs_distances(g);
    const Deadline deadline = Deadline::in(opts.budget_seconds);

    // candidate index decodes with group 0 most significant
    auto decode = [&](std::uint64_t idx, std::vector<int>& out) {
        out.clear();
        for (std::size_t t = groups.size(); t-- > 0;) {
            const auto& group = groups[t];
            out.push_back(group[static_cast<std::size_t>(idx % group.size())]);
            idx /= group.size();
        }
        std::sort(out.begin(), out.end());
    };

    const int threads = std::min<std::uint64_t>(resolve_threads(opts.threads), total);
    const std::uint64_t block =
        std::max<std::uint64_t>(1, total / (static_cast<std::uint64_t>(threads) * 16));
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best_idx{kU64Max};
    std::atomic<bool> out_of_time{false};

    auto worker = [&]() {
        ResolvingChecker checker(dm);
        std::vector<int> candidate;
        candidate.reserve(groups.size());
        for (;;) {
            std::uint64_t base = next_block.fetch_add(1) * block;
            if (base >= total) return;
            if (base > best_idx.load(std::memory_order_relaxed)) return;
            std::uint64_t end = std::min(total, base + block);
            for (std::uint64_t idx = base; idx < end; ++idx) {
                decode(idx, candidate);
                if (checker.multiset_resolving(candidate)) {
                    std::uint64_t seen_best = best_idx.load();
                    while (idx < seen_best && !best_idx.compare_exchange_weak(seen_best, idx)) {
                    }
                    break;
                }
                if ((idx & 0x3ff) == 0) {
                    if (best_idx.load(std::memory_order_relaxed) < base) break;
                    if (deadline.expired()) {
                        out_of_time.store(true);
                        return;
                    }
                }
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (out_of_time.load()) throw GuardError("wall-clock budget exceeded during constrained search");

    std::uint64_t winner = best_idx.load();
    if (winner == kU64Max) return std::nullopt;
    std::vector<int> witness;
    decode(winner, witness);
    return witness;
}

} // namespace msetdim
