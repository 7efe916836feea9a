#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msetdim/codes.hpp"
#include "msetdim/graph.hpp"

namespace msetdim {

struct SolverOptions {
    int max_n = 30;                 // largest graph accepted for exhaustive search
    std::uint64_t max_subsets = 0;  // refuse scans past this many candidates (0 = unlimited)
    double budget_seconds = 0.0;    // wall-clock guard (0 = unlimited)
    int threads = 1;                // 0 = hardware concurrency
    bool diameter_two_shortcut = false; // opt-in: declare non-paths of diameter <= 2 infinite
};

enum class InfiniteReason {
    none,
    twin_class_overflow,  // some twin class has size >= 3
    exhausted_all_subsets,
    diameter_two_shortcut, // only reachable via the opt-in flag
};
std::string_view to_string(InfiniteReason reason);

/// Lower bounds recorded while solving; 0 = not applicable / not computed.
struct LowerBounds {
    int path_check = 0;       // 1 for paths; 2 for non-paths (no size-1 set exists)
    int no_size_two = 0;      // 3 for non-paths (no graph has a size-2 set)
    int metric_dimension = 0;
    int twin_pairs = 0;       // disjoint twin classes, one forced member each
    int multichoose = 0;      // counting bound from code-space size
};

/// Exact multiset dimension outcome. When finite, `witness` is the
/// lexicographically smallest minimum multiset resolving set and
/// no smaller subset resolves (size-ordered search). `subsets_examined`
/// counts candidate subsets in deterministic enumeration order and does
/// not depend on the worker count.
struct DimResult {
    std::optional<int> value; // empty = infinite
    InfiniteReason reason = InfiniteReason::none;
    std::vector<int> witness;
    LowerBounds lower_bounds;
    std::uint64_t subsets_examined = 0;
    double wall_time_ms = 0.0;

    bool finite() const { return value.has_value(); }
    /// Flat "key = value" block; see README for the field list.
    std::string to_key_value() const;
};

struct MetricDimResult {
    int value = 0;
    std::vector<int> witness;
    std::uint64_t subsets_examined = 0;
};

/// C(d+k-1, k): number of size-k multisets over {1..d}. Saturates at
/// uint64 max instead of overflowing.
std::uint64_t multichoose(int d, int k);

/// Smallest k with multichoose(d, k) >= n - k. Admissible because the
/// n - k non-landmarks need distinct zero-free codes.
int counting_lower_bound(int n, int d);

/// n <= 2 counts as a path.
bool is_path_graph(const Graph& g);

/// Exact metric dimension by size-ordered exhaustive search; witness is the
/// lexicographically smallest minimum resolving set.
/// Throws DisconnectedError / GuardError.
MetricDimResult metric_dimension(const Graph& g, const SolverOptions& opts = {});

/// Exact multiset dimension. Pipeline: path shortcut, twin-class overflow
/// rule, lower bounds, then size-ordered exhaustive subset search (the
/// property is not monotone, so every subset of each size is a candidate).
/// Throws DisconnectedError / GuardError.
DimResult multiset_dimension(const Graph& g, const SolverOptions& opts = {});

/// Enumerates the Cartesian product choosing exactly one vertex per group
/// and returns the first multiset resolving choice in product order, as a
/// sorted vertex set. Groups must be pairwise disjoint and k == |groups|.
std::optional<std::vector<int>> multiset_dimension_constrained(
    const Graph& g, std::span<const std::vector<int>> groups, int k,
    const SolverOptions& opts = {});

/// One size level of the exhaustive search, exposed for refutation sweeps:
/// scans all C(n, k) subsets in lexicographic order. `witness` is the first
/// hit (empty = none); `examined` is the deterministic candidate count
/// (position of the hit, or C(n, k) when the scan is exhaustive).
struct SizeScan {
    std::optional<std::vector<int>> witness;
    std::uint64_t examined = 0;
};
SizeScan scan_multiset_resolving(const DistanceMatrix& dm, int k,
                                 const SolverOptions& opts = {});

} // namespace msetdim
