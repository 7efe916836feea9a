#pragma once

#include <vector>

#include "msetdim/graph.hpp"

namespace msetdim {

enum class TwinKind {
    open,   // equal open neighborhoods, members pairwise non-adjacent
    closed, // equal closed neighborhoods, members pairwise adjacent
};

struct TwinClass {
    TwinKind kind;
    std::vector<int> members; // ascending, size >= 2
};

/// Maximal twin classes of both kinds; singletons omitted. Classes are
/// pairwise disjoint, even across kinds: a vertex cannot have both an open
/// and a closed twin.
struct TwinReport {
    std::vector<TwinClass> classes; // sorted by smallest member

    int max_class_size() const;
    /// Number of classes. Each class forces at least one member into any
    /// (multiset) resolving set, so this is an admissible lower bound when
    /// every class has size 2.
    int class_count() const { return static_cast<int>(classes.size()); }
};

TwinReport twin_classes(const Graph& g);

} // namespace msetdim
