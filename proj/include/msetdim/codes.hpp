#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "msetdim/distance.hpp"

namespace msetdim {

/// Multiset of distances from a vertex to a landmark set, kept in canonical
/// form: entries sorted non-decreasingly. Two codes are equal iff their
/// entry sequences are equal. Serializes as comma-separated integers,
/// e.g. "0,1,4,4".
class MultisetCode {
public:
    MultisetCode() = default;
    /// Takes arbitrary entries and canonicalizes (sorts) them.
    explicit MultisetCode(std::vector<std::uint16_t> entries);

    std::span<const std::uint16_t> entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    bool contains_zero() const { return !entries_.empty() && entries_.front() == 0; }

    std::string to_string() const;

    auto operator<=>(const MultisetCode&) const = default;

private:
    std::vector<std::uint16_t> entries_;
};

/// Count vector (a_1, ..., a_d): a_i landmarks sit at distance i. The
/// landmark count is carried so the multiset form can be reconstructed
/// without graph access. Serializes as "(a_1,...,a_d);|S|".
struct IdCode {
    std::vector<int> counts;
    int landmark_count = 0;

    std::string to_string() const;
    bool operator==(const IdCode&) const = default;
};

/// Canonical distance multiset of v w.r.t. the landmark set.
/// Throws DisconnectedError when dm has unreachable pairs.
MultisetCode multiset_rep(const DistanceMatrix& dm, int v, std::span<const int> landmarks);

/// Adds delta to every entry. Throws std::invalid_argument if any entry
/// would become negative.
MultisetCode shift(const MultisetCode& code, int delta);

/// Count vector of v w.r.t. the landmarks; d must equal diameter(dm).
IdCode id_code(const DistanceMatrix& dm, int v, std::span<const int> landmarks, int d);

/// Conversion between the two code forms. The zero entry (vertex sees
/// itself) maps to no count bucket; its presence is recovered from the
/// count sum: sum == landmark_count - 1 iff the vertex is a landmark.
IdCode multiset_to_id(const MultisetCode& code, int landmark_count, int d);
MultisetCode id_to_multiset(const IdCode& code);

enum class CheckStrategy {
    hashed, // expected O(n) via hashing of canonical forms
    sorted, // deterministic comparison-sort fallback for audits
};

/// True iff the n multiset codes w.r.t. the landmarks are pairwise distinct.
bool is_multiset_resolving(const DistanceMatrix& dm, std::span<const int> landmarks,
                           CheckStrategy strategy = CheckStrategy::hashed);

/// True iff the n count vectors are pairwise distinct.
bool is_id_coloring(const DistanceMatrix& dm, std::span<const int> landmarks);

/// True iff the n ordered distance tuples are pairwise distinct.
bool is_resolving(const DistanceMatrix& dm, std::span<const int> landmarks,
                  CheckStrategy strategy = CheckStrategy::hashed);

/// Duplicate-detection engine with reusable buffers for enumeration loops.
/// One instance per thread; not synchronized.
class ResolvingChecker {
public:
    /// Throws DisconnectedError when dm has unreachable pairs.
    explicit ResolvingChecker(const DistanceMatrix& dm);

    bool multiset_resolving(std::span<const int> landmarks) {
        return distinct(landmarks, /*sort_rows=*/true);
    }
    bool resolving(std::span<const int> landmarks) {
        return distinct(landmarks, /*sort_rows=*/false);
    }

private:
    bool distinct(std::span<const int> landmarks, bool sort_rows);

    const DistanceMatrix& dm_;
    std::vector<std::uint16_t> rows_;    // n * k scratch
    std::vector<std::uint64_t> hashes_;  // open-addressing table
    std::vector<std::uint32_t> slot_vertex_;
    std::vector<std::uint32_t> slot_epoch_;
    std::uint32_t epoch_ = 0;
    std::size_t mask_ = 0;
};

} // namespace msetdim
