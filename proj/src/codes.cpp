#include "msetdim/codes.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>

#include "msetdim/errors.hpp"

namespace msetdim {

namespace {

void require_connected(const DistanceMatrix& dm) {
    if (!dm.all_reachable())
        throw DisconnectedError("operation requires a connected graph");
}

void require_landmarks(const DistanceMatrix& dm, std::span<const int> landmarks) {
    for (int w : landmarks)
        if (w < 0 || w >= dm.size()) throw std::invalid_argument("landmark out of range");
}

std::uint64_t fnv1a(const std::uint16_t* data, int count) {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < count; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

MultisetCode::MultisetCode(std::vector<std::uint16_t> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
}

std::string MultisetCode::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

std::string IdCode::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(counts[i]);
    }
    out += ");" + std::to_string(landmark_count);
    return out;
}

MultisetCode multiset_rep(const DistanceMatrix& dm, int v, std::span<const int> landmarks) {
    require_connected(dm);
    if (v < 0 || v >= dm.size()) throw std::invalid_argument("vertex out of range");
    require_landmarks(dm, landmarks);
    std::vector<std::uint16_t> entries;
    entries.reserve(landmarks.size());
    const std::uint16_t* row = dm.row(v);
    for (int w : landmarks) entries.push_back(row[w]);
    return MultisetCode(std::move(entries));
}

MultisetCode shift(const MultisetCode& code, int delta) {
    std::vector<std::uint16_t> entries;
    entries.reserve(code.entries().size());
    for (std::uint16_t e : code.entries()) {
        int shifted = static_cast<int>(e) + delta;
        if (shifted < 0)
            throw std::invalid_argument("shift would produce a negative distance");
        entries.push_back(static_cast<std::uint16_t>(shifted));
    }
    return MultisetCode(std::move(entries)); // order is preserved by a constant shift
}

IdCode id_code(const DistanceMatrix& dm, int v, std::span<const int> landmarks, int d) {
    require_connected(dm);
    if (d != diameter(dm))
        throw std::invalid_argument("code length does not match the graph diameter");
    require_landmarks(dm, landmarks);
    IdCode code;
    code.counts.assign(static_cast<std::size_t>(d), 0);
    code.landmark_count = static_cast<int>(landmarks.size());
    const std::uint16_t* row = dm.row(v);
    for (int w : landmarks) {
        int dist = row[w];
        if (dist >= 1) ++code.counts[static_cast<std::size_t>(dist) - 1];
    }
    return code;
}

IdCode multiset_to_id(const MultisetCode& code, int landmark_count, int d) {
    if (code.size() != landmark_count)
        throw std::invalid_argument("code length does not match the landmark count");
    IdCode out;
    out.counts.assign(static_cast<std::size_t>(d), 0);
    out.landmark_count = landmark_count;
    for (std::uint16_t e : code.entries()) {
        if (e > d) throw std::invalid_argument("distance entry exceeds the diameter");
        if (e >= 1) ++out.counts[static_cast<std::size_t>(e) - 1];
    }
    return out;
}

MultisetCode id_to_multiset(const IdCode& code) {
    long long sum = std::accumulate(code.counts.begin(), code.counts.end(), 0ll);
    std::vector<std::uint16_t> entries;
    entries.reserve(static_cast<std::size_t>(code.landmark_count));
    if (sum == code.landmark_count - 1) {
        entries.push_back(0); // the vertex is a landmark and sees itself
    } else if (sum != code.landmark_count) {
        throw std::invalid_argument("count sum must be |S| or |S|-1");
    }
    for (std::size_t i = 0; i < code.counts.size(); ++i)
        for (int c = 0; c < code.counts[i]; ++c)
            entries.push_back(static_cast<std::uint16_t>(i + 1));
    return MultisetCode(std::move(entries));
}

ResolvingChecker::ResolvingChecker(const DistanceMatrix& dm) : dm_(dm) {
    require_connected(dm);
    std::size_t want = std::bit_ceil(static_cast<std::size_t>(dm.size()) * 2 + 2);
    hashes_.assign(want, 0);
    slot_vertex_.assign(want, 0);
    slot_epoch_.assign(want, 0);
    mask_ = want - 1;
}

bool ResolvingChecker::distinct(std::span<const int> landmarks, bool sort_rows) {
    const int n = dm_.size();
    const int k = static_cast<int>(landmarks.size());
    rows_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    ++epoch_;
    for (int v = 0; v < n; ++v) {
        std::uint16_t* row = rows_.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(k);
        const std::uint16_t* dist = dm_.row(v);
        for (int i = 0; i < k; ++i) row[i] = dist[landmarks[static_cast<std::size_t>(i)]];
        if (sort_rows) {
            for (int i = 1; i < k; ++i) { // insertion sort; k is small
                std::uint16_t x = row[i];
                int j = i - 1;
                while (j >= 0 && row[j] > x) {
                    row[j + 1] = row[j];
                    --j;
                }
                row[j + 1] = x;
            }
        }
        std::uint64_t h = fnv1a(row, k);
        std::size_t slot = h & mask_;
        while (slot_epoch_[slot] == epoch_) {
            if (hashes_[slot] == h) {
                const std::uint16_t* other =
                    rows_.data() + static_cast<std::size_t>(slot_vertex_[slot]) * static_cast<std::size_t>(k);
                if (k == 0 || std::memcmp(other, row, static_cast<std::size_t>(k) * 2) == 0)
                    return false;
            }
            slot = (slot + 1) & mask_;
        }
        slot_epoch_[slot] = epoch_;
        hashes_[slot] = h;
        slot_vertex_[slot] = static_cast<std::uint32_t>(v);
    }
    return true;
}

namespace {

// comparison-sort route: collect all rows, sort, scan for an equal pair
bool distinct_by_sorting(const DistanceMatrix& dm, std::span<const int> landmarks,
                         bool sort_rows) {
    const int n = dm.size();
    const int k = static_cast<int>(landmarks.size());
    std::vector<std::vector<std::uint16_t>> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& row = rows[static_cast<std::size_t>(v)];
        row.reserve(static_cast<std::size_t>(k));
        for (int w : landmarks) row.push_back(dm(v, w));
        if (sort_rows) std::sort(row.begin(), row.end());
    }
    std::sort(rows.begin(), rows.end());
    return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

} // namespace

bool is_multiset_resolving(const DistanceMatrix& dm, std::span<const int> landmarks,
                           CheckStrategy strategy) {
    require_connected(dm);
    require_landmarks(dm, landmarks);
    if (strategy == CheckStrategy::sorted) return distinct_by_sorting(dm, landmarks, true);
    ResolvingChecker checker(dm);
    return checker.multiset_resolving(landmarks);
}

bool is_resolving(const DistanceMatrix& dm, std::span<const int> landmarks,
                  CheckStrategy strategy) {
    require_connected(dm);
    require_landmarks(dm, landmarks);
    if (strategy == CheckStrategy::sorted) return distinct_by_sorting(dm, landmarks, false);
    ResolvingChecker checker(dm);
    return checker.resolving(landmarks);
}

bool is_id_coloring(const DistanceMatrix& dm, std::span<const int> landmarks) {
    require_connected(dm);
    require_landmarks(dm, landmarks);
    const int d = diameter(dm);
    const int n = dm.size();
    std::vector<IdCode> codes;
    codes.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        IdCode code;
        code.counts.assign(static_cast<std::size_t>(d), 0);
        code.landmark_count = static_cast<int>(landmarks.size());
        const std::uint16_t* row = dm.row(v);
        for (int w : landmarks)
            if (row[w] >= 1) ++code.counts[static_cast<std::size_t>(row[w]) - 1];
        codes.push_back(std::move(code));
    }
    std::sort(codes.begin(), codes.end(),
              [](const IdCode& a, const IdCode& b) { return a.counts < b.counts; });
    for (std::size_t i = 1; i < codes.size(); ++i)
        if (codes[i - 1].counts == codes[i].counts) return false;
    return true;
}

} // namespace msetdim
