#include "doctest.h"

#include <algorithm>

#include "msetdim/codes.hpp"
#include "msetdim/products.hpp"
#include "testutil.hpp"

using namespace msetdim;
using testutil::Rng;

namespace {

struct Grid5 {
    KingGrid kg{5};
    DistanceMatrix dm = all_pairs_distances(kg.graph());
    std::vector<int> s = kg.flatten(std::vector<GridCoord>{{1, 1}, {2, 1}, {5, 1}, {1, 5}});
};

MultisetCode mc(std::initializer_list<std::uint16_t> entries) {
    return MultisetCode(std::vector<std::uint16_t>(entries));
}

} // namespace

TEST_CASE("multiset representation") {
    Grid5 f;
    CHECK(multiset_rep(f.dm, f.kg.flat({3, 3}), f.s).to_string() == "2,2,2,2");
    CHECK(multiset_rep(f.dm, f.kg.flat({1, 1}), f.s).to_string() == "0,1,4,4");
    CHECK(multiset_rep(f.dm, f.kg.flat({3, 3}), {}).size() == 0);

    SUBCASE("entries are canonical regardless of landmark order") {
        std::vector<int> rev(f.s.rbegin(), f.s.rend());
        CHECK(multiset_rep(f.dm, f.kg.flat({2, 1}), rev) ==
              multiset_rep(f.dm, f.kg.flat({2, 1}), f.s));
    }
    SUBCASE("disconnected input is rejected") {
        Graph g = Graph::from_edge_list(3, std::vector<std::pair<int, int>>{{0, 1}});
        DistanceMatrix dm = all_pairs_distances(g);
        std::vector<int> s{0};
        CHECK_THROWS_AS(multiset_rep(dm, 0, s), DisconnectedError);
    }
}

TEST_CASE("shift") {
    CHECK(shift(mc({1, 2, 2}), 1) == mc({2, 3, 3}));
    CHECK(shift(mc({0}), 0) == mc({0}));
    CHECK(shift(mc({1, 1}), 3) == mc({4, 4}));
    CHECK(shift(mc({5, 7}), -5) == mc({0, 2}));
    CHECK_THROWS_AS(shift(mc({1, 2}), -2), std::invalid_argument);
}

TEST_CASE("count-vector codes") {
    Grid5 f;
    IdCode at33 = id_code(f.dm, f.kg.flat({3, 3}), f.s, 4);
    CHECK(at33.counts == std::vector<int>{0, 4, 0, 0});
    CHECK(at33.landmark_count == 4);
    CHECK(at33.to_string() == "(0,4,0,0);4");

    IdCode at11 = id_code(f.dm, f.kg.flat({1, 1}), f.s, 4);
    CHECK(at11.counts == std::vector<int>{1, 0, 0, 2}); // sums to |S| - 1
    CHECK(at11.to_string() == "(1,0,0,2);4");

    CHECK(id_code(f.dm, 7, {}, 4).counts == std::vector<int>{0, 0, 0, 0});
    CHECK_THROWS_AS(id_code(f.dm, 0, f.s, 5), std::invalid_argument); // wrong diameter
}

TEST_CASE("conversions between the two code forms") {
    IdCode a = multiset_to_id(mc({0, 1, 4, 4}), 4, 4);
    CHECK(a.counts == std::vector<int>{1, 0, 0, 2});
    IdCode b = multiset_to_id(mc({2, 2, 2, 2}), 4, 4);
    CHECK(b.counts == std::vector<int>{0, 4, 0, 0});
    CHECK(multiset_to_id(MultisetCode{}, 0, 3).counts == std::vector<int>{0, 0, 0});
    CHECK_THROWS_AS(multiset_to_id(mc({5}), 1, 4), std::invalid_argument); // entry > d
    CHECK_THROWS_AS(multiset_to_id(mc({1, 2}), 3, 4), std::invalid_argument);

    CHECK(id_to_multiset(a) == mc({0, 1, 4, 4}));
    CHECK(id_to_multiset(b) == mc({2, 2, 2, 2}));
    CHECK(id_to_multiset(IdCode{{0, 0, 0}, 1}) == mc({0})); // lone landmark sees itself
    CHECK_THROWS_AS(id_to_multiset(IdCode{{1, 0}, 3}), std::invalid_argument);
}

TEST_CASE("verifiers on king grids") {
    SUBCASE("4x4 with the known 6-set") {
        KingGrid kg(4);
        DistanceMatrix dm = all_pairs_distances(kg.graph());
        auto s = kg.flatten(std::vector<GridCoord>{{1, 1}, {2, 1}, {4, 1}, {1, 3}, {2, 3}, {2, 4}});
        CHECK(is_multiset_resolving(dm, s));
        CHECK(is_id_coloring(dm, s));
    }
    SUBCASE("6x6 with the known 4-set") {
        KingGrid kg(6);
        DistanceMatrix dm = all_pairs_distances(kg.graph());
        auto s = kg.flatten(std::vector<GridCoord>{{2, 1}, {2, 2}, {6, 1}, {1, 6}});
        CHECK(is_multiset_resolving(dm, s));
        CHECK(is_id_coloring(dm, s));
        CHECK(is_resolving(dm, s));
    }
    SUBCASE("empty landmark set never resolves two or more vertices") {
        DistanceMatrix dm = all_pairs_distances(path_graph(2));
        CHECK(!is_multiset_resolving(dm, {}));
        CHECK(!is_id_coloring(dm, {}));
        DistanceMatrix one = all_pairs_distances(path_graph(1));
        CHECK(is_multiset_resolving(one, {}));
    }
}

TEST_CASE("paths and cliques") {
    for (int n : {2, 5, 9}) {
        DistanceMatrix dm = all_pairs_distances(path_graph(n));
        std::vector<int> endpoint{0};
        CHECK(is_id_coloring(dm, endpoint));
        CHECK(is_multiset_resolving(dm, endpoint));
        CHECK(is_resolving(dm, endpoint));
    }
    // no subset of a triangle works, by exhaustion over all 8
    DistanceMatrix dk = all_pairs_distances(complete_graph(3));
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> s;
        for (int v = 0; v < 3; ++v)
            if (mask >> v & 1) s.push_back(v);
        CHECK(!is_id_coloring(dk, s));
        CHECK(!is_multiset_resolving(dk, s));
    }
    std::vector<int> single{0};
    CHECK(!is_resolving(dk, single));
}

TEST_CASE("ordered-tuple resolution is weaker") {
    // 0-1-2 path: {0,2} resolves by tuples but the end vertices share a multiset
    DistanceMatrix dm = all_pairs_distances(path_graph(3));
    std::vector<int> ends{0, 2};
    CHECK(is_resolving(dm, ends));
    CHECK(!is_multiset_resolving(dm, ends));
}

TEST_CASE("equivalence of multiset and count-vector verdicts") {
    Rng rng(0x5eed2001);
    int resolving_seen = 0;
    for (int iter = 0; iter < 400; ++iter) {
        int n = 2 + static_cast<int>(rng.below(11));
        Graph g = testutil::random_connected_graph(rng, n);
        DistanceMatrix dm = all_pairs_distances(g);
        auto s = testutil::random_subset(rng, n);

        bool msr = is_multiset_resolving(dm, s);
        CHECK(is_id_coloring(dm, s) == msr);
        CHECK(is_multiset_resolving(dm, s, CheckStrategy::sorted) == msr);
        if (msr) {
            ++resolving_seen;
            CHECK(is_resolving(dm, s)); // multisets distinct => tuples distinct
        }

        // conversions round-trip for every vertex
        int d = diameter(dm);
        for (int v = 0; v < n; ++v) {
            MultisetCode code = multiset_rep(dm, v, s);
            CHECK(std::is_sorted(code.entries().begin(), code.entries().end()));
            IdCode idc = multiset_to_id(code, static_cast<int>(s.size()), d);
            CHECK(idc == id_code(dm, v, s, d));
            CHECK(id_to_multiset(idc) == code);

            // a zero appears exactly when the vertex is a landmark, never twice
            bool is_landmark = std::find(s.begin(), s.end(), v) != s.end();
            CHECK(code.contains_zero() == is_landmark);
            CHECK(std::count(code.entries().begin(), code.entries().end(), 0) <= 1);
        }
    }
    CHECK(resolving_seen > 0); // corpus exercises both verdicts
}

TEST_CASE("reusable checker matches the one-shot verifiers") {
    Rng rng(0x5eed2002);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + static_cast<int>(rng.below(9));
        Graph g = testutil::random_connected_graph(rng, n);
        DistanceMatrix dm = all_pairs_distances(g);
        ResolvingChecker checker(dm);
        for (int rep = 0; rep < 8; ++rep) {
            auto s = testutil::random_subset(rng, n);
            CHECK(checker.multiset_resolving(s) ==
                  is_multiset_resolving(dm, s, CheckStrategy::sorted));
            CHECK(checker.resolving(s) == is_resolving(dm, s, CheckStrategy::sorted));
        }
    }
}
