#include <random>

#include "doctest.h"
#include "mimic/flow.hpp"
#include "mimic/graph.hpp"
#include "testutil.hpp"

using namespace mimic;

TEST_CASE("edge mincut on a path") {
    Multigraph g = from_weighted({1, 2, 3}, {{1, 2, 1}, {2, 3, 1}}, 5);
    CutAnswer ans = bounded_edge_mincut(g, {1}, {3}, 5);
    REQUIRE(!ans.exceeded());
    CHECK(ans.value() == 1);
    CHECK(ans.witness().size() == 1);
}

TEST_CASE("three parallel edges exceed bound 2") {
    Multigraph g = from_weighted({1, 2}, {{1, 2, 3}}, 5);
    CutAnswer ans = bounded_edge_mincut(g, {1}, {2}, 2);
    CHECK(ans.exceeded());
    CHECK(ans.bound() == 2);
}

TEST_CASE("K4 vertex pair has mincut 3") {
    std::vector<WeightedEdge> edges;
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v) edges.push_back({u, v, 1});
    Multigraph g = from_weighted({1, 2, 3, 4}, edges, 5);
    CutAnswer ans = bounded_edge_mincut(g, {1}, {2}, 3);
    REQUIRE(!ans.exceeded());
    CHECK(ans.value() == 3);
    CHECK(ans.value() == testutil::bruteforce_edge_mincut(g, {1}, {2}));
}

TEST_CASE("empty sides give a zero cut, overlapping sides are rejected") {
    Multigraph g = from_weighted({1, 2}, {{1, 2, 1}}, 1);
    CHECK(bounded_edge_mincut(g, {}, {2}, 3).value() == 0);
    CHECK_THROWS_AS(bounded_edge_mincut(g, {1}, {1, 2}, 3), InputError);
}

TEST_CASE("flow agrees with bipartition enumeration on random graphs") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng() % 8);
        std::vector<VertexId> verts(n);
        for (int i = 0; i < n; ++i) verts[i] = i + 1;
        std::vector<WeightedEdge> edges;
        int m = n + static_cast<int>(rng() % (2 * n));
        for (int i = 0; i < m; ++i) {
            int u = 1 + static_cast<int>(rng() % n), v = 1 + static_cast<int>(rng() % n);
            if (u != v) edges.push_back({u, v, 1});
        }
        Multigraph g = from_weighted(verts, edges, 50);
        VertexId a = 1 + static_cast<int>(rng() % n), b = 1 + static_cast<int>(rng() % n);
        if (a == b) continue;
        int expect = testutil::bruteforce_edge_mincut(g, {a}, {b});
        CutAnswer ans = bounded_edge_mincut(g, {a}, {b}, 100);
        REQUIRE(!ans.exceeded());
        CHECK(ans.value() == expect);
        // witness is a valid cut of the stated value
        CHECK(static_cast<int>(ans.witness().size()) == expect);
        // the source side contains a and excludes b
        const std::vector<int>& side = ans.source_side();
        CHECK(std::find(side.begin(), side.end(), a) != side.end());
        CHECK(std::find(side.begin(), side.end(), b) == side.end());
    }
}

TEST_CASE("vertex cut through a middle vertex") {
    Digraph d;
    d.vertex_count = 3;
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    CutAnswer ans = min_vertex_cut(d, {0}, {2}, 5);
    REQUIRE(!ans.exceeded());
    CHECK(ans.value() == 1);
}

TEST_CASE("a direct arc forces the cut into the endpoints") {
    Digraph d;
    d.vertex_count = 2;
    d.add_arc(0, 1);
    CutAnswer ans = min_vertex_cut(d, {0}, {1}, 5);
    REQUIRE(!ans.exceeded());
    CHECK(ans.value() == 1);
    REQUIRE(ans.witness().size() == 1);
    CHECK((ans.witness()[0] == 0 || ans.witness()[0] == 1));
}

TEST_CASE("two internally disjoint paths: endpoints stay cuttable") {
    // 0 -> 1 -> 2 -> 5 and 0 -> 3 -> 4 -> 5. Since the cut may contain the
    // endpoints, {0} alone already separates; enumeration confirms.
    Digraph d;
    d.vertex_count = 6;
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}})
        d.add_arc(u, v);
    CutAnswer ans = min_vertex_cut(d, {0}, {5}, 5);
    REQUIRE(!ans.exceeded());
    CHECK(ans.value() == testutil::bruteforce_vertex_cut(d, {0}, {5}, 5));
    CHECK(ans.value() == 1);
    // away from the endpoints, the two paths really need two vertices
    CHECK(!testutil::digraph_separated(d, {0}, {5}, {1}));
    CHECK(!testutil::digraph_separated(d, {0}, {5}, {3}));
    CHECK(testutil::digraph_separated(d, {0}, {5}, {1, 3}));
}

TEST_CASE("vertex cuts agree with subset enumeration on random digraphs") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 25; ++trial) {
        Digraph d;
        d.vertex_count = 4 + static_cast<int>(rng() % 5);
        for (int u = 0; u < d.vertex_count; ++u)
            for (int v = 0; v < d.vertex_count; ++v)
                if (u != v && rng() % 3 == 0) d.add_arc(u, v);
        int a = static_cast<int>(rng() % d.vertex_count);
        int b = static_cast<int>(rng() % d.vertex_count);
        if (a == b) continue;
        int expect = testutil::bruteforce_vertex_cut(d, {a}, {b}, d.vertex_count);
        CutAnswer ans = min_vertex_cut(d, {a}, {b}, d.vertex_count);
        REQUIRE(!ans.exceeded());
        CHECK(ans.value() == expect);
        // witness separates
        CHECK(testutil::digraph_separated(d, {a}, {b}, ans.witness()));
    }
}

TEST_CASE("zero-length paths count for vertex-disjoint path systems") {
    Digraph d;
    d.vertex_count = 1;
    CHECK(max_vertex_disjoint_paths(d, {0}, {0}) == 1);
}

TEST_CASE("star leaves share the center") {
    Digraph d;
    d.vertex_count = 3;  // 0 = center
    d.add_arc(1, 0);
    d.add_arc(2, 0);
    CHECK(max_vertex_disjoint_paths(d, {1, 2}, {0}) == 1);
}

TEST_CASE("directed 3x3 grid links left column to right column") {
    Digraph d;
    d.vertex_count = 9;  // row-major, arcs right and down
    auto id = [](int r, int c) { return 3 * r + c; };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (c + 1 < 3) d.add_arc(id(r, c), id(r, c + 1));
            if (r + 1 < 3) d.add_arc(id(r, c), id(r + 1, c));
        }
    std::vector<int> left = {id(0, 0), id(1, 0), id(2, 0)}, right = {id(0, 2), id(1, 2), id(2, 2)};
    CHECK(max_vertex_disjoint_paths(d, left, right) == 3);
    // middle column is a vertex cut of size 3, so 3 is also an upper bound
    CHECK(testutil::digraph_separated(d, left, right, {id(0, 1), id(1, 1), id(2, 1)}));
}

TEST_CASE("disjoint path count matches the vertex cut between source and target sets") {
    std::mt19937_64 rng(1212);
    for (int trial = 0; trial < 25; ++trial) {
        Digraph d;
        d.vertex_count = 4 + static_cast<int>(rng() % 6);
        for (int u = 0; u < d.vertex_count; ++u)
            for (int v = 0; v < d.vertex_count; ++v)
                if (u != v && rng() % 3 == 0) d.add_arc(u, v);
        std::vector<int> t, x;
        for (int v = 0; v < d.vertex_count; ++v) {
            if (rng() % 3 == 0) t.push_back(v);
            if (rng() % 3 == 0) x.push_back(v);
        }
        if (t.empty() || x.empty()) continue;
        // Menger: max disjoint T-X paths = min vertex cut separating X from T
        int paths = max_vertex_disjoint_paths(d, t, x);
        int cut = testutil::bruteforce_vertex_cut(d, t, x, d.vertex_count);
        CHECK(paths == cut);
    }
}

TEST_CASE("disjoint path count cross-checks against min_vertex_cut") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        Digraph d;
        d.vertex_count = 5 + static_cast<int>(rng() % 5);
        for (int u = 0; u < d.vertex_count; ++u)
            for (int v = 0; v < d.vertex_count; ++v)
                if (u != v && rng() % 3 == 0) d.add_arc(u, v);
        std::vector<int> t, x;
        for (int v = 0; v < d.vertex_count; ++v)
            (rng() % 2 ? t : x).push_back(v);  // disjoint by construction
        if (t.empty() || x.empty()) continue;
        CutAnswer cut = min_vertex_cut(d, t, x, d.vertex_count);
        REQUIRE(!cut.exceeded());
        CHECK(max_vertex_disjoint_paths(d, t, x) == cut.value());
    }
}
