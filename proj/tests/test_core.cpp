#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sepath/core.hpp"

using namespace sepath;

TEST_CASE("edge_type basics") {
    CHECK(edge_type(5, 1, 3) == 2);
    CHECK(edge_type(6, 1, 4) == 3);  // antipodal
    CHECK(edge_type(5, 3, 1) == 2);  // symmetric
    CHECK_THROWS_AS(edge_type(5, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(edge_type(5, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(edge_type(5, 1, 6), std::invalid_argument);
}

TEST_CASE("edge_type in signed coordinates") {
    SignedLabeling lab(35);
    CHECK(edge_type(35, lab.to_standard(-3), lab.to_standard(17)) == 15);
}

TEST_CASE("signed labeling round trip and anchor") {
    SignedLabeling lab(35);
    CHECK(lab.to_standard(0) == 35);
    CHECK(lab.to_standard(1) == 1);
    CHECK(lab.to_standard(17) == 17);
    CHECK(lab.to_standard(-1) == 34);
    CHECK(lab.to_standard(-17) == 18);
    for (int n = 3; n <= 99; n += 2) {
        SignedLabeling l(n);
        for (Vertex v = 1; v <= n; ++v) CHECK(l.to_standard(l.to_signed(v)) == v);
    }
    CHECK_THROWS_AS(SignedLabeling(6), std::invalid_argument);
}

TEST_CASE("cd_edges examples") {
    CHECK(cd_edges(5, TypedEdge{4, 2}, TypedEdge{5, 2}) == 1);
    CHECK(cd_edges(7, TypedEdge{2, 3}, TypedEdge{2, 1}) == 0);
    // derived: enumerate both |v-u| and n-|v-u|, take the min
    CHECK(cd_edges(9, TypedEdge{1, 2}, TypedEdge{8, 2}) == 2);
}

TEST_CASE("typed edge canonicalization") {
    auto e = make_typed_edge(5, 2, 5);
    CHECK(e.start == 5);  // 5 + 2 = 7 = 2 (mod 5)
    CHECK(e.etype == 2);
    auto [a, b] = typed_edge_endpoints(5, e);
    CHECK(std::set<Vertex>{a, b} == std::set<Vertex>{2, 5});

    // antipodal edges: canonical start is the smaller label
    auto f = make_typed_edge(6, 5, 2);
    CHECK(f.start == 2);
    CHECK(f.etype == 3);
    // ... but distances consider both admissible starts
    CHECK(cd_edges(6, TypedEdge{1, 3}, TypedEdge{3, 3}) == 1);  // start 4 of (1,4) vs 3
}

TEST_CASE("rotate examples and group laws") {
    PathSeq p(5, {4, 1, 2, 5});
    CHECK(rotate(p, 1) == PathSeq(5, {5, 2, 3, 1}));
    CHECK(rotate(PathSeq(5, {1, 3, 2, 5}), 0) == PathSeq(5, {1, 3, 2, 5}));
    CHECK(rotate(PathSeq(3, {1, 2}), 2) == PathSeq(3, {3, 1}));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 12);
        std::vector<Vertex> vs(static_cast<std::size_t>(n));
        std::iota(vs.begin(), vs.end(), 1);
        std::shuffle(vs.begin(), vs.end(), rng);
        vs.resize(2 + rng() % static_cast<std::size_t>(n - 1));
        PathSeq q(n, vs);
        int i = static_cast<int>(rng() % 40), j = static_cast<int>(rng() % 40);
        CHECK(rotate(q, n) == q);
        CHECK(rotate(rotate(q, i), j) == rotate(q, i + j));
        // rotation preserves the type of every edge
        auto before = q.edge_list();
        auto after = rotate(q, i).edge_list();
        for (std::size_t k = 0; k < before.size(); ++k)
            CHECK(edge_type(n, before[k].first, before[k].second) ==
                  edge_type(n, after[k].first, after[k].second));
    }
}

TEST_CASE("type class sizes by enumeration") {
    for (int n = 2; n <= 14; ++n) {
        std::vector<int> count(static_cast<std::size_t>(max_edge_type(n)) + 1, 0);
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v) ++count[static_cast<std::size_t>(edge_type(n, u, v))];
        for (int x = 1; x <= max_edge_type(n); ++x) {
            if (2 * x == n)
                CHECK(count[static_cast<std::size_t>(x)] == n / 2);
            else
                CHECK(count[static_cast<std::size_t>(x)] == n);
        }
    }
}

TEST_CASE("path validation") {
    CHECK_THROWS_AS(PathSeq(5, {1}), std::invalid_argument);
    CHECK_THROWS_AS(PathSeq(5, {1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PathSeq(5, {1, 6}), std::invalid_argument);
    CHECK_NOTHROW(PathSeq(5, {1, 5}));  // single edge is legal
}

TEST_CASE("edge index is a lexicographic bijection") {
    for (int n : {2, 3, 7, 12}) {
        long long m = static_cast<long long>(n) * (n - 1) / 2;
        long long expect = 0;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v) {
                CHECK(edge_index(n, u, v) == expect);
                CHECK(edge_index(n, v, u) == expect);
                auto [a, b] = edge_at_index(n, expect);
                CHECK(a == u);
                CHECK(b == v);
                ++expect;
            }
        CHECK(expect == m);
    }
}

TEST_CASE("decompose: failures carry witnesses") {
    EdgeSet tri(4);
    tri.insert(1, 2);
    tri.insert(2, 3);
    tri.insert(3, 1);
    auto res = decompose_linear_forest(tri);
    CHECK_FALSE(res.ok);
    CHECK(res.failure.kind == DecomposeFailure::Kind::Cycle);
    CHECK(res.failure.witness_cycle.size() == 3);

    EdgeSet star(5);
    star.insert(1, 2);
    star.insert(1, 3);
    star.insert(1, 4);
    auto res2 = decompose_linear_forest(star);
    CHECK_FALSE(res2.ok);
    CHECK(res2.failure.kind == DecomposeFailure::Kind::DegreeViolation);
    CHECK(res2.failure.witness_vertex == 1);
}

TEST_CASE("decompose: two disjoint edges") {
    EdgeSet s(5);
    s.insert(1, 2);
    s.insert(3, 4);
    auto res = decompose_linear_forest(s);
    REQUIRE(res.ok);
    CHECK(res.paths.size() == 2);
    CHECK(res.paths[0] == PathSeq(5, {1, 2}));
    CHECK(res.paths[1] == PathSeq(5, {3, 4}));
}

TEST_CASE("decompose recovers random unions of vertex-disjoint paths") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(rng() % 20);
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        EdgeSet s(n);
        std::size_t expected_paths = 0, pos = 0, total_edges = 0;
        while (pos + 1 < perm.size()) {
            std::size_t len = 2 + rng() % 4;  // vertices in this path
            len = std::min(len, perm.size() - pos);
            if (len < 2) break;
            for (std::size_t i = 0; i + 1 < len; ++i) s.insert(perm[pos + i], perm[pos + i + 1]);
            total_edges += len - 1;
            ++expected_paths;
            pos += len + (rng() % 2);  // sometimes leave an isolated vertex
        }
        auto res = decompose_linear_forest(s);
        REQUIRE(res.ok);
        CHECK(res.paths.size() == expected_paths);
        // output paths partition the input edges
        std::size_t out_edges = 0;
        EdgeSet seen(n);
        for (const auto& p : res.paths)
            for (auto [u, v] : p.edge_list()) {
                CHECK(s.contains(u, v));
                CHECK(seen.insert(u, v));
                ++out_edges;
            }
        CHECK(out_edges == total_edges);
    }
}
