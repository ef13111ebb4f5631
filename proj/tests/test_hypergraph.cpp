#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <tuple>

#include "helpers.hpp"
#include "turan3/hypergraph.hpp"
#include "turan3/patterns.hpp"

using namespace turan3;
using turan3::testing::Rng;
using turan3::testing::random_graph;

namespace {

// Independent oracle: all triples listed in colex order by definition
// (largest element, then middle, then smallest).
std::vector<std::tuple<int, int, int>> colex_list(int n) {
    std::vector<std::tuple<int, int, int>> out;
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) out.emplace_back(a, b, c);
    return out;
}

} // namespace

TEST_CASE("colex rank examples") {
    CHECK(rank_triple(0, 1, 2) == 0);
    CHECK(rank_triple(0, 1, 3) == 1);
    auto list = colex_list(13);
    REQUIRE(list.size() == 286);
    CHECK(list[285] == std::tuple<int, int, int>(10, 11, 12));
    CHECK(rank_triple(10, 11, 12) == 285);
}

TEST_CASE("rank/unrank round trip and density for n in 4..13") {
    for (int n = 4; n <= 13; ++n) {
        auto list = colex_list(n);
        REQUIRE(static_cast<int>(list.size()) == triple_count(n));
        for (int i = 0; i < static_cast<int>(list.size()); ++i) {
            auto [a, b, c] = list[i];
            CHECK(rank_triple(a, b, c) == i);
            Triple t = unrank_triple(i, n);
            CHECK(t.a == a);
            CHECK(t.b == b);
            CHECK(t.c == c);
        }
    }
}

TEST_CASE("rank/unrank rejects bad input") {
    CHECK_THROWS_AS(rank_triple(2, 1, 0), std::out_of_range);
    CHECK_THROWS_AS(rank_triple(1, 1, 2), std::out_of_range);
    CHECK_THROWS_AS(unrank_triple(-1, 6), std::out_of_range);
    CHECK_THROWS_AS(unrank_triple(triple_count(6), 6), std::out_of_range);
}

TEST_CASE("degrees") {
    CHECK(star(7).degree(0) == 15); // C(6,2)
    Hypergraph3 k6 = complete(6);
    for (int v = 0; v < 6; ++v) CHECK(k6.degree(v) == 10);
    CHECK(Hypergraph3(5).degree(3) == 0);
}

TEST_CASE("link matches degree and carries the right pairs") {
    Rng rng(42);
    for (int iter = 0; iter < 20; ++iter) {
        Hypergraph3 g = random_graph(8, 0.3, rng);
        for (int v = 0; v < 8; ++v) {
            Link l = g.link(v);
            CHECK(l.degree() == g.degree(v));
            for (auto [u, w] : l.pairs) {
                int a = std::min({u, w, v});
                int c = std::max({u, w, v});
                int b = u + w + v - a - c;
                CHECK(g.has(a, b, c));
            }
        }
    }
}

TEST_CASE("edit is pure and counts edges") {
    Hypergraph3 g(6);
    Hypergraph3 g2 = g.with_edge(0, true);
    CHECK(g.size() == 0);
    CHECK(g2.size() == 1);
    CHECK(g2.with_edge(0, true).size() == 1);
    CHECK(g2.with_edge(0, false).size() == 0);
}

TEST_CASE("induced, delete_vertex, disjoint_union") {
    CHECK(star(9).without_vertex(0).size() == 0); // every star edge meets the center
    CHECK(disjoint_union(complete(6), complete(6)).size() == 40);
    Hypergraph3 k8 = complete(8);
    VertexSet s;
    for (int v : {1, 2, 4, 5, 6, 7}) s.set(v);
    CHECK(k8.induced(s) == complete(6));
    CHECK_THROWS_AS(disjoint_union(complete(20), complete(20)), std::invalid_argument);
}

TEST_CASE("edge partition: inside(S) + crossing + inside(complement) = all") {
    Rng rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 5 + rng.below(5);
        Hypergraph3 g = random_graph(n, 0.4, rng);
        std::uint32_t smask = 1 + rng.below((1 << n) - 2); // proper nonempty subset
        VertexSet s{smask};
        VertexSet t{VertexSet::all(n).mask & ~smask};
        int inside_s = g.induced(s).size();
        int inside_t = g.induced(t).size();
        int crossing = 0;
        g.for_each_edge([&](TripleId id) {
            std::uint32_t m = unrank_triple(id, n).mask();
            if ((m & s.mask) && (m & t.mask)) ++crossing;
        });
        CHECK(inside_s + crossing + inside_t == g.size());
    }
}

TEST_CASE("connectivity") {
    CHECK(comet(10).connected());
    CHECK_FALSE(clique_union({6, 6}).connected());
    CHECK_FALSE(Hypergraph3(2).connected()); // edgeless, n=2
    CHECK(Hypergraph3(1).connected());       // no bipartition exists
    CHECK_FALSE(clique_union({6, 1}).connected());
    CHECK(complete(4).connected());
}

TEST_CASE("disjoint_union is additive and disconnects") {
    Rng rng(11);
    Hypergraph3 a = random_graph(6, 0.5, rng);
    Hypergraph3 b = random_graph(5, 0.5, rng);
    Hypergraph3 u = disjoint_union(a, b);
    CHECK(u.size() == a.size() + b.size());
    CHECK_FALSE(u.connected());
}

TEST_CASE("degree sum is 3m") {
    Rng rng(13);
    for (int iter = 0; iter < 20; ++iter) {
        Hypergraph3 g = random_graph(9, 0.3, rng);
        int sum = 0;
        for (int v = 0; v < 9; ++v) sum += g.degree(v);
        CHECK(sum == 3 * g.size());
    }
}

TEST_CASE("cross_edges counts") {
    VertexSet u6, w6;
    for (int v = 0; v < 6; ++v) u6.set(v);
    for (int v = 6; v < 12; ++v) w6.set(v);
    CHECK(cross_edges(12, u6, w6).size() == 180);

    VertexSet u1{0b001}, w1{0b110};
    CHECK(cross_edges(3, u1, w1).size() == 1);

    VertexSet u3{0b000111}, w3{0b111000};
    CHECK(cross_edges(6, u3, w3).size() == 18);

    VertexSet bad1{0b0011}, bad2{0b0110}; // overlap
    CHECK_THROWS_AS(cross_edges(4, bad1, bad2), std::invalid_argument);
    VertexSet empty{0};
    CHECK_THROWS_AS(cross_edges(4, VertexSet::all(4), empty), std::invalid_argument);
}

TEST_CASE("vertex cap and constructor checks") {
    CHECK_THROWS_AS(Hypergraph3(0), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph3(33), std::invalid_argument);
    Hypergraph3 g(32);
    CHECK(g.n() == 32);
    CHECK(triple_count(32) == 4960);
}
