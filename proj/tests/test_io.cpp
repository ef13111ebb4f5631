#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "helpers.hpp"
#include "turan3/io.hpp"
#include "turan3/patterns.hpp"

using namespace turan3;

TEST_CASE("hg3 round trip for the catalog constructions") {
    std::vector<Hypergraph3> graphs;
    for (int n = 6; n <= 20; ++n) {
        graphs.push_back(star(n));
        graphs.push_back(comet(n));
        graphs.push_back(two_pairs(n));
        if (n > 6) graphs.push_back(clique_union({6, n - 6}));
    }
    for (const Hypergraph3& g : graphs) {
        Hypergraph3 back = parse_hg3(to_hg3(g));
        CHECK(back == g);
    }
}

TEST_CASE("hg3 round trip keeps isolated vertices") {
    Hypergraph3 g = clique_union({4, 3, 1});
    CHECK(g.n() == 8);
    CHECK(parse_hg3(to_hg3(g)).n() == 8);
}

TEST_CASE("hg3 accepts comments and blank lines") {
    std::string text =
        "# a comment\n"
        "\n"
        "hg3 n=5 m=2\n"
        "# edges follow\n"
        "0 1 2\n"
        "\n"
        "2 3 4\n";
    Hypergraph3 g = parse_hg3(text);
    CHECK(g.n() == 5);
    CHECK(g.size() == 2);
    CHECK(g.has(0, 1, 2));
    CHECK(g.has(2, 3, 4));
}

TEST_CASE("hg3 rejects malformed input") {
    CHECK_THROWS(parse_hg3("hg n=5 m=0\n"));
    CHECK_THROWS(parse_hg3("hg3 n=40 m=0\n"));
    CHECK_THROWS(parse_hg3("hg3 n=5 m=1\n2 1 0\n"));          // unsorted triple
    CHECK_THROWS(parse_hg3("hg3 n=5 m=1\n0 1 9\n"));          // vertex out of range
    CHECK_THROWS(parse_hg3("hg3 n=5 m=2\n2 3 4\n0 1 2\n"));   // colex order violated
    CHECK_THROWS(parse_hg3("hg3 n=5 m=2\n0 1 2\n0 1 2\n"));   // duplicate
    CHECK_THROWS(parse_hg3("hg3 n=5 m=3\n0 1 2\n0 1 3\n"));   // short file
    CHECK_THROWS(parse_hg3("hg3 n=5 m=1\n0 1 2 7\n"));        // trailing token
}
