#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turan3/hypergraph.hpp"

namespace turan3 {

// The closed catalog of small 3-graphs used as forbidden/required patterns.
//   P      loose path of length 3 (7 vertices, 3 edges)
//   C      loose cycle of length 3 (6 vertices, 3 edges)
//   M      two disjoint edges (6 vertices)
//   P2     loose path of length 2 (5 vertices)
//   P2uK3  P2 plus one disjoint edge (8 vertices)
//   K1..K6 complete 3-graphs
enum class PatternId { P, C, M, P2, P2uK3, K1, K2, K3, K4, K5, K6 };

struct Pattern {
    PatternId id;
    std::string name;
    int vertex_count = 0;
    std::vector<Triple> edges;
    long automorphism_count = 0; // brute-forced over vertex permutations
    std::vector<int> degrees;    // per pattern vertex
    std::vector<int> match_order; // edge order for backtracking (connected expansion)
};

const Pattern& pattern(PatternId id);
std::optional<PatternId> pattern_by_name(std::string_view name);
const std::vector<PatternId>& all_patterns();

// Witness: pattern vertex -> host vertex, injective, carrying every edge.
using Witness = std::vector<int>;

// Subgraph containment (not induced). Dispatches to specialized detectors
// for M and P; the generic backtracking detector is exposed for cross-checks.
std::optional<Witness> contains(const Hypergraph3& host, const Pattern& p);
std::optional<Witness> contains(const Hypergraph3& host, PatternId id);
std::optional<Witness> contains_generic(const Hypergraph3& host, const Pattern& p);

bool witness_valid(const Hypergraph3& host, const Pattern& p, const Witness& w);

// Injective embeddings, and copies = embeddings / |Aut(pattern)|.
long count_embeddings(const Hypergraph3& host, const Pattern& p);
long count_copies(const Hypergraph3& host, const Pattern& p);

// No two edges disjoint (equivalently M-free).
bool is_intersecting(const Hypergraph3& h);
// A vertex lying in every edge, smallest index on ties; for an edgeless graph
// every vertex qualifies vacuously, so vertex 0 is returned.
std::optional<int> common_vertex(const Hypergraph3& h);

// Extremal configurations, canonical by labeling.
struct ConstructionSpec {
    enum class Kind { Star, Comet, CliqueUnion, TwoPairs, Complete, HiltonMilner };
    Kind kind;
    int n = 0;
    std::vector<int> sizes; // CliqueUnion only

    static ConstructionSpec star(int n) { return {Kind::Star, n, {}}; }
    static ConstructionSpec comet(int n) { return {Kind::Comet, n, {}}; }
    static ConstructionSpec clique_union(std::vector<int> sizes);
    static ConstructionSpec two_pairs(int n) { return {Kind::TwoPairs, n, {}}; }
    static ConstructionSpec complete(int n) { return {Kind::Complete, n, {}}; }
    static ConstructionSpec hilton_milner(int n) { return {Kind::HiltonMilner, n, {}}; }
};

Hypergraph3 construct(const ConstructionSpec& spec);

// Shorthands for the catalog constructions.
Hypergraph3 star(int n);          // all triples through vertex 0; C(n-1,2) edges
Hypergraph3 comet(int n);         // K4 on {0..3} plus all {0,a,b}, a,b >= 4
Hypergraph3 clique_union(const std::vector<int>& sizes);
Hypergraph3 two_pairs(int n);     // all triples containing {0,1} or {2,3}; 2n-4 edges
Hypergraph3 complete(int n);
Hypergraph3 hilton_milner(int n); // edge {1,2,3} plus all triples through 0 meeting it

} // namespace turan3
