#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "turan3/hypergraph.hpp"
#include "turan3/patterns.hpp"
#include "turan3/turan.hpp"

namespace turan3 {

// Total edge coloring of the complete 3-graph on n vertices.
struct Coloring {
    int n = 0;
    int r = 0;                        // color count
    std::vector<std::uint8_t> colors; // length C(n,3), values < r

    Hypergraph3 color_class(int c) const;
    bool operator==(const Coloring&) const = default;
};

// ".col3" text format:
//   col3 n=<N> r=<R>
//   u v w c        (C(N,3) lines in colex order, 0 <= c < R)
void write_col3(const Coloring& col, std::ostream& out);
Coloring read_col3(std::istream& in);
Coloring load_col3_file(const std::string& path);
void save_col3_file(const Coloring& col, const std::string& path);

// ceil(C(n,3) / r): some color class has at least this many edges.
int pigeonhole_bound(int n, int r);

struct MonoWitness {
    int color = 0;
    Witness embedding;
};

// First monochromatic copy in scan order (colors ascending), or absent.
std::optional<MonoWitness> check_coloring(const Coloring& col, const Pattern& pat);

struct ColoringSearchConfig {
    double time_limit = 0;
    long long node_limit = 0;
    // Optional per-class capacity: prune when the remaining triples cannot be
    // absorbed without pushing some class past the cap. Sound whenever cap is
    // a true upper bound on a pattern-free class.
    std::optional<int> class_cap;
    bool break_color_symmetry = true; // colors enter in first-use order
};

struct ColoringOutcome {
    enum class Verdict { Found, NoneExists, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::optional<Coloring> coloring;
    long long nodes = 0;
    double elapsed_s = 0;
};

// Propagation-based exhaustive search for an r-coloring of K^3_n with no
// monochromatic copy of the pattern. NoneExists only on exhaustion.
ColoringOutcome search_coloring(int n, int r, const Pattern& pat,
                                const ColoringSearchConfig& config = {});

// ---- machine-checked deduction that R(P;r) <= r+6 for r <= 7 -------------

struct DeductionStep {
    enum class Kind { Pigeonhole, TuranLookup, StarDeletion, StarTilingImpossible,
                      PartitionArgument };
    Kind kind;
    std::string name;
    // Pigeonhole: n, r, value = ceil(C(n,3)/r)
    // TuranLookup: n, order, value, citation/provenance
    // StarDeletion: n, r -> target (n-1, r-1); needs pigeonhole > lookup
    // StarTilingImpossible: n, r, value = C(n-r,3) > 0
    // PartitionArgument: the exhaustive K6|K6 split check
    int n = 0;
    int r = 0;
    int order = 1;
    long long value = 0;
    std::string provenance; // "cited(<tag>)" or "computed"
    bool checked = false;
    std::string detail;
};

struct StepComparison {
    std::string lhs, rhs; // step names
    long long lhs_value = 0, rhs_value = 0;
    char relation = '>'; // '>' or '='
    bool holds = false;
};

struct DeductionProof {
    int r = 0;
    int n = 0; // r + 6
    std::vector<DeductionStep> steps;
    std::vector<StepComparison> comparisons;
    std::vector<int> depends_on; // smaller r whose proofs must also be valid
    bool valid = false;
};

struct DeductionConfig {
    // Turán lookups resolve through the certified table by default; computed
    // mode reruns the searches that fit the time budget and records per-step
    // provenance.
    bool computed_lookups = false;
    SearchConfig search;
};

// Builds and checks the chain for R(P;r) <= r+6, 2 <= r <= 7.
DeductionProof verify_deduction(int r, const DeductionConfig& config = {});

// ---- exhaustive partition-pair argument for r = 6 -------------------------

struct PartitionCheckReport {
    int class_count = 0;              // expected 200
    bool all_meet_b_in_36 = true;     // every class meets B in exactly 36 edges
    int b_edge_count = 0;             // expected 180
    int max_disjoint_family = 0;      // expected 2
    std::pair<int, int> disjoint_pair{-1, -1}; // witness indices
    bool ok = false;
};

PartitionCheckReport r6_partition_check();

} // namespace turan3
