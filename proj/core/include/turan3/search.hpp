#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "turan3/hypergraph.hpp"
#include "turan3/patterns.hpp"

namespace turan3 {

// A required sub-3-graph: either a catalog pattern or an explicit graph.
using RequiredSpec = std::variant<PatternId, Hypergraph3>;

// Full specification of one maximization instance.
struct ConstraintSet {
    static constexpr unsigned kConnected = 1u;
    static constexpr unsigned kIntersecting = 2u;
    static constexpr unsigned kNoCommonVertex = 4u;

    std::vector<PatternId> forbidden;            // H must be F-free for each F
    std::optional<RequiredSpec> required;        // H must contain a copy
    std::vector<Hypergraph3> excluded_supergraphs; // H must not embed into any
    unsigned flags = 0;
};

struct SearchConfig {
    double time_limit = 0;    // seconds; <= 0 means unbounded
    bool enumerate_all = false;
    int workers = 1;
    long long node_limit = 0; // 0 means unbounded
    int witness_limit = 256;
    // Alternative branching rule (pick the available triple most entangled
    // with the included edges instead of plain colex order). Off by default;
    // kept as a measured switch.
    bool branch_most_constrained = false;
    // Optional certified warm start; re-verified before use, ignored if
    // infeasible.
    std::optional<Hypergraph3> seed;
};

enum class SearchStatus { Exact, LowerBoundOnly, Infeasible, NotDefined };

const char* to_string(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::Infeasible;
    int value = -1;                    // best edge count found
    std::vector<Hypergraph3> witnesses; // canonical forms, deduped, sorted
    long long nodes = 0;
    double elapsed_s = 0;
    bool witnesses_truncated = false;
};

// Exact branch-and-bound maximization of the edge count over n-vertex
// 3-graphs subject to the constraints. Decisions follow colex triple order;
// a triple whose inclusion would complete a forbidden pattern with the
// included edges is dropped from the subtree immediately. With
// enumerate_all, every optimum is collected up to isomorphism.
SearchOutcome max_edges(int n, const ConstraintSet& constraints, const SearchConfig& config = {});

struct ExistsOutcome {
    enum class Verdict { Yes, No, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::optional<Hypergraph3> witness;
    long long nodes = 0;
    double elapsed_s = 0;
};

// Decision form: is there a constrained graph with at least target_m edges?
// "No" only after exhaustive refutation.
ExistsOutcome decide_exists(int n, const ConstraintSet& constraints, int target_m,
                            const SearchConfig& config = {});

// Independent re-verification of a finished graph against a constraint set,
// built on the pattern/iso detectors rather than search bookkeeping.
bool satisfies(const Hypergraph3& h, const ConstraintSet& constraints);

} // namespace turan3
