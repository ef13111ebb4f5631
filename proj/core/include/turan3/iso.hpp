#pragma once

#include <compare>
#include <span>
#include <vector>

#include "turan3/hypergraph.hpp"

namespace turan3 {

// Canonical representative of an isomorphism class: the vertex labeling whose
// colex edge bit vector is maximal, i.e. edges are pushed onto the smallest
// ranks. Two graphs have equal canonical forms iff they are isomorphic.
struct CanonicalForm {
    int n = 0;
    std::vector<Triple> edges; // colex-sorted under the canonical labeling

    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Hypergraph3& h);
Hypergraph3 canonical_graph(const Hypergraph3& h);

bool are_isomorphic(const Hypergraph3& a, const Hypergraph3& b);

// Injective vertex map sending every edge of h to an edge of hbig, with h
// padded by isolated vertices when it has fewer vertices. Specialized paths
// for full-star and clique-union targets; generic backtracking otherwise.
bool embeds_into(const Hypergraph3& h, const Hypergraph3& hbig);
bool embeds_into_generic(const Hypergraph3& h, const Hypergraph3& hbig);

// One canonical representative per isomorphism class, sorted by canonical form.
std::vector<Hypergraph3> dedupe(std::span<const Hypergraph3> family);

} // namespace turan3
