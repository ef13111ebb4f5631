#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "turan3/hypergraph.hpp"

namespace turan3::testing {

// Deterministic xorshift; tests must not depend on libc rand.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline Hypergraph3 random_graph(int n, double density, Rng& rng) {
    Hypergraph3 g(n);
    for (int r = 0; r < triple_count(n); ++r)
        if ((rng.next() % 1000) < static_cast<std::uint64_t>(density * 1000))
            g = g.with_edge(r, true);
    return g;
}

inline Hypergraph3 relabel(const Hypergraph3& g, const std::vector<int>& perm) {
    std::vector<Triple> es;
    for (Triple t : g.edges()) {
        int x = perm[t.a], y = perm[t.b], z = perm[t.c];
        int a = std::min({x, y, z});
        int c = std::max({x, y, z});
        int b = x + y + z - a - c;
        es.push_back(Triple{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                            static_cast<std::uint8_t>(c)});
    }
    return Hypergraph3(g.n(), es);
}

inline Hypergraph3 random_relabel(const Hypergraph3& g, Rng& rng) {
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = g.n() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    return relabel(g, perm);
}

inline Hypergraph3 from_mask(int n, std::uint32_t mask) {
    Hypergraph3 g(n);
    for (int r = 0; r < triple_count(n); ++r)
        if (mask & (1u << r)) g = g.with_edge(r, true);
    return g;
}

} // namespace turan3::testing
