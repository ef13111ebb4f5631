#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "turan3/binomial.hpp"

namespace turan3 {

// Index of an unordered vertex triple in colex order: triples are sorted by
// their largest element, then the middle one, then the smallest.
// rank({a,b,c}) = a + C(b,2) + C(c,3) for a < b < c.
using TripleId = int;

struct Triple {
    std::uint8_t a, b, c; // a < b < c

    std::uint32_t mask() const { return (1u << a) | (1u << b) | (1u << c); }
    bool operator==(const Triple&) const = default;
    auto operator<=>(const Triple&) const = default;
};

TripleId rank_triple(int a, int b, int c);
Triple unrank_triple(TripleId id, int n);

// Subset of the vertices 0..n-1 as a bit mask.
struct VertexSet {
    std::uint32_t mask = 0;

    static VertexSet all(int n) {
        return {n == 32 ? ~0u : ((1u << n) - 1u)};
    }
    bool test(int v) const { return (mask >> v) & 1u; }
    void set(int v) { mask |= (1u << v); }
    void reset(int v) { mask &= ~(1u << v); }
    int count() const { return __builtin_popcount(mask); }
    bool empty() const { return mask == 0; }
    bool operator==(const VertexSet&) const = default;
};

// Link of a vertex: the pairs completing it to an edge.
struct Link {
    int vertex = 0;
    std::vector<std::pair<int, int>> pairs; // sorted, each pair (u,w) with u<w

    int degree() const { return static_cast<int>(pairs.size()); }
};

// A 3-uniform hypergraph on n labeled vertices (1 <= n <= 32), edge set
// stored as a bit vector over colex triple ranks. Values are immutable;
// all edits return new graphs.
class Hypergraph3 {
public:
    explicit Hypergraph3(int n);
    Hypergraph3(int n, std::span<const Triple> edges);

    int n() const { return n_; }
    int size() const { return m_; } // edge count

    bool has(TripleId id) const;
    bool has(int a, int b, int c) const { return has(rank_triple(a, b, c)); }

    // Pure edit: returns a copy with the given triple set or cleared.
    Hypergraph3 with_edge(TripleId id, bool present) const;

    int degree(int v) const;
    Link link(int v) const;

    std::vector<Triple> edges() const; // colex order

    template <typename Fn>
    void for_each_edge(Fn&& fn) const {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word) {
                int bit = __builtin_ctzll(word);
                word &= word - 1;
                fn(static_cast<TripleId>(w * 64 + bit));
            }
        }
    }

    Hypergraph3 induced(VertexSet s) const;
    Hypergraph3 without_vertex(int v) const;
    bool connected() const;

    const std::vector<std::uint64_t>& words() const { return bits_; }

    bool operator==(const Hypergraph3&) const = default;

private:
    void check_id(TripleId id) const;

    int n_;
    int m_;
    std::vector<std::uint64_t> bits_;
};

Hypergraph3 disjoint_union(const Hypergraph3& h1, const Hypergraph3& h2);

// All triples meeting both sides of the partition {u, w} of 0..n-1.
Hypergraph3 cross_edges(int n, VertexSet u, VertexSet w);

} // namespace turan3
