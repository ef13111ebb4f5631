#include "turan3/hypergraph.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace turan3 {

TripleId rank_triple(int a, int b, int c) {
    if (!(0 <= a && a < b && b < c && c < kMaxVertices))
        throw std::out_of_range("rank_triple: need 0 <= a < b < c < 32");
    return a + static_cast<int>(binom(b, 2) + binom(c, 3));
}

Triple unrank_triple(TripleId id, int n) {
    if (n < 3 || n > kMaxVertices)
        throw std::out_of_range("unrank_triple: n out of range");
    if (id < 0 || id >= triple_count(n))
        throw std::out_of_range("unrank_triple: id out of range for n=" + std::to_string(n));
    int c = 2;
    while (binom(c + 1, 3) <= id) ++c;
    int rem = id - static_cast<int>(binom(c, 3));
    int b = 1;
    while (binom(b + 1, 2) <= rem) ++b;
    int a = rem - static_cast<int>(binom(b, 2));
    return Triple{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                  static_cast<std::uint8_t>(c)};
}

Hypergraph3::Hypergraph3(int n) : n_(n), m_(0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("Hypergraph3: vertex count must be in 1..32");
    bits_.assign((triple_count(n) + 63) / 64, 0);
}

Hypergraph3::Hypergraph3(int n, std::span<const Triple> edges) : Hypergraph3(n) {
    for (const Triple& t : edges) {
        if (t.c >= n) throw std::out_of_range("Hypergraph3: edge vertex >= n");
        TripleId id = rank_triple(t.a, t.b, t.c);
        std::uint64_t& w = bits_[id / 64];
        std::uint64_t bit = 1ull << (id % 64);
        if (!(w & bit)) {
            w |= bit;
            ++m_;
        }
    }
}

void Hypergraph3::check_id(TripleId id) const {
    if (id < 0 || id >= triple_count(n_))
        throw std::out_of_range("Hypergraph3: triple id out of range");
}

bool Hypergraph3::has(TripleId id) const {
    check_id(id);
    return (bits_[id / 64] >> (id % 64)) & 1ull;
}

Hypergraph3 Hypergraph3::with_edge(TripleId id, bool present) const {
    check_id(id);
    Hypergraph3 out = *this;
    std::uint64_t& w = out.bits_[id / 64];
    std::uint64_t bit = 1ull << (id % 64);
    if (present && !(w & bit)) {
        w |= bit;
        ++out.m_;
    } else if (!present && (w & bit)) {
        w &= ~bit;
        --out.m_;
    }
    return out;
}

int Hypergraph3::degree(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("degree: vertex out of range");
    int d = 0;
    for_each_edge([&](TripleId id) {
        if (unrank_triple(id, n_).mask() & (1u << v)) ++d;
    });
    return d;
}

Link Hypergraph3::link(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("link: vertex out of range");
    Link l{v, {}};
    for_each_edge([&](TripleId id) {
        Triple t = unrank_triple(id, n_);
        if (!(t.mask() & (1u << v))) return;
        int u, w;
        if (t.a == v) {
            u = t.b; w = t.c;
        } else if (t.b == v) {
            u = t.a; w = t.c;
        } else {
            u = t.a; w = t.b;
        }
        l.pairs.emplace_back(u, w);
    });
    return l;
}

std::vector<Triple> Hypergraph3::edges() const {
    std::vector<Triple> out;
    out.reserve(m_);
    for_each_edge([&](TripleId id) { out.push_back(unrank_triple(id, n_)); });
    return out;
}

Hypergraph3 Hypergraph3::induced(VertexSet s) const {
    if (s.mask & ~VertexSet::all(n_).mask)
        throw std::out_of_range("induced: set not contained in vertices");
    int k = s.count();
    if (k < 1) throw std::invalid_argument("induced: empty vertex set");
    std::array<int, kMaxVertices> relabel{};
    relabel.fill(-1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
        if (s.test(v)) relabel[v] = next++;
    std::vector<Triple> kept;
    for_each_edge([&](TripleId id) {
        Triple t = unrank_triple(id, n_);
        if ((t.mask() & s.mask) != t.mask()) return;
        kept.push_back(Triple{static_cast<std::uint8_t>(relabel[t.a]),
                              static_cast<std::uint8_t>(relabel[t.b]),
                              static_cast<std::uint8_t>(relabel[t.c])});
    });
    return Hypergraph3(k, kept);
}

Hypergraph3 Hypergraph3::without_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("without_vertex: vertex out of range");
    if (n_ == 1) throw std::invalid_argument("without_vertex: cannot empty the vertex set");
    VertexSet s = VertexSet::all(n_);
    s.reset(v);
    return induced(s);
}

bool Hypergraph3::connected() const {
    if (n_ == 1) return true; // no bipartition exists
    std::array<int, kMaxVertices> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for_each_edge([&](TripleId id) {
        Triple t = unrank_triple(id, n_);
        parent[find(t.b)] = find(t.a);
        parent[find(t.c)] = find(t.a);
    });
    int root = find(0);
    for (int v = 1; v < n_; ++v)
        if (find(v) != root) return false;
    return true;
}

Hypergraph3 disjoint_union(const Hypergraph3& h1, const Hypergraph3& h2) {
    int n = h1.n() + h2.n();
    if (n > kMaxVertices)
        throw std::invalid_argument("disjoint_union: combined vertex count exceeds 32");
    std::vector<Triple> es = h1.edges();
    int off = h1.n();
    for (Triple t : h2.edges())
        es.push_back(Triple{static_cast<std::uint8_t>(t.a + off),
                            static_cast<std::uint8_t>(t.b + off),
                            static_cast<std::uint8_t>(t.c + off)});
    return Hypergraph3(n, es);
}

Hypergraph3 cross_edges(int n, VertexSet u, VertexSet w) {
    if (n < 2 || n > kMaxVertices) throw std::invalid_argument("cross_edges: bad n");
    std::uint32_t all = VertexSet::all(n).mask;
    if (u.empty() || w.empty() || (u.mask & w.mask) != 0 || (u.mask | w.mask) != all)
        throw std::invalid_argument("cross_edges: u and w must partition the vertices");
    Hypergraph3 g(n);
    std::vector<Triple> es;
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) {
                std::uint32_t m = (1u << a) | (1u << b) | (1u << c);
                if ((m & u.mask) && (m & w.mask))
                    es.push_back(Triple{static_cast<std::uint8_t>(a),
                                        static_cast<std::uint8_t>(b),
                                        static_cast<std::uint8_t>(c)});
            }
    return Hypergraph3(n, es);
}

} // namespace turan3
