#include "turan3/patterns.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace turan3 {

namespace {

long brute_automorphisms(int nv, const std::vector<Triple>& edges) {
    std::vector<std::uint32_t> masks;
    for (const Triple& t : edges) masks.push_back(t.mask());
    std::sort(masks.begin(), masks.end());
    std::vector<int> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        std::vector<std::uint32_t> mapped;
        mapped.reserve(masks.size());
        for (const Triple& t : edges)
            mapped.push_back((1u << perm[t.a]) | (1u << perm[t.b]) | (1u << perm[t.c]));
        std::sort(mapped.begin(), mapped.end());
        if (mapped == masks) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::vector<int> expansion_order(int nv, const std::vector<Triple>& edges) {
    // Each subsequent edge shares a vertex with already-ordered ones when
    // possible; cuts the injection tree for P and C.
    std::vector<int> order;
    std::vector<bool> used(edges.size(), false);
    std::uint32_t seen = 0;
    (void)nv;
    for (std::size_t step = 0; step < edges.size(); ++step) {
        int best = -1;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (used[i]) continue;
            bool touches = (edges[i].mask() & seen) != 0;
            if (best == -1 || (touches && !((edges[best].mask() & seen) != 0)))
                best = static_cast<int>(i);
        }
        used[best] = true;
        seen |= edges[best].mask();
        order.push_back(best);
    }
    return order;
}

Pattern make_pattern(PatternId id, std::string name, int nv, std::vector<Triple> edges) {
    Pattern p;
    p.id = id;
    p.name = std::move(name);
    p.vertex_count = nv;
    p.edges = std::move(edges);
    p.automorphism_count = brute_automorphisms(nv, p.edges);
    p.degrees.assign(nv, 0);
    for (const Triple& t : p.edges) {
        ++p.degrees[t.a];
        ++p.degrees[t.b];
        ++p.degrees[t.c];
    }
    p.match_order = expansion_order(nv, p.edges);
    return p;
}

Triple tr(int a, int b, int c) {
    return Triple{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                  static_cast<std::uint8_t>(c)};
}

std::vector<Triple> complete_edges(int k) {
    std::vector<Triple> es;
    for (int c = 2; c < k; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) es.push_back(tr(a, b, c));
    return es;
}

const std::map<PatternId, Pattern>& catalog() {
    static const std::map<PatternId, Pattern> cat = [] {
        std::map<PatternId, Pattern> m;
        m.emplace(PatternId::P,
                  make_pattern(PatternId::P, "P", 7, {tr(0, 1, 2), tr(2, 3, 4), tr(4, 5, 6)}));
        m.emplace(PatternId::C,
                  make_pattern(PatternId::C, "C", 6, {tr(0, 1, 2), tr(2, 3, 4), tr(0, 4, 5)}));
        m.emplace(PatternId::M, make_pattern(PatternId::M, "M", 6, {tr(0, 1, 2), tr(3, 4, 5)}));
        m.emplace(PatternId::P2, make_pattern(PatternId::P2, "P2", 5, {tr(0, 1, 2), tr(2, 3, 4)}));
        m.emplace(PatternId::P2uK3, make_pattern(PatternId::P2uK3, "P2uK3", 8,
                                                 {tr(0, 1, 2), tr(2, 3, 4), tr(5, 6, 7)}));
        for (int k = 1; k <= 6; ++k) {
            PatternId id = static_cast<PatternId>(static_cast<int>(PatternId::K1) + (k - 1));
            m.emplace(id, make_pattern(id, "K" + std::to_string(k), k, complete_edges(k)));
        }
        return m;
    }();
    return cat;
}

// Host-side view used by the backtracking matchers.
struct HostView {
    int n;
    std::vector<Triple> edges;
    std::vector<std::uint32_t> masks;
    std::array<std::vector<int>, kMaxVertices> inc;
    std::array<int, kMaxVertices> deg{};

    explicit HostView(const Hypergraph3& h) : n(h.n()), edges(h.edges()) {
        masks.reserve(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Triple& t = edges[i];
            masks.push_back(t.mask());
            inc[t.a].push_back(static_cast<int>(i));
            inc[t.b].push_back(static_cast<int>(i));
            inc[t.c].push_back(static_cast<int>(i));
            ++deg[t.a];
            ++deg[t.b];
            ++deg[t.c];
        }
    }
};

struct Matcher {
    const HostView& host;
    const Pattern& pat;
    bool count_mode = false;
    long found = 0;
    std::array<int, 8> map{};      // pattern vertex -> host vertex, -1 unset
    std::uint32_t used_hosts = 0;
    std::optional<Witness> witness;

    Matcher(const HostView& hv, const Pattern& p) : host(hv), pat(p) { map.fill(-1); }

    bool assign(int pv, int hv) {
        if (map[pv] != -1) return map[pv] == hv;
        if (used_hosts & (1u << hv)) return false;
        if (host.deg[hv] < pat.degrees[pv]) return false;
        map[pv] = hv;
        used_hosts |= 1u << hv;
        return true;
    }

    void unassign(int pv, int prev) {
        if (prev == -1) {
            used_hosts &= ~(1u << map[pv]);
            map[pv] = -1;
        }
    }

    // Rest after the last edge: place isolated pattern vertices (K1, K2).
    bool complete_isolated() {
        for (int pv = 0; pv < pat.vertex_count; ++pv) {
            if (map[pv] != -1) continue;
            bool placed = false;
            for (int hv = 0; hv < host.n; ++hv) {
                if (used_hosts & (1u << hv)) continue;
                map[pv] = hv;
                used_hosts |= 1u << hv;
                placed = true;
                break;
            }
            if (!placed) return false;
        }
        return true;
    }

    long isolated_arrangements() const {
        int free_pat = 0;
        for (int pv = 0; pv < pat.vertex_count; ++pv)
            if (map[pv] == -1) ++free_pat;
        int free_host = host.n - __builtin_popcount(used_hosts);
        long ways = 1;
        for (int i = 0; i < free_pat; ++i) ways *= (free_host - i);
        return free_pat == 0 ? 1 : (free_host >= free_pat ? ways : 0);
    }

    bool step(std::size_t oi) {
        if (oi == pat.match_order.size()) {
            if (count_mode) {
                found += isolated_arrangements();
                return false; // keep enumerating
            }
            std::array<int, 8> saved = map;
            std::uint32_t saved_used = used_hosts;
            if (!complete_isolated()) {
                map = saved;
                used_hosts = saved_used;
                return false;
            }
            witness = Witness(map.begin(), map.begin() + pat.vertex_count);
            map = saved;
            used_hosts = saved_used;
            return true;
        }
        const Triple& pe = pat.edges[pat.match_order[oi]];
        std::array<int, 3> pvs = {pe.a, pe.b, pe.c};
        // candidate host edges: through some mapped vertex if any, else all
        int anchor = -1;
        for (int pv : pvs)
            if (map[pv] != -1) {
                anchor = map[pv];
                break;
            }
        const std::vector<int>* cands;
        std::vector<int> all;
        if (anchor != -1) {
            cands = &host.inc[anchor];
        } else {
            all.resize(host.edges.size());
            std::iota(all.begin(), all.end(), 0);
            cands = &all;
        }
        for (int ei : *cands) {
            std::uint32_t hm = host.masks[ei];
            // mapped pattern vertices of this edge must land inside the host edge
            bool ok = true;
            std::uint32_t taken = 0;
            for (int pv : pvs) {
                if (map[pv] == -1) continue;
                std::uint32_t b = 1u << map[pv];
                if (!(hm & b)) {
                    ok = false;
                    break;
                }
                taken |= b;
            }
            if (!ok) continue;
            // assign unmapped pattern vertices to the remaining host vertices
            std::array<int, 3> freepv{};
            int nfree = 0;
            for (int pv : pvs)
                if (map[pv] == -1) freepv[nfree++] = pv;
            std::array<int, 3> freehv{};
            int nh = 0;
            const Triple& he = host.edges[ei];
            for (int hv : {int(he.a), int(he.b), int(he.c)})
                if (!(taken & (1u << hv))) freehv[nh++] = hv;
            if (nh != nfree) continue;
            std::sort(freehv.begin(), freehv.begin() + nh);
            do {
                std::array<int, 3> prev{};
                bool good = true;
                int done = 0;
                for (int i = 0; i < nfree; ++i) {
                    prev[i] = map[freepv[i]];
                    if (!assign(freepv[i], freehv[i])) {
                        good = false;
                        break;
                    }
                    ++done;
                }
                if (good && step(oi + 1)) return true;
                for (int i = done - 1; i >= 0; --i) unassign(freepv[i], prev[i]);
            } while (std::next_permutation(freehv.begin(), freehv.begin() + nh));
        }
        return false;
    }
};

std::optional<Witness> contains_m_fast(const HostView& host) {
    const Pattern& m = pattern(PatternId::M);
    for (std::size_t i = 0; i < host.masks.size(); ++i)
        for (std::size_t j = i + 1; j < host.masks.size(); ++j)
            if ((host.masks[i] & host.masks[j]) == 0) {
                const Triple& e = host.edges[i];
                const Triple& f = host.edges[j];
                (void)m;
                return Witness{e.a, e.b, e.c, f.a, f.b, f.c};
            }
    return std::nullopt;
}

std::optional<Witness> contains_p_fast(const HostView& host) {
    // P laid out as e1 = {0,1,2}, e2 = {2,3,4}, e3 = {4,5,6}; scan middle edges.
    for (std::size_t mid = 0; mid < host.edges.size(); ++mid) {
        const Triple& e2 = host.edges[mid];
        std::uint32_t m2 = host.masks[mid];
        std::array<int, 3> vs = {int(e2.a), int(e2.b), int(e2.c)};
        for (int x : vs)
            for (int y : vs) {
                if (x == y) continue;
                for (int i1 : host.inc[x]) {
                    std::uint32_t m1 = host.masks[i1];
                    if ((m1 & m2) != (1u << x)) continue;
                    for (int i3 : host.inc[y]) {
                        std::uint32_t m3 = host.masks[i3];
                        if ((m3 & m2) != (1u << y)) continue;
                        if (m1 & m3) continue;
                        const Triple& e1 = host.edges[i1];
                        const Triple& e3 = host.edges[i3];
                        std::array<int, 2> a1{}, a3{};
                        int k = 0;
                        for (int v : {int(e1.a), int(e1.b), int(e1.c)})
                            if (v != x) a1[k++] = v;
                        k = 0;
                        for (int v : {int(e3.a), int(e3.b), int(e3.c)})
                            if (v != y) a3[k++] = v;
                        int z = -1;
                        for (int v : vs)
                            if (v != x && v != y) z = v;
                        return Witness{a1[0], a1[1], x, z, y, a3[0], a3[1]};
                    }
                }
            }
    }
    return std::nullopt;
}

} // namespace

const Pattern& pattern(PatternId id) { return catalog().at(id); }

std::optional<PatternId> pattern_by_name(std::string_view name) {
    for (const auto& [id, p] : catalog())
        if (p.name == name) return id;
    return std::nullopt;
}

const std::vector<PatternId>& all_patterns() {
    static const std::vector<PatternId> ids = [] {
        std::vector<PatternId> v;
        for (const auto& [id, p] : catalog()) v.push_back(id);
        return v;
    }();
    return ids;
}

std::optional<Witness> contains_generic(const Hypergraph3& host, const Pattern& p) {
    if (p.vertex_count > host.n()) return std::nullopt;
    HostView hv(host);
    Matcher m(hv, p);
    m.step(0);
    return m.witness;
}

std::optional<Witness> contains(const Hypergraph3& host, const Pattern& p) {
    if (p.vertex_count > host.n()) return std::nullopt;
    if (p.id == PatternId::M) {
        HostView hv(host);
        return contains_m_fast(hv);
    }
    if (p.id == PatternId::P) {
        HostView hv(host);
        return contains_p_fast(hv);
    }
    return contains_generic(host, p);
}

std::optional<Witness> contains(const Hypergraph3& host, PatternId id) {
    return contains(host, pattern(id));
}

bool witness_valid(const Hypergraph3& host, const Pattern& p, const Witness& w) {
    if (static_cast<int>(w.size()) != p.vertex_count) return false;
    std::uint32_t seen = 0;
    for (int hv : w) {
        if (hv < 0 || hv >= host.n()) return false;
        if (seen & (1u << hv)) return false;
        seen |= 1u << hv;
    }
    for (const Triple& t : p.edges) {
        int x = w[t.a], y = w[t.b], z = w[t.c];
        int a = std::min({x, y, z});
        int c = std::max({x, y, z});
        int b = x + y + z - a - c;
        if (!host.has(a, b, c)) return false;
    }
    return true;
}

long count_embeddings(const Hypergraph3& host, const Pattern& p) {
    if (p.vertex_count > host.n()) return 0;
    HostView hv(host);
    Matcher m(hv, p);
    m.count_mode = true;
    m.step(0);
    return m.found;
}

long count_copies(const Hypergraph3& host, const Pattern& p) {
    long emb = count_embeddings(host, p);
    if (emb % p.automorphism_count != 0)
        throw std::logic_error("count_copies: embeddings not divisible by automorphism count");
    return emb / p.automorphism_count;
}

bool is_intersecting(const Hypergraph3& h) { return !contains(h, PatternId::M).has_value(); }

std::optional<int> common_vertex(const Hypergraph3& h) {
    std::uint32_t common = VertexSet::all(h.n()).mask;
    h.for_each_edge([&](TripleId id) { common &= unrank_triple(id, h.n()).mask(); });
    if (common == 0) return std::nullopt;
    return __builtin_ctz(common);
}

ConstructionSpec ConstructionSpec::clique_union(std::vector<int> sizes) {
    ConstructionSpec s{Kind::CliqueUnion, 0, std::move(sizes)};
    for (int k : s.sizes) s.n += k;
    return s;
}

Hypergraph3 star(int n) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("star: bad n");
    std::vector<Triple> es;
    for (int b = 2; b < n; ++b)
        for (int a = 1; a < b; ++a) es.push_back(tr(0, a, b));
    return Hypergraph3(n, es);
}

Hypergraph3 comet(int n) {
    if (n < 5 || n > kMaxVertices) throw std::invalid_argument("comet: need 5 <= n <= 32");
    std::vector<Triple> es = {tr(0, 1, 2), tr(0, 1, 3), tr(0, 2, 3), tr(1, 2, 3)};
    for (int b = 5; b < n; ++b)
        for (int a = 4; a < b; ++a) es.push_back(tr(0, a, b));
    return Hypergraph3(n, es);
}

Hypergraph3 clique_union(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("clique_union: no sizes");
    int n = 0;
    for (int k : sizes) {
        if (k < 1) throw std::invalid_argument("clique_union: sizes must be positive");
        n += k;
    }
    if (n > kMaxVertices) throw std::invalid_argument("clique_union: sizes sum exceeds 32");
    std::vector<Triple> es;
    int off = 0;
    for (int k : sizes) {
        for (const Triple& t : complete_edges(k))
            es.push_back(tr(t.a + off, t.b + off, t.c + off));
        off += k;
    }
    return Hypergraph3(n, es);
}

Hypergraph3 two_pairs(int n) {
    if (n < 6 || n > kMaxVertices) throw std::invalid_argument("two_pairs: need 6 <= n <= 32");
    std::vector<Triple> es;
    for (int x = 2; x < n; ++x) es.push_back(tr(0, 1, x));
    for (int x = 0; x < n; ++x) {
        if (x == 2 || x == 3) continue;
        int a = std::min({2, 3, x});
        int c = std::max({2, 3, x});
        int b = 2 + 3 + x - a - c;
        es.push_back(tr(a, b, c));
    }
    return Hypergraph3(n, es);
}

Hypergraph3 complete(int n) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("complete: bad n");
    return Hypergraph3(n, complete_edges(n));
}

Hypergraph3 hilton_milner(int n) {
    if (n < 4 || n > kMaxVertices) throw std::invalid_argument("hilton_milner: need 4 <= n <= 32");
    std::vector<Triple> es = {tr(1, 2, 3)};
    for (int b = 2; b < n; ++b)
        for (int a = 1; a < b; ++a)
            if (a <= 3 || b <= 3) es.push_back(tr(0, a, b));
    return Hypergraph3(n, es);
}

Hypergraph3 construct(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case ConstructionSpec::Kind::Star: return star(spec.n);
        case ConstructionSpec::Kind::Comet: return comet(spec.n);
        case ConstructionSpec::Kind::CliqueUnion: return clique_union(spec.sizes);
        case ConstructionSpec::Kind::TwoPairs: return two_pairs(spec.n);
        case ConstructionSpec::Kind::Complete: return complete(spec.n);
        case ConstructionSpec::Kind::HiltonMilner: return hilton_milner(spec.n);
    }
    throw std::invalid_argument("construct: unknown kind");
}

} // namespace turan3
