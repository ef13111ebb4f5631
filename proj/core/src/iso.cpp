#include "turan3/iso.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

#include "turan3/patterns.hpp"

namespace turan3 {

namespace {

using Words = std::vector<std::uint64_t>;

bool get_bit(const Words& w, int pos) { return (w[pos / 64] >> (pos % 64)) & 1ull; }
void set_bit(Words& w, int pos) { w[pos / 64] |= 1ull << (pos % 64); }
void clear_bit(Words& w, int pos) { w[pos / 64] &= ~(1ull << (pos % 64)); }

// Bit streams compare by first differing position; a 1 there wins. The
// canonical labeling maximizes the stream, which pushes edges onto the
// smallest colex ranks.
int cmp_streams(const std::uint64_t* a, const std::uint64_t* b, int nbits) {
    int words = (nbits + 63) / 64;
    for (int i = 0; i < words; ++i) {
        std::uint64_t x = a[i], y = b[i];
        if (i == words - 1 && nbits % 64) {
            std::uint64_t mask = (1ull << (nbits % 64)) - 1;
            x &= mask;
            y &= mask;
        }
        std::uint64_t diff = x ^ y;
        if (diff) {
            std::uint64_t low = diff & -diff;
            return (x & low) ? 1 : -1;
        }
    }
    return 0;
}

struct Canonizer {
    const Hypergraph3& g;
    int n;
    std::vector<int> chosen; // label -> vertex
    std::uint32_t used = 0;
    Words current;
    Words best;
    std::vector<int> best_labeling;
    bool have_best = false;
    std::vector<std::array<std::uint8_t, kMaxVertices>> gens;

    explicit Canonizer(const Hypergraph3& graph) : g(graph), n(graph.n()) {
        current.assign((triple_count(n) + 63) / 64, 0);
    }

    bool edge(int x, int y, int z) const {
        int a = std::min({x, y, z});
        int c = std::max({x, y, z});
        int b = x + y + z - a - c;
        return g.has(a, b, c);
    }

    // Bits of the triples {label i, label j, new label k} for i < j < k,
    // packed in pair-rank order.
    std::array<std::uint64_t, 8> block_of(int u) const {
        std::array<std::uint64_t, 8> blk{};
        int k = static_cast<int>(chosen.size());
        int p = 0;
        for (int j = 1; j < k; ++j)
            for (int i = 0; i < j; ++i, ++p)
                if (edge(chosen[i], chosen[j], u)) blk[p / 64] |= 1ull << (p % 64);
        return blk;
    }

    std::array<std::uint64_t, 8> best_block() const {
        std::array<std::uint64_t, 8> blk{};
        int k = static_cast<int>(chosen.size());
        int base = triple_count(k);
        int len = static_cast<int>(binom(k, 2));
        for (int p = 0; p < len; ++p)
            if (get_bit(best, base + p)) blk[p / 64] |= 1ull << (p % 64);
        return blk;
    }

    void apply_block(const std::array<std::uint64_t, 8>& blk, bool on) {
        int k = static_cast<int>(chosen.size()) - 1; // label just pushed
        int base = triple_count(k);                  // ranks of triples with maximum label k
        int len = static_cast<int>(binom(k, 2));
        for (int p = 0; p < len; ++p) {
            if ((blk[p / 64] >> (p % 64)) & 1ull) {
                if (on)
                    set_bit(current, base + p);
                else
                    clear_bit(current, base + p);
            }
        }
    }

    void record_automorphism() {
        std::array<std::uint8_t, kMaxVertices> gamma{};
        for (int k = 0; k < n; ++k)
            gamma[chosen[k]] = static_cast<std::uint8_t>(best_labeling[k]);
        for (const auto& existing : gens)
            if (std::equal(existing.begin(), existing.begin() + n, gamma.begin())) return;
        if (gens.size() < 256) gens.push_back(gamma);
    }

    // Orbits of the subgroup generated by automorphisms that fix the current
    // prefix pointwise; skipping same-orbit siblings is sound.
    std::array<int, kMaxVertices> prefix_orbits() const {
        std::array<int, kMaxVertices> parent{};
        std::iota(parent.begin(), parent.begin() + n, 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : gens) {
            bool fixes = true;
            for (int v : chosen)
                if (gamma[v] != v) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(gamma[v]);
                if (a != b) parent[a] = b;
            }
        }
        std::array<int, kMaxVertices> root{};
        for (int v = 0; v < n; ++v) root[v] = find(v);
        return root;
    }

    // exact: the current prefix stream equals best's prefix. Returns whether
    // best was replaced somewhere in this subtree.
    bool dfs(bool exact) {
        int k = static_cast<int>(chosen.size());
        if (k == n) {
            if (!have_best) {
                best = current;
                best_labeling = chosen;
                have_best = true;
                return true;
            }
            if (exact) {
                record_automorphism();
                return false;
            }
            best = current;
            best_labeling = chosen;
            return true;
        }

        struct Cand {
            int v;
            std::array<std::uint64_t, 8> blk;
        };
        std::vector<Cand> cands;
        cands.reserve(n - k);
        for (int v = 0; v < n; ++v)
            if (!(used & (1u << v))) cands.push_back({v, block_of(v)});
        int blk_bits = static_cast<int>(binom(k, 2));
        std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
            int c = cmp_streams(a.blk.data(), b.blk.data(), blk_bits);
            if (c != 0) return c > 0;
            return a.v < b.v;
        });

        bool updated = false;
        std::vector<int> tried;
        for (const Cand& cand : cands) {
            auto orbit = prefix_orbits();
            bool dup = false;
            for (int t : tried)
                if (orbit[t] == orbit[cand.v]) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried.push_back(cand.v);

            bool child_exact = exact;
            if (have_best && exact) {
                int c = cmp_streams(cand.blk.data(), best_block().data(), blk_bits);
                if (c < 0) break; // sorted descending: the rest are no better
                child_exact = (c == 0);
            }
            chosen.push_back(cand.v);
            used |= 1u << cand.v;
            apply_block(cand.blk, true);
            bool upd = dfs(child_exact);
            apply_block(cand.blk, false);
            used &= ~(1u << cand.v);
            chosen.pop_back();
            if (upd) {
                updated = true;
                exact = true; // best now shares this node's prefix
            }
        }
        return updated;
    }
};

std::vector<std::vector<int>> edge_components(const Hypergraph3& h) {
    std::array<int, kMaxVertices> parent{};
    std::iota(parent.begin(), parent.begin() + h.n(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    h.for_each_edge([&](TripleId id) {
        Triple t = unrank_triple(id, h.n());
        parent[find(t.b)] = find(t.a);
        parent[find(t.c)] = find(t.a);
    });
    std::array<bool, kMaxVertices> in_edge{};
    h.for_each_edge([&](TripleId id) {
        Triple t = unrank_triple(id, h.n());
        in_edge[t.a] = in_edge[t.b] = in_edge[t.c] = true;
    });
    std::map<int, std::vector<int>> by_root;
    for (int v = 0; v < h.n(); ++v)
        if (in_edge[v]) by_root[find(v)].push_back(v);
    std::vector<std::vector<int>> comps;
    for (auto& [root, vs] : by_root) comps.push_back(std::move(vs));
    return comps;
}

bool is_full_star(const Hypergraph3& h) {
    auto cv = common_vertex(h);
    return cv.has_value() && h.size() == static_cast<int>(binom(h.n() - 1, 2));
}

// Complete blocks of a clique union (components that carry edges), or nullopt.
std::optional<std::vector<int>> clique_union_blocks(const Hypergraph3& h) {
    std::vector<int> blocks;
    int covered_edges = 0;
    for (const auto& comp : edge_components(h)) {
        int s = static_cast<int>(comp.size());
        VertexSet vs;
        for (int v : comp) vs.set(v);
        int inside = 0;
        h.for_each_edge([&](TripleId id) {
            Triple t = unrank_triple(id, h.n());
            if ((t.mask() & vs.mask) == t.mask()) ++inside;
        });
        if (inside != static_cast<int>(binom(s, 3))) return std::nullopt;
        covered_edges += inside;
        blocks.push_back(s);
    }
    if (covered_edges != h.size()) return std::nullopt;
    std::sort(blocks.rbegin(), blocks.rend());
    return blocks;
}

bool pack_components(std::vector<int>& comps, std::size_t i, std::vector<int>& slack) {
    if (i == comps.size()) return true;
    for (std::size_t b = 0; b < slack.size(); ++b) {
        if (slack[b] < comps[i]) continue;
        if (b > 0 && slack[b] == slack[b - 1]) continue; // identical bins once
        slack[b] -= comps[i];
        if (pack_components(comps, i + 1, slack)) {
            slack[b] += comps[i];
            return true;
        }
        slack[b] += comps[i];
    }
    return false;
}

struct EmbedSearch {
    const Hypergraph3& small;
    const Hypergraph3& big;
    std::vector<int> order;              // support vertices of small
    std::array<int, kMaxVertices> map{}; // small vertex -> big vertex
    std::uint32_t used = 0;
    std::array<int, kMaxVertices> sdeg{}, bdeg{};
    std::vector<Triple> sedges;

    EmbedSearch(const Hypergraph3& s, const Hypergraph3& b) : small(s), big(b) {
        map.fill(-1);
        sedges = s.edges();
        for (const Triple& t : sedges) {
            ++sdeg[t.a];
            ++sdeg[t.b];
            ++sdeg[t.c];
        }
        for (const Triple& t : big.edges()) {
            ++bdeg[t.a];
            ++bdeg[t.b];
            ++bdeg[t.c];
        }
        for (const auto& comp : edge_components(s))
            for (int v : comp) order.push_back(v);
    }

    bool edges_ok(int v) const {
        for (const Triple& t : sedges) {
            if (!(t.mask() & (1u << v))) continue;
            int x = map[t.a], y = map[t.b], z = map[t.c];
            if (x == -1 || y == -1 || z == -1) continue;
            int a = std::min({x, y, z});
            int c = std::max({x, y, z});
            int b = x + y + z - a - c;
            if (!big.has(a, b, c)) return false;
        }
        return true;
    }

    bool run(std::size_t i) {
        if (i == order.size()) return true;
        int v = order[i];
        for (int w = 0; w < big.n(); ++w) {
            if (used & (1u << w)) continue;
            if (bdeg[w] < sdeg[v]) continue;
            map[v] = w;
            used |= 1u << w;
            if (edges_ok(v) && run(i + 1)) return true;
            used &= ~(1u << w);
            map[v] = -1;
        }
        return false;
    }
};

} // namespace

CanonicalForm canonical_form(const Hypergraph3& h) {
    CanonicalForm cf;
    cf.n = h.n();
    if (h.size() == 0) return cf;
    if (h.size() == triple_count(h.n())) {
        cf.edges = h.edges();
        return cf;
    }
    Canonizer cz(h);
    cz.dfs(true);
    std::vector<Triple> out;
    for (int r = 0; r < triple_count(h.n()); ++r)
        if (get_bit(cz.best, r)) out.push_back(unrank_triple(r, h.n()));
    cf.edges = std::move(out);
    return cf;
}

Hypergraph3 canonical_graph(const Hypergraph3& h) {
    CanonicalForm cf = canonical_form(h);
    return Hypergraph3(cf.n, cf.edges);
}

bool are_isomorphic(const Hypergraph3& a, const Hypergraph3& b) {
    if (a.n() != b.n() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

bool embeds_into_generic(const Hypergraph3& h, const Hypergraph3& hbig) {
    if (h.size() > hbig.size()) return false;
    if (h.size() == 0) return true;
    EmbedSearch es(h, hbig);
    if (static_cast<int>(es.order.size()) > hbig.n()) return false;
    return es.run(0);
}

bool embeds_into(const Hypergraph3& h, const Hypergraph3& hbig) {
    if (h.size() > hbig.size()) return false;
    if (h.size() == 0) return true;

    int support = 0;
    {
        std::uint32_t sup = 0;
        h.for_each_edge([&](TripleId id) { sup |= unrank_triple(id, h.n()).mask(); });
        support = __builtin_popcount(sup);
    }
    if (support > hbig.n()) return false;

    if (is_full_star(hbig)) return common_vertex(h).has_value();

    if (auto blocks = clique_union_blocks(hbig)) {
        std::vector<int> comps;
        for (const auto& comp : edge_components(h)) comps.push_back(static_cast<int>(comp.size()));
        std::sort(comps.rbegin(), comps.rend());
        return pack_components(comps, 0, *blocks);
    }

    return embeds_into_generic(h, hbig);
}

std::vector<Hypergraph3> dedupe(std::span<const Hypergraph3> family) {
    std::vector<CanonicalForm> forms;
    for (const Hypergraph3& h : family) {
        CanonicalForm cf = canonical_form(h);
        if (std::find(forms.begin(), forms.end(), cf) == forms.end())
            forms.push_back(std::move(cf));
    }
    std::sort(forms.begin(), forms.end());
    std::vector<Hypergraph3> out;
    out.reserve(forms.size());
    for (const CanonicalForm& cf : forms) out.emplace_back(cf.n, cf.edges);
    return out;
}

} // namespace turan3
