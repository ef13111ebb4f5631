#include "turan3/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "turan3/iso.hpp"

namespace turan3 {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxSearchVertices = 16;
constexpr int kWords = (triple_count(kMaxSearchVertices) + 63) / 64;

struct Bits {
    std::array<std::uint64_t, kWords> w{};

    bool test(int i) const { return (w[i / 64] >> (i % 64)) & 1ull; }
    void set(int i) { w[i / 64] |= 1ull << (i % 64); }
    void reset(int i) { w[i / 64] &= ~(1ull << (i % 64)); }
    int count() const {
        int c = 0;
        for (std::uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool empty() const {
        for (std::uint64_t x : w)
            if (x) return false;
        return true;
    }
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w[i]) return i * 64 + __builtin_ctzll(w[i]);
        return -1;
    }
    bool intersects(const Bits& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    Bits operator|(const Bits& o) const {
        Bits r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    void operator&=(const Bits& o) {
        for (int i = 0; i < kWords; ++i) w[i] &= o.w[i];
    }
    void and_not(const Bits& o) {
        for (int i = 0; i < kWords; ++i) w[i] &= ~o.w[i];
    }
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                int b = __builtin_ctzll(x);
                x &= x - 1;
                fn(i * 64 + b);
            }
        }
    }
};

enum class Mode { Optimize, Enumerate, Decide };

struct Shared {
    std::atomic<int> best{-1};
    std::atomic<bool> stop{false};     // decide-mode success or hard stop
    std::atomic<bool> limited{false};  // some worker hit a limit
};

struct TaskState {
    std::vector<int> included;
    Bits avail;
};

struct EngineResult {
    int best = -1;
    std::vector<Hypergraph3> witnesses; // labeled
    bool truncated = false;
    long long nodes = 0;
    bool limited = false;
    bool found_target = false; // decide mode
};

// Normalized constraints shared by all workers of one query.
struct Prepared {
    int n = 0;
    int T = 0;
    std::vector<const Pattern*> forbidden;      // vacuous ones dropped
    std::optional<Hypergraph3> required;        // as an explicit graph
    const Pattern* required_pattern = nullptr;  // set when required is catalog
    bool required_is_m = false;
    bool required_possible = true;
    std::vector<Hypergraph3> excluded;
    bool flag_connected = false;
    bool flag_ncv = false;
    bool forbid_zero_edge = false; // a forbidden pattern with no edges fits in n
};

Prepared prepare(int n, const ConstraintSet& cs) {
    if (n < 1 || n > kMaxSearchVertices)
        throw std::invalid_argument("max_edges: vertex count must be in 1..16");
    Prepared p;
    p.n = n;
    p.T = triple_count(n);
    std::vector<PatternId> forb = cs.forbidden;
    if (cs.flags & ConstraintSet::kIntersecting) forb.push_back(PatternId::M);
    std::sort(forb.begin(), forb.end());
    forb.erase(std::unique(forb.begin(), forb.end()), forb.end());
    for (PatternId id : forb) {
        const Pattern& pat = pattern(id);
        if (pat.vertex_count > n) continue; // vacuous at this n
        if (pat.edges.empty()) {
            p.forbid_zero_edge = true;
            continue;
        }
        p.forbidden.push_back(&pat);
    }
    if (cs.required) {
        if (std::holds_alternative<PatternId>(*cs.required)) {
            const Pattern& pat = pattern(std::get<PatternId>(*cs.required));
            p.required_pattern = &pat;
            p.required_is_m = pat.id == PatternId::M;
            if (pat.vertex_count > n)
                p.required_possible = false;
            else
                p.required = Hypergraph3(pat.vertex_count, pat.edges);
        } else {
            const Hypergraph3& g = std::get<Hypergraph3>(*cs.required);
            if (g.n() > n && [&] {
                    // only the edge span matters
                    std::uint32_t sup = 0;
                    g.for_each_edge([&](TripleId id) { sup |= unrank_triple(id, g.n()).mask(); });
                    return __builtin_popcount(sup) > n;
                }())
                p.required_possible = false;
            p.required = g;
            if (g.n() >= 6) p.required_is_m = are_isomorphic(g, Hypergraph3(6, pattern(PatternId::M).edges));
        }
    }
    for (const Hypergraph3& x : cs.excluded_supergraphs) p.excluded.push_back(x);
    p.flag_connected = cs.flags & ConstraintSet::kConnected;
    p.flag_ncv = cs.flags & ConstraintSet::kNoCommonVertex;
    return p;
}

class Engine {
public:
    Engine(const Prepared& prep, const SearchConfig& cfg, Mode mode, int decide_target,
           Shared& shared, Clock::time_point deadline)
        : p_(prep),
          cfg_(cfg),
          mode_(mode),
          target_(decide_target),
          shared_(shared),
          deadline_(deadline),
          has_deadline_(cfg.time_limit > 0) {
        T_ = p_.T;
        tri_.resize(T_);
        mask_.resize(T_);
        for (int r = 0; r < T_; ++r) {
            tri_[r] = unrank_triple(r, p_.n);
            mask_[r] = tri_[r].mask();
        }
        for (int v = 0; v < p_.n; ++v)
            for (int r = 0; r < T_; ++r)
                if (mask_[r] & (1u << v)) through_[v].push_back(r);
        disjoint_.resize(T_);
        for (int r = 0; r < T_; ++r)
            for (int s = 0; s < T_; ++s)
                if ((mask_[r] & mask_[s]) == 0) disjoint_[r].set(s);
        // per (pattern, anchor edge) matching orders: anchor first, then
        // connected expansion
        for (const Pattern* f : p_.forbidden) {
            auto& orders = orders_[f];
            orders.resize(f->edges.size());
            for (std::size_t a = 0; a < f->edges.size(); ++a) {
                std::vector<int> order{static_cast<int>(a)};
                std::uint32_t seen = f->edges[a].mask();
                std::vector<bool> used(f->edges.size(), false);
                used[a] = true;
                for (std::size_t step = 1; step < f->edges.size(); ++step) {
                    int best = -1;
                    for (std::size_t i = 0; i < f->edges.size(); ++i) {
                        if (used[i]) continue;
                        bool touches = (f->edges[i].mask() & seen) != 0;
                        if (best == -1 || (touches && !((f->edges[best].mask() & seen) != 0)))
                            best = static_cast<int>(i);
                    }
                    used[best] = true;
                    seen |= f->edges[best].mask();
                    order.push_back(best);
                }
                orders[a] = std::move(order);
            }
        }
        excluded_cleared_.assign(p_.excluded.size(), 0);
    }

    // Root avail: triples individually addable to the empty graph.
    Bits root_avail() const {
        Bits avail;
        for (int r = 0; r < T_; ++r) {
            Hypergraph3 single(p_.n, std::span<const Triple>(&tri_[r], 1));
            bool ok = true;
            for (const Pattern* f : p_.forbidden)
                if (contains(single, *f)) {
                    ok = false;
                    break;
                }
            if (ok) avail.set(r);
        }
        return avail;
    }

    void seed_incumbent(int value) { local_best_ = std::max(local_best_, value); }

    void restore(const TaskState& task) {
        for (int r : task.included) push_edge(r);
        for (std::size_t k = 0; k < p_.excluded.size(); ++k)
            if (!embeds_into(current_graph(), p_.excluded[k])) excluded_cleared_[k] = 1;
    }

    // Forced include at the root (symmetry breaking); returns the pruned
    // availability for the subtree.
    Bits force_include(int r, Bits avail) {
        Bits out = propagate(r, avail);
        push_edge(r);
        return out;
    }

    void run(Bits avail, int capture_depth, std::vector<TaskState>* capture) {
        dfs(avail, 0, capture_depth, capture);
    }

    EngineResult take_result() {
        EngineResult r;
        r.best = local_best_;
        r.witnesses = std::move(witnesses_);
        r.truncated = truncated_;
        r.nodes = nodes_;
        r.limited = limited_;
        r.found_target = found_target_;
        return r;
    }

    Hypergraph3 current_graph() const {
        std::vector<Triple> es;
        es.reserve(included_.size());
        for (int r : included_) es.push_back(tri_[r]);
        return Hypergraph3(p_.n, es);
    }

    void process_leaf_graph() { leaf(); } // empty-graph candidate at the root

private:
    bool out_of_budget() {
        if (shared_.stop.load(std::memory_order_relaxed)) return true;
        if (cfg_.node_limit > 0 && nodes_ > cfg_.node_limit) {
            limited_ = true;
            return true;
        }
        if (has_deadline_ && (nodes_ & 255) == 0 && Clock::now() > deadline_) {
            limited_ = true;
            return true;
        }
        return false;
    }

    void push_edge(int r) {
        int idx = static_cast<int>(included_.size());
        included_.push_back(r);
        m_sat_stack_.push_back(m_satisfied_);
        if (!m_satisfied_)
            for (int other : included_)
                if (other != r && (mask_[other] & mask_[r]) == 0) {
                    m_satisfied_ = true;
                    break;
                }
        for (int v : {int(tri_[r].a), int(tri_[r].b), int(tri_[r].c)}) vinc_[v].push_back(idx);
        included_bits_.set(r);
    }

    void pop_edge() {
        int r = included_.back();
        included_bits_.reset(r);
        for (int v : {int(tri_[r].a), int(tri_[r].b), int(tri_[r].c)}) vinc_[v].pop_back();
        m_satisfied_ = m_sat_stack_.back();
        m_sat_stack_.pop_back();
        included_.pop_back();
    }

    // ---- incremental forbidden-pattern propagation ----------------------

    // Enumerate embeddings of f that use the just-included edge (anchor) and
    // at most one available triple; each such available triple can no longer
    // be added individually in this subtree.
    void collect_kills(const Pattern& f, int anchor_rank, const Bits& avail,
                       std::vector<int>& kills) {
        const auto& orders = orders_.at(&f);
        for (std::size_t ae = 0; ae < f.edges.size(); ++ae) {
            const Triple& pe = f.edges[ae];
            std::array<int, 3> pvs = {pe.a, pe.b, pe.c};
            std::array<int, 3> hvs = {int(tri_[anchor_rank].a), int(tri_[anchor_rank].b),
                                      int(tri_[anchor_rank].c)};
            std::sort(pvs.begin(), pvs.end());
            do {
                pmap_.fill(-1);
                used_hosts_ = 0;
                for (int i = 0; i < 3; ++i) {
                    pmap_[pvs[i]] = hvs[i];
                    used_hosts_ |= 1u << hvs[i];
                }
                extend(f, orders[ae], 1, avail, -1, kills);
            } while (std::next_permutation(pvs.begin(), pvs.end()));
        }
    }

    void extend(const Pattern& f, const std::vector<int>& order, std::size_t oi,
                const Bits& avail, int avail_used, std::vector<int>& kills) {
        if (oi == order.size()) {
            if (avail_used >= 0) kills.push_back(avail_used);
            return;
        }
        const Triple& pe = f.edges[order[oi]];
        std::array<int, 3> pvs = {pe.a, pe.b, pe.c};
        int anchor_v = -1;
        for (int pv : pvs)
            if (pmap_[pv] != -1) {
                anchor_v = pmap_[pv];
                break;
            }
        auto try_host = [&](int rt, bool is_avail) {
            std::uint32_t hm = mask_[rt];
            std::uint32_t taken = 0;
            for (int pv : pvs) {
                if (pmap_[pv] == -1) continue;
                std::uint32_t b = 1u << pmap_[pv];
                if (!(hm & b)) return;
                taken |= b;
            }
            std::array<int, 3> freepv{};
            int nfree = 0;
            for (int pv : pvs)
                if (pmap_[pv] == -1) freepv[nfree++] = pv;
            std::array<int, 3> freehv{};
            int nh = 0;
            for (int hv : {int(tri_[rt].a), int(tri_[rt].b), int(tri_[rt].c)})
                if (!(taken & (1u << hv))) freehv[nh++] = hv;
            if (nh != nfree) return;
            std::sort(freehv.begin(), freehv.begin() + nh);
            do {
                bool good = true;
                int done = 0;
                for (int i = 0; i < nfree; ++i) {
                    int hv = freehv[i];
                    if (used_hosts_ & (1u << hv)) {
                        good = false;
                        break;
                    }
                    pmap_[freepv[i]] = hv;
                    used_hosts_ |= 1u << hv;
                    ++done;
                }
                if (good) extend(f, order, oi + 1, avail, is_avail ? rt : avail_used, kills);
                for (int i = done - 1; i >= 0; --i) {
                    used_hosts_ &= ~(1u << pmap_[freepv[i]]);
                    pmap_[freepv[i]] = -1;
                }
            } while (std::next_permutation(freehv.begin(), freehv.begin() + nh));
        };
        if (anchor_v != -1) {
            for (int rt : through_[anchor_v]) {
                if (included_bits_.test(rt))
                    try_host(rt, false);
                else if (avail_used < 0 && avail.test(rt))
                    try_host(rt, true);
            }
        } else {
            for (int rt : included_) try_host(rt, false);
            if (avail_used < 0)
                avail.for_each([&](int rt) { try_host(rt, true); });
        }
    }

    Bits propagate(int r, Bits avail) {
        avail.reset(r);
        for (const Pattern* f : p_.forbidden) {
            if (f->id == PatternId::M) {
                avail.and_not(disjoint_[r]);
                continue;
            }
            kills_.clear();
            collect_kills(*f, r, avail, kills_);
            for (int k : kills_) avail.reset(k);
        }
        return avail;
    }

    // ---- reachability pruning -------------------------------------------

    bool union_can_satisfy(const Bits& avail) {
        // prune when no completion inside included|avail can meet the
        // monotone-increasing constraints
        if (p_.required && !m_satisfied_) {
            if (p_.required_is_m) {
                bool reachable = false;
                avail.for_each([&](int t) {
                    if (reachable) return;
                    if (disjoint_[t].intersects(included_bits_) || disjoint_[t].intersects(avail))
                        reachable = true;
                });
                if (!reachable && !m_satisfied_) return false;
            } else {
                Hypergraph3 u = union_graph(avail);
                if (p_.required_pattern) {
                    if (!contains(u, *p_.required_pattern)) return false;
                } else if (!embeds_into(*p_.required, u)) {
                    return false;
                }
            }
        }
        if (p_.flag_ncv) {
            std::uint32_t common = VertexSet::all(p_.n).mask;
            for (int rt : included_) common &= mask_[rt];
            if (common) {
                avail.for_each([&](int t) { common &= mask_[t]; });
                if (common) return false; // everything below is a sub-star
            }
        }
        if (p_.flag_connected) {
            std::array<int, kMaxVertices> parent{};
            std::iota(parent.begin(), parent.begin() + p_.n, 0);
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            auto join = [&](int r) {
                parent[find(tri_[r].b)] = find(tri_[r].a);
                parent[find(tri_[r].c)] = find(tri_[r].a);
            };
            for (int rt : included_) join(rt);
            avail.for_each(join);
            int root = find(0);
            for (int v = 1; v < p_.n; ++v)
                if (find(v) != root) return false;
        }
        return true;
    }

    Hypergraph3 union_graph(const Bits& avail) const {
        std::vector<Triple> es;
        es.reserve(included_.size() + avail.count());
        Bits u = avail;
        for (int r : included_) u.set(r);
        u.for_each([&](int r) { es.push_back(tri_[r]); });
        return Hypergraph3(p_.n, es);
    }

    // Excluded-supergraph handling. Returns false when the whole subtree is
    // dead because even included|avail embeds into an excluded graph.
    bool excluded_viable(const Bits& avail, std::vector<int>& newly_cleared) {
        for (std::size_t k = 0; k < p_.excluded.size(); ++k) {
            if (excluded_cleared_[k]) continue;
            const Hypergraph3& x = p_.excluded[k];
            if (!embeds_into(current_graph(), x)) {
                excluded_cleared_[k] = 1;
                newly_cleared.push_back(static_cast<int>(k));
                continue;
            }
            // still embedded; if the whole union embeds, no completion escapes
            if (embeds_into(union_graph(avail), x)) return false;
        }
        return true;
    }

    // ---- leaves -----------------------------------------------------------

    bool leaf_feasible() {
        if (p_.forbid_zero_edge) return false;
        if (p_.required) {
            if (!p_.required_possible) return false;
            if (p_.required_is_m) {
                if (!m_satisfied_) return false;
            } else {
                Hypergraph3 g = current_graph();
                if (p_.required_pattern) {
                    if (!contains(g, *p_.required_pattern)) return false;
                } else if (!embeds_into(*p_.required, g)) {
                    return false;
                }
            }
        }
        if (p_.flag_ncv) {
            std::uint32_t common = VertexSet::all(p_.n).mask;
            for (int rt : included_) common &= mask_[rt];
            if (common) return false;
        }
        if (p_.flag_connected) {
            if (!current_graph().connected()) return false;
        }
        for (std::size_t k = 0; k < p_.excluded.size(); ++k) {
            if (excluded_cleared_[k]) continue;
            if (embeds_into(current_graph(), p_.excluded[k])) return false;
        }
        return true;
    }

    void leaf() {
        if (!leaf_feasible()) return;
        int value = static_cast<int>(included_.size());
        if (mode_ == Mode::Decide) {
            if (value >= target_) {
                found_target_ = true;
                witnesses_.clear();
                witnesses_.push_back(current_graph());
                local_best_ = std::max(local_best_, value);
                shared_.stop.store(true, std::memory_order_relaxed);
            }
            return;
        }
        if (value > local_best_) {
            local_best_ = value;
            witnesses_.clear();
            truncated_ = false;
            witnesses_.push_back(current_graph());
            int prev = shared_.best.load(std::memory_order_relaxed);
            while (prev < value &&
                   !shared_.best.compare_exchange_weak(prev, value, std::memory_order_relaxed)) {
            }
        } else if (mode_ == Mode::Enumerate && value == local_best_) {
            if (static_cast<int>(witnesses_.size()) < cfg_.witness_limit)
                witnesses_.push_back(current_graph());
            else
                truncated_ = true;
        }
    }

    // ---- main recursion ---------------------------------------------------

    bool prune_on_bound(int bound) const {
        int global = shared_.best.load(std::memory_order_relaxed);
        switch (mode_) {
            case Mode::Enumerate: return bound < std::max(global, local_best_);
            case Mode::Optimize: return bound < global || bound <= local_best_;
            case Mode::Decide: return bound < target_;
        }
        return false;
    }

    int pick_branch(const Bits& avail) const {
        if (!cfg_.branch_most_constrained) return avail.first();
        int best = -1, best_score = -1;
        avail.for_each([&](int t) {
            int score = 0;
            for (int v : {int(tri_[t].a), int(tri_[t].b), int(tri_[t].c)})
                score += static_cast<int>(vinc_[v].size());
            if (score > best_score) {
                best_score = score;
                best = t;
            }
        });
        return best;
    }

    void dfs(Bits avail, int depth, int capture_depth, std::vector<TaskState>* capture) {
        ++nodes_;
        if (out_of_budget()) return;
        int bound = static_cast<int>(included_.size()) + avail.count();
        if (prune_on_bound(bound)) return;
        if (!union_can_satisfy(avail)) return;
        std::vector<int> cleared;
        if (!p_.excluded.empty()) {
            if (!excluded_viable(avail, cleared)) {
                for (int k : cleared) excluded_cleared_[k] = 0;
                return;
            }
        }
        if (avail.empty()) {
            leaf();
            for (int k : cleared) excluded_cleared_[k] = 0;
            return;
        }
        if (capture && depth == capture_depth) {
            capture->push_back(TaskState{included_, avail});
            for (int k : cleared) excluded_cleared_[k] = 0;
            return;
        }
        int t = pick_branch(avail);
        // include first: dives toward dense graphs and good incumbents
        Bits inc_avail = propagate(t, avail);
        push_edge(t);
        dfs(inc_avail, depth + 1, capture_depth, capture);
        pop_edge();
        avail.reset(t);
        dfs(avail, depth + 1, capture_depth, capture);
        for (int k : cleared) excluded_cleared_[k] = 0;
    }

    const Prepared& p_;
    const SearchConfig& cfg_;
    Mode mode_;
    int target_;
    Shared& shared_;
    Clock::time_point deadline_;
    bool has_deadline_;

    int T_ = 0;
    std::vector<Triple> tri_;
    std::vector<std::uint32_t> mask_;
    std::array<std::vector<int>, kMaxSearchVertices> through_;
    std::vector<Bits> disjoint_;
    std::map<const Pattern*, std::vector<std::vector<int>>> orders_;

    std::vector<int> included_;
    Bits included_bits_;
    std::array<std::vector<int>, kMaxSearchVertices> vinc_;
    std::vector<char> m_sat_stack_;
    bool m_satisfied_ = false;
    std::vector<char> excluded_cleared_;

    std::array<int, 8> pmap_{};
    std::uint32_t used_hosts_ = 0;
    std::vector<int> kills_;

    int local_best_ = -1;
    std::vector<Hypergraph3> witnesses_;
    bool truncated_ = false;
    long long nodes_ = 0;
    bool limited_ = false;
    bool found_target_ = false;
};

struct RunResult {
    int best = -1;
    std::vector<Hypergraph3> labeled;
    bool truncated = false;
    long long nodes = 0;
    bool limited = false;
    bool found_target = false;
    std::optional<Hypergraph3> decide_witness;
};

RunResult run_search(const Prepared& prep, const SearchConfig& cfg, Mode mode, int target) {
    Shared shared;
    Clock::time_point deadline = Clock::now();
    if (cfg.time_limit > 0)
        deadline += std::chrono::duration_cast<Clock::duration>(
            std::chrono::duration<double>(cfg.time_limit));

    RunResult out;

    // seed: certified external lower bound (already re-verified by the caller)
    int seed_value = -1;
    std::optional<Hypergraph3> seed_graph;
    if (cfg.seed && cfg.seed->n() == prep.n) {
        seed_graph = cfg.seed;
        seed_value = cfg.seed->size();
    }

    Engine root(prep, cfg, mode, target, shared, deadline);

    // the empty graph is the one candidate not reached by the forced first edge
    root.process_leaf_graph();

    if (seed_value >= 0) {
        root.seed_incumbent(seed_value);
        int prev = shared.best.load();
        while (prev < seed_value && !shared.best.compare_exchange_weak(prev, seed_value)) {
        }
        if (mode == Mode::Decide && seed_value >= target) {
            EngineResult er = root.take_result();
            out.best = seed_value;
            out.found_target = true;
            out.decide_witness = seed_graph;
            out.nodes = er.nodes;
            return out;
        }
    }

    std::vector<TaskState> tasks;
    EngineResult root_res;
    int workers = std::max(1, cfg.workers);
    bool viable = !prep.forbid_zero_edge && prep.required_possible;
    if (viable && prep.T > 0) {
        Bits avail0 = root.root_avail();
        // Symmetry break: every nonempty isomorphism class has a
        // representative whose first colex edge is {0,1,2}, so the first
        // included edge can be forced there; the empty graph was handled
        // above.
        if (avail0.test(0)) {
            Bits inc_avail = root.force_include(0, avail0);
            int capture_depth = workers > 1 ? 10 : -1;
            root.run(inc_avail, capture_depth, workers > 1 ? &tasks : nullptr);
        }
    }
    root_res = root.take_result();

    out.best = std::max(out.best, root_res.best);
    out.nodes += root_res.nodes;
    out.limited |= root_res.limited;
    out.truncated |= root_res.truncated;
    out.found_target |= root_res.found_target;
    std::vector<EngineResult> task_results;

    if (!tasks.empty()) {
        std::atomic<std::size_t> next{0};
        std::vector<EngineResult> results(tasks.size());
        auto worker_fn = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                if (shared.stop.load(std::memory_order_relaxed) && mode == Mode::Decide) return;
                Engine e(prep, cfg, mode, target, shared, deadline);
                e.seed_incumbent(root_res.best >= 0 ? root_res.best : seed_value);
                e.restore(tasks[i]);
                e.run(tasks[i].avail, -1, nullptr);
                results[i] = e.take_result();
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker_fn);
        for (auto& th : pool) th.join();
        task_results = std::move(results);
    }

    // deterministic merge in task order
    std::vector<std::pair<int, const EngineResult*>> ordered;
    ordered.emplace_back(-1, &root_res);
    for (std::size_t i = 0; i < task_results.size(); ++i)
        ordered.emplace_back(static_cast<int>(i), &task_results[i]);
    for (auto& [idx, res] : ordered) {
        out.best = std::max(out.best, res->best);
        if (idx >= 0) out.nodes += res->nodes;
        out.limited |= res->limited;
        out.found_target |= res->found_target;
    }
    std::vector<Hypergraph3> labeled;
    for (auto& [idx, res] : ordered) {
        if (res->best != out.best) continue;
        for (const Hypergraph3& w : res->witnesses) {
            if (w.size() != out.best) continue;
            if (static_cast<int>(labeled.size()) < cfg.witness_limit)
                labeled.push_back(w);
            else
                out.truncated = true;
        }
        out.truncated |= res->truncated;
    }
    if (mode == Mode::Decide) {
        for (auto& [idx, res] : ordered)
            if (res->found_target && !res->witnesses.empty()) {
                out.decide_witness = res->witnesses.front();
                break;
            }
        if (!out.decide_witness && seed_graph && seed_value >= target)
            out.decide_witness = seed_graph;
    }
    if (labeled.empty() && seed_graph && seed_value == out.best) labeled.push_back(*seed_graph);
    out.labeled = std::move(labeled);
    return out;
}

} // namespace

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Exact: return "exact";
        case SearchStatus::LowerBoundOnly: return "lower_bound_only";
        case SearchStatus::Infeasible: return "infeasible";
        case SearchStatus::NotDefined: return "not_defined";
    }
    return "?";
}

bool satisfies(const Hypergraph3& h, const ConstraintSet& cs) {
    for (PatternId id : cs.forbidden)
        if (contains(h, id)) return false;
    if (cs.flags & ConstraintSet::kIntersecting)
        if (!is_intersecting(h)) return false;
    if (cs.flags & ConstraintSet::kNoCommonVertex)
        if (common_vertex(h)) return false;
    if (cs.flags & ConstraintSet::kConnected)
        if (!h.connected()) return false;
    if (cs.required) {
        if (std::holds_alternative<PatternId>(*cs.required)) {
            if (!contains(h, std::get<PatternId>(*cs.required))) return false;
        } else {
            if (!embeds_into(std::get<Hypergraph3>(*cs.required), h)) return false;
        }
    }
    for (const Hypergraph3& x : cs.excluded_supergraphs)
        if (embeds_into(h, x)) return false;
    return true;
}

SearchOutcome max_edges(int n, const ConstraintSet& constraints, const SearchConfig& config) {
    auto start = Clock::now();
    Prepared prep = prepare(n, constraints);
    SearchConfig cfg = config;
    if (cfg.witness_limit <= 0) cfg.witness_limit = 256;
    if (cfg.seed && (cfg.seed->n() != n || !satisfies(*cfg.seed, constraints))) cfg.seed.reset();

    RunResult rr = run_search(prep, cfg, cfg.enumerate_all ? Mode::Enumerate : Mode::Optimize, 0);

    SearchOutcome out;
    out.nodes = rr.nodes;
    out.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
    out.witnesses_truncated = rr.truncated;
    if (rr.best < 0) {
        out.status = rr.limited ? SearchStatus::LowerBoundOnly : SearchStatus::Infeasible;
        out.value = -1;
        return out;
    }
    out.value = rr.best;
    out.status = rr.limited ? SearchStatus::LowerBoundOnly : SearchStatus::Exact;
    out.witnesses = dedupe(rr.labeled);
    for (const Hypergraph3& w : out.witnesses) {
        if (w.size() != out.value || !satisfies(w, constraints))
            throw std::logic_error("max_edges: witness failed independent re-verification");
    }
    return out;
}

ExistsOutcome decide_exists(int n, const ConstraintSet& constraints, int target_m,
                            const SearchConfig& config) {
    auto start = Clock::now();
    if (target_m > triple_count(n)) {
        ExistsOutcome out;
        out.verdict = ExistsOutcome::Verdict::No;
        return out;
    }
    Prepared prep = prepare(n, constraints);
    SearchConfig cfg = config;
    if (cfg.seed && (cfg.seed->n() != n || !satisfies(*cfg.seed, constraints))) cfg.seed.reset();
    if (target_m <= 0) {
        // any feasible graph will do; fall back to a plain search
        SearchOutcome so = max_edges(n, constraints, cfg);
        ExistsOutcome out;
        out.nodes = so.nodes;
        out.elapsed_s = so.elapsed_s;
        if (so.status == SearchStatus::Infeasible)
            out.verdict = ExistsOutcome::Verdict::No;
        else if (so.status == SearchStatus::Exact) {
            out.verdict = ExistsOutcome::Verdict::Yes;
            if (!so.witnesses.empty()) out.witness = so.witnesses.front();
        }
        return out;
    }

    RunResult rr = run_search(prep, cfg, Mode::Decide, target_m);
    ExistsOutcome out;
    out.nodes = rr.nodes;
    out.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
    if (rr.found_target) {
        out.verdict = ExistsOutcome::Verdict::Yes;
        out.witness = rr.decide_witness;
        if (out.witness && !satisfies(*out.witness, constraints))
            throw std::logic_error("decide_exists: witness failed re-verification");
    } else if (rr.limited) {
        out.verdict = ExistsOutcome::Verdict::Unknown;
    } else {
        out.verdict = ExistsOutcome::Verdict::No;
    }
    return out;
}

} // namespace turan3
