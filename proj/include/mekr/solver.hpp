#ifndef MEKR_SOLVER_HPP
#define MEKR_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mekr/bitset.hpp"
#include "mekr/combinatorics.hpp"
#include "mekr/families.hpp"
#include "mekr/graph.hpp"
#include "mekr/multiset.hpp"

namespace mekr {

inline constexpr std::size_t default_solve_limit = 5'000;
inline constexpr std::size_t default_census_cap = 10'000;

struct SolveOptions {
    std::size_t vertex_limit = default_solve_limit;
    std::uint64_t node_limit = 0;   // 0: unlimited
    double time_limit_seconds = 0;  // 0: unlimited
    /// Known independent set (vertex indices) used as the starting incumbent.
    std::vector<std::size_t> seed;
    /// Replace the first optimum found by the lexicographically smallest one.
    bool canonical_witness = true;
};

/// Graph-level maximum independent set result. Vertex indices are sorted.
struct IndependentSetResult {
    std::vector<std::size_t> best;
    bool proven_optimal = false;
    std::size_t upper_bound = 0;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

namespace detail {

/**
 * Maximum clique search on the complement of the input graph (compatible =
 * distinct and non-adjacent), using greedy colouring bounds over bitsets.
 * Vertices are renumbered by non-increasing compatible degree (ties by
 * index) so colour classes come out small.
 */
class CliqueEngine {
public:
    CliqueEngine(const AdjacencyGraph& g, const SolveOptions& opts)
        : n_(g.vertex_count()), opts_(opts), start_(std::chrono::steady_clock::now()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<std::size_t> deg(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            deg[v] = n_ - 1 - g.degree(v);
        }
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
        position_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            position_[order_[i]] = i;
        }
        compat_.assign(n_, Bitset(n_));
        for (std::size_t i = 0; i < n_; ++i) {
            const Bitset& nb = g.neighbors(order_[i]);
            for (std::size_t j = 0; j < n_; ++j) {
                if (j != i && !nb.test(order_[j])) {
                    compat_[i].set(j);
                }
            }
        }
    }

    std::size_t size() const { return n_; }
    std::uint64_t nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    Bitset all() const {
        Bitset p(n_);
        p.set_all();
        return p;
    }

    Bitset from_original(const std::vector<std::size_t>& vs) const {
        Bitset p(n_);
        for (auto v : vs) {
            p.set(position_.at(v));
        }
        return p;
    }

    const Bitset& compatible(std::size_t original) const { return compat_[position_[original]]; }
    std::size_t position(std::size_t original) const { return position_[original]; }

    std::vector<std::size_t> to_original(const std::vector<std::size_t>& internal) const {
        std::vector<std::size_t> out;
        out.reserve(internal.size());
        for (auto i : internal) {
            out.push_back(order_[i]);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Number of greedy colour classes of p: an upper bound on any clique in p.
    std::size_t colour_bound(const Bitset& p) const {
        Bitset u = p;
        std::size_t colours = 0;
        while (!u.none()) {
            ++colours;
            Bitset q = u;
            for (auto v = q.first(); v != Bitset::npos; v = q.next(v + 1)) {
                u.reset(v);
                q.subtract(compat_[v]);
            }
        }
        return colours;
    }

    /// Largest clique within p, improving on `incumbent` (internal indices).
    std::vector<std::size_t> maximise(const Bitset& p, std::vector<std::size_t> incumbent) {
        best_ = std::move(incumbent);
        target_ = 0;
        mode_ = Mode::maximise;
        std::vector<std::size_t> c;
        expand(c, p);
        return best_;
    }

    /// All cliques of exactly `target` vertices within p, stopping after cap+1.
    std::vector<std::vector<std::size_t>> enumerate(const Bitset& p, std::size_t target, std::size_t cap) {
        found_.clear();
        target_ = target;
        cap_ = cap;
        mode_ = Mode::enumerate;
        std::vector<std::size_t> c;
        if (target == 0) {
            found_.push_back({});
        } else {
            expand(c, p);
        }
        return std::move(found_);
    }

private:
    enum class Mode { maximise, enumerate };

    bool over_budget() {
        if (opts_.node_limit != 0 && nodes_ > opts_.node_limit) {
            return true;
        }
        if (opts_.time_limit_seconds > 0 && (nodes_ & 0x3ff) == 0 && elapsed() > opts_.time_limit_seconds) {
            return true;
        }
        return false;
    }

    bool done() const { return aborted_ || (mode_ == Mode::enumerate && found_.size() > cap_); }

    void expand(std::vector<std::size_t>& c, Bitset p) {
        ++nodes_;
        if (over_budget()) {
            aborted_ = true;
            return;
        }
        // Colours needed before a vertex can lead anywhere useful.
        const std::size_t goal = mode_ == Mode::maximise ? best_.size() + 1 : target_;
        const std::size_t kmin = goal > c.size() ? goal - c.size() : 0;

        std::vector<std::size_t> verts;
        std::vector<std::size_t> colours;
        {
            Bitset u = p;
            std::size_t colour = 0;
            while (!u.none()) {
                ++colour;
                Bitset q = u;
                for (auto v = q.first(); v != Bitset::npos; v = q.next(v + 1)) {
                    u.reset(v);
                    q.subtract(compat_[v]);
                    if (colour >= kmin) {
                        verts.push_back(v);
                        colours.push_back(colour);
                    }
                }
            }
        }

        for (std::size_t idx = verts.size(); idx-- > 0;) {
            if (c.size() + colours[idx] < goal) {
                return;
            }
            const std::size_t v = verts[idx];
            c.push_back(v);
            Bitset np = p & compat_[v];
            if (mode_ == Mode::enumerate && c.size() == target_) {
                found_.push_back(c);
            } else if (np.none()) {
                if (mode_ == Mode::maximise && c.size() > best_.size()) {
                    best_ = c;
                }
            } else {
                expand(c, std::move(np));
            }
            c.pop_back();
            if (done()) {
                return;
            }
            p.reset(v);
        }
    }

    std::size_t n_;
    SolveOptions opts_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> position_;
    std::vector<Bitset> compat_;

    Mode mode_ = Mode::maximise;
    std::vector<std::size_t> best_;
    std::size_t target_ = 0;
    std::size_t cap_ = 0;
    std::vector<std::vector<std::size_t>> found_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace detail

/**
 * Exact maximum independent set by branch and bound. When the node or time
 * budget runs out the best set found so far is returned with
 * proven_optimal = false and the root colouring bound as upper_bound.
 */
inline IndependentSetResult max_independent_set(const AdjacencyGraph& g, const SolveOptions& opts = {}) {
    if (g.vertex_count() > opts.vertex_limit) {
        throw limit_exceeded("graph has " + std::to_string(g.vertex_count()) +
                             " vertices, above the solver limit of " + std::to_string(opts.vertex_limit) +
                             "; export it and use an external solver");
    }
    if (!g.is_independent(opts.seed)) {
        throw std::invalid_argument("max_independent_set: seed is not an independent set");
    }
    detail::CliqueEngine engine(g, opts);
    IndependentSetResult res;
    const Bitset all = engine.all();
    res.upper_bound = engine.colour_bound(all);

    std::vector<std::size_t> seed;
    for (auto v : opts.seed) {
        seed.push_back(engine.position(v));
    }
    auto best = engine.maximise(all, seed);
    res.proven_optimal = !engine.aborted();
    res.best = engine.to_original(best);

    if (res.proven_optimal && opts.canonical_witness && !res.best.empty()) {
        // Lexicographically smallest optimum: take the lowest vertex that
        // still lies in some optimum, restrict to its later compatible
        // vertices, repeat.
        std::vector<std::size_t> chosen;
        Bitset pool = all;
        std::size_t need = res.best.size();
        for (std::size_t v = 0; v < g.vertex_count() && need > 0; ++v) {
            if (!pool.test(engine.position(v))) {
                continue;
            }
            Bitset rest = pool & engine.compatible(v);
            for (std::size_t u = 0; u <= v; ++u) {
                rest.reset(engine.position(u));
            }
            const bool ok = need == 1 || !engine.enumerate(rest, need - 1, 0).empty();
            if (engine.aborted()) {
                break;
            }
            if (ok) {
                chosen.push_back(v);
                pool = std::move(rest);
                --need;
            }
        }
        // On budget exhaustion here the optimum is still proven; keep the first witness.
        if (!engine.aborted() && need == 0) {
            res.best = chosen;
        }
    }
    if (res.proven_optimal) {
        res.upper_bound = res.best.size();
    }
    res.nodes = engine.nodes();
    res.seconds = engine.elapsed();
    return res;
}

struct IndependentSetCensus {
    std::size_t optimum = 0;
    bool complete = false;
    std::vector<std::vector<std::size_t>> sets;  // sorted vertex lists, sorted lexicographically
    std::uint64_t nodes = 0;
    double seconds = 0;
};

/// Every independent set of size `optimum` (up to cap; complete = false if more exist).
inline IndependentSetCensus enumerate_maximum_independent_sets(const AdjacencyGraph& g, std::size_t optimum,
                                                               std::size_t cap = default_census_cap,
                                                               const SolveOptions& opts = {}) {
    if (g.vertex_count() > opts.vertex_limit) {
        throw limit_exceeded("graph has " + std::to_string(g.vertex_count()) + " vertices, above the solver limit");
    }
    detail::CliqueEngine engine(g, opts);
    auto found = engine.enumerate(engine.all(), optimum, cap);
    if (engine.aborted()) {
        throw limit_exceeded("census search budget exhausted");
    }
    IndependentSetCensus out;
    out.optimum = optimum;
    out.complete = found.size() <= cap;
    if (!out.complete) {
        found.resize(cap);
    }
    for (const auto& s : found) {
        out.sets.push_back(engine.to_original(s));
    }
    std::sort(out.sets.begin(), out.sets.end());
    out.nodes = engine.nodes();
    out.seconds = engine.elapsed();
    return out;
}

// ---------------------------------------------------------------------------
// Spec-level API: families instead of vertex indices.
// ---------------------------------------------------------------------------

inline Family family_from_ranks(const GraphSpec& spec, const std::vector<std::size_t>& ranks) {
    std::vector<Multiset> members;
    members.reserve(ranks.size());
    for (auto r : ranks) {
        members.push_back(vertex(spec, r));
    }
    return Family(spec.universe, spec.k, std::move(members));
}

inline std::vector<std::size_t> ranks_of(const GraphSpec& spec, const Family& f) {
    std::vector<std::size_t> out;
    for (const auto& a : f) {
        out.push_back(static_cast<std::size_t>(rank_of(spec, a)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct SolveResult {
    GraphSpec spec;
    std::size_t optimum = 0;  // size of the best family found
    bool proven_optimal = false;
    std::size_t upper_bound = 0;
    Family witness;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

/// Largest t-intersecting family for the spec's vertex class.
inline SolveResult max_family(const GraphSpec& spec, const SolveOptions& opts = {}) {
    const auto g = build_graph(spec, std::max(opts.vertex_limit, std::size_t{1}));
    auto r = max_independent_set(g, opts);
    return {spec, r.best.size(), r.proven_optimal, r.upper_bound, family_from_ranks(spec, r.best), r.nodes, r.seconds};
}

/// Largest known construction for M(m,k,t), used as a certified lower bound.
inline Family best_known_family(int m, int k, int t) {
    std::vector<int> fixed(static_cast<std::size_t>(m), 0);
    fixed[0] = t;
    Family best = t_star_family(m, k, Multiset(fixed));
    auto consider = [&](Family f) {
        if (f.size() > best.size()) {
            best = std::move(f);
        }
    };
    if (t + 2 <= m && t + 1 <= k) {
        consider(frankl_plus_family(m, k, t));
    }
    if (t == 1 && m <= k) {
        Family f = above_half_family(m, k);
        if (m % 2 == 0) {
            f = f.united_with(half_selection_family(m, k));
        }
        consider(std::move(f));
    }
    return best;
}

/// Structural labels of one maximum family.
struct FamilyClassification {
    /// Pointwise minimum of all members; a star when its cardinality >= t.
    std::vector<int> common;
    bool star = false;
    /// Multiset kind, t = 1: M_(>m/2) plus (m even) half of M_(m/2), intersecting.
    bool above_half_structure = false;

    std::string label() const {
        if (above_half_structure) {
            return "above-half";
        }
        return star ? "star" : "other";
    }
};

inline FamilyClassification classify_family(const GraphSpec& spec, const Family& f) {
    FamilyClassification c;
    c.common.assign(static_cast<std::size_t>(f.universe()), spec.k);
    for (const auto& a : f) {
        for (std::size_t i = 0; i < c.common.size(); ++i) {
            c.common[i] = std::min(c.common[i], a.counts()[i]);
        }
    }
    c.star = !f.empty() && std::accumulate(c.common.begin(), c.common.end(), 0) >= spec.t;

    const int m = spec.universe;
    const int k = spec.k;
    if (spec.kind == GraphKind::multiset && spec.t == 1 && m <= k) {
        const Family above = above_half_family(m, k);
        if (f.includes(above)) {
            const Family rest = f.without(above);
            if (m % 2 == 1) {
                c.above_half_structure = rest.empty();
            } else {
                const auto half = static_cast<std::size_t>(m / 2);
                const bool levels_ok = std::all_of(rest.begin(), rest.end(),
                                                   [&](const Multiset& a) { return a.support_size() == half; });
                c.above_half_structure = levels_ok && BigCount(rest.size()) * 2 == level_count(m, k, m / 2) &&
                                         is_t_intersecting_family(rest, 1);
            }
        }
    }
    return c;
}

struct MaximumCensus {
    GraphSpec spec;
    std::size_t optimum = 0;
    bool complete = false;
    std::vector<Family> families;
    std::vector<FamilyClassification> classes;
    std::uint64_t nodes = 0;
    double seconds = 0;

    std::size_t count_if_star() const {
        return static_cast<std::size_t>(
            std::count_if(classes.begin(), classes.end(), [](const auto& c) { return c.star; }));
    }
};

/// All maximum t-intersecting families (up to cap), each classified.
inline MaximumCensus enumerate_maximum_families(const GraphSpec& spec, std::size_t cap = default_census_cap,
                                                const SolveOptions& opts = {}) {
    const auto g = build_graph(spec, std::max(opts.vertex_limit, std::size_t{1}));
    SolveOptions solve_opts = opts;
    solve_opts.canonical_witness = false;
    const auto best = max_independent_set(g, solve_opts);
    if (!best.proven_optimal) {
        throw limit_exceeded("census: optimum of " + spec.name() + " not proven within budget");
    }
    const auto sets = enumerate_maximum_independent_sets(g, best.best.size(), cap, opts);
    MaximumCensus out{spec, sets.optimum, sets.complete, {}, {}, best.nodes + sets.nodes, best.seconds + sets.seconds};
    for (const auto& s : sets.sets) {
        out.families.push_back(family_from_ranks(spec, s));
        out.classes.push_back(classify_family(spec, out.families.back()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// A family with claims to be re-checked without consulting the solver.
struct Certificate {
    Family family;
    std::size_t claimed_size = 0;
    int t = 1;
    GraphKind kind = GraphKind::multiset;
    /// Also claim no further object of the class can be added.
    bool claim_maximal = false;
};

struct CertificateVerdict {
    bool valid = false;
    std::string reason;
    std::optional<std::pair<Multiset, Multiset>> violating_pair;
    std::optional<Multiset> extension;
};

inline CertificateVerdict verify_certificate(const Certificate& c) {
    CertificateVerdict v;
    if (c.t < 1 || c.t > c.family.cardinality()) {
        v.reason = "t outside [1, k]";
        return v;
    }
    if (c.family.size() != c.claimed_size) {
        v.reason = "claimed size " + std::to_string(c.claimed_size) + " but family has " +
                   std::to_string(c.family.size()) + " members";
        return v;
    }
    if (c.kind == GraphKind::set) {
        for (const auto& a : c.family) {
            auto cs = a.counts();
            if (std::any_of(cs.begin(), cs.end(), [](int x) { return x > 1; })) {
                v.reason = "member " + a.to_string() + " is not a set";
                return v;
            }
        }
    }
    const auto& ms = c.family.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            auto ci = ms[i].counts();
            auto cj = ms[j].counts();
            int common = 0;
            for (std::size_t e = 0; e < ci.size(); ++e) {
                common += std::min(ci[e], cj[e]);
            }
            if (common < c.t) {
                v.reason = "members " + ms[i].to_string() + " and " + ms[j].to_string() + " meet in " +
                           std::to_string(common) + " < t elements";
                v.violating_pair = std::make_pair(ms[i], ms[j]);
                return v;
            }
        }
    }
    if (c.claim_maximal) {
        const auto spec = c.kind == GraphKind::set
                              ? GraphSpec::set(c.family.universe(), c.family.cardinality(), c.t)
                              : GraphSpec::multiset(c.family.universe(), c.family.cardinality(), c.t);
        for (const auto& x : vertices(spec)) {
            if (c.family.contains(x)) {
                continue;
            }
            const bool fits = std::all_of(ms.begin(), ms.end(),
                                          [&](const Multiset& a) { return intersection_size(a, x) >= c.t; });
            if (fits) {
                v.reason = "not maximal: " + x.to_string() + " can be added";
                v.extension = x;
                return v;
            }
        }
    }
    v.valid = true;
    v.reason = "ok";
    return v;
}

}  // namespace mekr

#endif
