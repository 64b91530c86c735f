#ifndef MEKR_BIJECTION_HPP
#define MEKR_BIJECTION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mekr/bitset.hpp"
#include "mekr/combinatorics.hpp"
#include "mekr/graph.hpp"
#include "mekr/multiset.hpp"

namespace mekr {

/**
 * Maps a k-subset B of [m+k-1] to a k-multiset over [m] whose support is
 * exactly B ∩ [m].
 *
 * Write A = B ∩ [m] (never empty, since at most k-1 elements exceed m) and
 * t_1 < ... < t_{k-a} for the elements above m. Each element of A gets one
 * copy; then d_j = (t_j - m) - (j - 1) is a non-decreasing sequence in
 * [1, a], and the j-th extra copy goes to the d_j-th smallest element of A.
 */
inline Multiset phi(const KSubset& b, int m) {
    b.check();
    const int k = b.size();
    if (m < 1 || k < 1 || b.n != m + k - 1) {
        throw std::invalid_argument("phi: subset universe must be m+k-1 = " + std::to_string(m + k - 1) +
                                    ", got " + std::to_string(b.n));
    }
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    std::vector<int> low;
    for (int x : b.elements) {
        if (x <= m) {
            low.push_back(x);
            counts[static_cast<std::size_t>(x - 1)] = 1;
        }
    }
    int j = 0;
    for (int x : b.elements) {
        if (x > m) {
            const int d = (x - m) - j;
            ++counts[static_cast<std::size_t>(low[static_cast<std::size_t>(d - 1)] - 1)];
            ++j;
        }
    }
    return Multiset(std::move(counts));
}

/// Inverse of phi: support becomes A, excess copies become the tail above m.
inline KSubset phi_inverse(const Multiset& a) {
    const int m = a.universe();
    const int k = a.cardinality();
    KSubset b{m + k - 1, {}};
    const auto supp = a.support().elements;
    std::vector<int> tail;
    for (std::size_t p = 0; p < supp.size(); ++p) {
        b.elements.push_back(supp[p]);
        for (int extra = 1; extra < a.count(supp[p]); ++extra) {
            const int d = static_cast<int>(p) + 1;
            tail.push_back(d + static_cast<int>(tail.size()) + m);
        }
    }
    b.elements.insert(b.elements.end(), tail.begin(), tail.end());
    return b;
}

struct HomomorphismCounterexample {
    KSubset first;
    KSubset second;
    Multiset first_image;
    Multiset second_image;
};

/// Outcome of the exhaustive check of phi : K(m+k-1,k,t) -> M(m,k,t).
struct HomomorphismReport {
    int m = 0;
    int k = 0;
    int t = 1;
    std::uint64_t vertex_count = 0;
    bool bijective = false;
    bool support_preserved = false;
    bool edge_preserving = false;
    std::uint64_t edges_checked = 0;
    std::uint64_t edge_failures = 0;
    std::optional<HomomorphismCounterexample> counterexample;  // first by rank order

    bool passed() const { return bijective && support_preserved && edge_preserving; }
};

/// Rank pairs (subset rank, multiset rank) for every k-subset of [m+k-1].
inline std::vector<std::pair<Rank, Rank>> phi_table(int m, int k, std::size_t limit = default_dense_limit) {
    const auto subsets = vertices(GraphSpec::set(m + k - 1, k), limit);
    std::vector<std::pair<Rank, Rank>> out;
    out.reserve(subsets.size());
    for (std::size_t r = 0; r < subsets.size(); ++r) {
        const KSubset b{m + k - 1, subsets[r].elements()};
        out.emplace_back(r, rank_multiset(phi(b, m)));
    }
    return out;
}

/**
 * Exhaustively checks that phi is a bijection carrying every edge of
 * K(m+k-1,k,t) to an edge of M(m,k,t). For t = 1 this always holds; for
 * t >= 2 the failures are counted and the first one is reported.
 */
inline HomomorphismReport check_homomorphism(int m, int k, int t = 1, std::size_t limit = default_dense_limit) {
    if (t < 1 || t > k) {
        throw std::invalid_argument("check_homomorphism: need 1 <= t <= k");
    }
    const int n = m + k - 1;
    const auto subset_vs = vertices(GraphSpec::set(n, k, t), limit);
    HomomorphismReport rep;
    rep.m = m;
    rep.k = k;
    rep.t = t;
    rep.vertex_count = subset_vs.size();

    std::vector<KSubset> subsets;
    std::vector<Multiset> images;
    subsets.reserve(subset_vs.size());
    images.reserve(subset_vs.size());
    std::vector<bool> hit(subset_vs.size(), false);
    bool injective = true;
    bool supports_ok = true;
    for (const auto& v : subset_vs) {
        KSubset b{n, v.elements()};
        Multiset img = phi(b, m);
        const Rank r = rank_multiset(img);
        if (r >= hit.size() || hit[r]) {
            injective = false;
        } else {
            hit[r] = true;
        }
        std::vector<int> low;
        std::copy_if(b.elements.begin(), b.elements.end(), std::back_inserter(low), [m](int x) { return x <= m; });
        supports_ok = supports_ok && img.support().elements == low;
        subsets.push_back(std::move(b));
        images.push_back(std::move(img));
    }
    // Equal cardinalities make injective equivalent to bijective.
    rep.bijective = injective && multichoose(m, k) == binomial(n, k);
    rep.support_preserved = supports_ok;

    for (std::size_t u = 0; u < subsets.size(); ++u) {
        for (std::size_t v = u + 1; v < subsets.size(); ++v) {
            if (intersection_size(subset_vs[u], subset_vs[v]) >= t) {
                continue;
            }
            ++rep.edges_checked;
            if (intersection_size(images[u], images[v]) >= t) {
                if (rep.edge_failures++ == 0) {
                    rep.counterexample = HomomorphismCounterexample{subsets[u], subsets[v], images[u], images[v]};
                }
            }
        }
    }
    rep.edge_preserving = rep.edge_failures == 0;
    return rep;
}

enum class SearchStatus { found, none, undetermined };

inline std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::none: return "none";
        default: return "undetermined";
    }
}

struct HomomorphismSearchResult {
    SearchStatus status = SearchStatus::undetermined;
    std::vector<Rank> mapping;  // mapping[subset rank] = multiset rank, when found
    std::uint64_t nodes = 0;
};

/**
 * Backtracking search for any bijective homomorphism K(m+k-1,k,t) ->
 * M(m,k,t), i.e. a vertex bijection carrying edges to edges. Exhaustive, so
 * only meaningful for tiny parameters; gives up after node_budget nodes.
 */
inline HomomorphismSearchResult search_bijective_homomorphism(int m, int k, int t,
                                                              std::uint64_t node_budget = 10'000'000,
                                                              std::size_t limit = 64) {
    const auto K = build_graph(GraphSpec::set(m + k - 1, k, t), limit);
    const auto M = build_graph(GraphSpec::multiset(m, k, t), limit);
    HomomorphismSearchResult res;
    const std::size_t nv = K.vertex_count();
    if (K.edge_count() > M.edge_count()) {
        res.status = SearchStatus::none;
        return res;
    }

    // Most constrained source vertices first.
    std::vector<std::size_t> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return K.degree(a) > K.degree(b); });

    std::vector<std::size_t> image(nv, Bitset::npos);
    Bitset unused(nv);
    unused.set_all();
    bool exhausted = false;

    auto extend = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == nv) {
            return true;
        }
        if (++res.nodes > node_budget) {
            exhausted = true;
            return false;
        }
        const std::size_t v = order[depth];
        Bitset cand = unused;
        const Bitset& nbrs = K.neighbors(v);
        for (auto u = nbrs.first(); u != Bitset::npos; u = nbrs.next(u + 1)) {
            if (image[u] != Bitset::npos) {
                cand &= M.neighbors(image[u]);
            }
        }
        for (auto w = cand.first(); w != Bitset::npos; w = cand.next(w + 1)) {
            if (M.degree(w) < K.degree(v)) {
                continue;
            }
            image[v] = w;
            unused.reset(w);
            if (self(self, depth + 1)) {
                return true;
            }
            unused.set(w);
            image[v] = Bitset::npos;
            if (exhausted) {
                return false;
            }
        }
        return false;
    };

    if (extend(extend, 0)) {
        res.status = SearchStatus::found;
        res.mapping.assign(image.begin(), image.end());
    } else {
        res.status = exhausted ? SearchStatus::undetermined : SearchStatus::none;
    }
    return res;
}

}  // namespace mekr

#endif
