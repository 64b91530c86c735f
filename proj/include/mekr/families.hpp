#ifndef MEKR_FAMILIES_HPP
#define MEKR_FAMILIES_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mekr/combinatorics.hpp"
#include "mekr/multiset.hpp"

namespace mekr {

/// Calls fn on every k-multiset over [m] in canonical order.
template <typename Fn>
void for_each_multiset(int m, int k, Fn&& fn) {
    if (m < 1 || k < 1) {
        throw std::invalid_argument("for_each_multiset: need m >= 1 and k >= 1");
    }
    // Sorted element list, advanced like an odometer with non-decreasing digits.
    std::vector<int> elems(static_cast<std::size_t>(k), 1);
    for (;;) {
        fn(Multiset::from_elements(m, std::span<const int>(elems)));
        int i = k - 1;
        while (i >= 0 && elems[static_cast<std::size_t>(i)] == m) {
            --i;
        }
        if (i < 0) {
            return;
        }
        const int v = elems[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < k; ++j) {
            elems[static_cast<std::size_t>(j)] = v;
        }
    }
}

/// Members of all k-multisets over [m] satisfying pred.
template <typename Pred>
Family filter_multisets(int m, int k, Pred&& pred) {
    std::vector<Multiset> out;
    for_each_multiset(m, k, [&](const Multiset& a) {
        if (pred(a)) {
            out.push_back(a);
        }
    });
    return Family(m, k, std::move(out));
}

inline Family all_multisets(int m, int k) {
    return filter_multisets(m, k, [](const Multiset&) { return true; });
}

/// First unordered pair of members (in canonical order) meeting in fewer than t elements.
inline std::optional<std::pair<Multiset, Multiset>> first_non_intersecting_pair(const Family& f, int t) {
    const auto& ms = f.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            if (intersection_size(ms[i], ms[j]) < t) {
                return std::make_pair(ms[i], ms[j]);
            }
        }
    }
    return std::nullopt;
}

/// Every pair of distinct members shares at least t elements (with repetition).
inline bool is_t_intersecting_family(const Family& f, int t) {
    if (t < 1) {
        throw std::invalid_argument("t must be positive");
    }
    return !first_non_intersecting_pair(f, t).has_value();
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// All k-multisets containing element x.
inline Family star_family(int m, int k, int x) {
    if (x < 1 || x > m) {
        throw std::out_of_range("star_family: fixed element " + std::to_string(x) + " outside [1," +
                                std::to_string(m) + "]");
    }
    return filter_multisets(m, k, [x](const Multiset& a) { return a.contains(x); });
}

/// All k-multisets containing the fixed t-multiset T (pointwise dominance).
inline Family t_star_family(int m, int k, const Multiset& fixed) {
    if (fixed.universe() != m) {
        throw std::invalid_argument("t_star_family: fixed multiset over a different universe");
    }
    if (fixed.cardinality() > k) {
        throw std::invalid_argument("t_star_family: t = " + std::to_string(fixed.cardinality()) +
                                    " exceeds k = " + std::to_string(k));
    }
    return filter_multisets(m, k, [&](const Multiset& a) { return dominates(a, fixed); });
}

/// |level_family(m,k,j)| = C(m,j) C(k-1,k-j).
inline BigCount level_count(int m, int k, int j) { return binomial(m, j) * binomial(k - 1, k - j); }

/// All k-multisets whose support has exactly j elements.
inline Family level_family(int m, int k, int j) {
    if (j < 1 || j > std::min(m, k)) {
        throw std::out_of_range("level_family: level " + std::to_string(j) + " outside [1, min(m,k)]");
    }
    return filter_multisets(m, k,
                            [j](const Multiset& a) { return a.support_size() == static_cast<std::size_t>(j); });
}

/// Smallest support size strictly above m/2.
inline int above_half_threshold(int m) { return m / 2 + 1; }

inline BigCount above_half_count(int m, int k) {
    BigCount total = 0;
    for (int j = (m + 2) / 2; j <= m; ++j) {  // ceil((m+1)/2)
        total += level_count(m, k, j);
    }
    return total;
}

/// All k-multisets with more than m/2 distinct elements. Always intersecting.
inline Family above_half_family(int m, int k) {
    const auto lo = static_cast<std::size_t>(above_half_threshold(m));
    return filter_multisets(m, k, [lo](const Multiset& a) { return a.support_size() >= lo; });
}

/// Picks which of two complementary (m/2)-supports to keep.
using SupportChooser = std::function<bool(const Support&)>;

inline bool contains_element_one(const Support& s) { return s.contains(1); }

/**
 * All k-multisets whose (m/2)-element support is selected by `chooser`.
 * The chooser must accept exactly one support from every complementary
 * pair; otherwise std::invalid_argument is thrown.
 */
inline Family half_selection_family(int m, int k, const SupportChooser& chooser = contains_element_one) {
    if (m % 2 != 0) {
        throw std::invalid_argument("half_selection_family: m must be even");
    }
    if (m / 2 > k) {
        throw std::invalid_argument("half_selection_family: level m/2 is empty when m/2 > k");
    }
    return filter_multisets(m, k, [&](const Multiset& a) {
        if (a.support_size() != static_cast<std::size_t>(m / 2)) {
            return false;
        }
        const Support s = a.support();
        const bool keep = chooser(s);
        if (keep == chooser(s.complement())) {
            throw std::invalid_argument("half_selection_family: chooser must pick exactly one of each "
                                        "complementary pair of supports");
        }
        return keep;
    });
}

/**
 * All k-multisets whose support meets F in at least t+1 distinct
 * elements, where F is a (t+2)-subset of [m]. t-intersecting.
 */
inline Family frankl_plus_family(int m, int k, int t, const Support& F) {
    if (t < 1 || t + 2 > m || t + 1 > k) {
        throw std::invalid_argument("frankl_plus_family: need t >= 1, t+2 <= m, t+1 <= k");
    }
    if (F.universe != m || F.size() != static_cast<std::size_t>(t + 2)) {
        throw std::invalid_argument("frankl_plus_family: F must be a (t+2)-subset of [m]");
    }
    for (std::size_t i = 0; i < F.elements.size(); ++i) {
        if (F.elements[i] < 1 || F.elements[i] > m || (i > 0 && F.elements[i] <= F.elements[i - 1])) {
            throw std::invalid_argument("frankl_plus_family: F must be sorted distinct elements of [m]");
        }
    }
    return filter_multisets(m, k, [&](const Multiset& a) {
        int hits = 0;
        for (int x : F.elements) {
            hits += a.contains(x) ? 1 : 0;
        }
        return hits >= t + 1;
    });
}

/// F = {1, ..., t+2}.
inline Support default_frankl_set(int m, int t) {
    Support F{m, {}};
    for (int x = 1; x <= t + 2; ++x) {
        F.elements.push_back(x);
    }
    return F;
}

inline Family frankl_plus_family(int m, int k, int t) {
    return frankl_plus_family(m, k, t, default_frankl_set(m, t));
}

/// Closed-form |frankl_plus_family(m,k,t)|: choose s >= t+1 support
/// elements inside F and r outside, then distribute the remaining k-s-r
/// copies over the s+r support elements.
inline BigCount frankl_plus_count(int m, int k, int t) {
    BigCount total = 0;
    for (int s = t + 1; s <= t + 2; ++s) {
        for (int r = 0; r <= m - t - 2; ++r) {
            total += binomial(t + 2, s) * binomial(m - t - 2, r) * binomial(k - 1, k - s - r);
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Bounds
// ---------------------------------------------------------------------------

struct BoundReport {
    std::string formula_name;
    BigCount value;
    int m = 0;
    int k = 0;
    int t = 1;
    bool in_regime = false;
    std::string regime;  // human-readable regime condition
};

/// C(m+k-2, k-1); proven maximum for m >= k+1.
inline BoundReport theorem1_bound(int m, int k) {
    if (m < 1 || k < 1) {
        throw std::invalid_argument("theorem1_bound: need m, k >= 1");
    }
    return {"theorem1", binomial(m + k - 2, k - 1), m, k, 1, m >= k + 1, "m >= k+1"};
}

/// |M_(>m/2)| for m odd, plus half of |M_(m/2)| for m even; proven for m <= k.
inline BoundReport theorem2_bound(int m, int k) {
    if (m < 1 || k < 1) {
        throw std::invalid_argument("theorem2_bound: need m, k >= 1");
    }
    BigCount value = above_half_count(m, k);
    if (m % 2 == 0) {
        value += level_count(m, k, m / 2) / 2;
    }
    return {"theorem2", value, m, k, 1, m <= k, "m <= k"};
}

/// C(m+k-t-1, k-t); conjectured maximum for m >= t(k-t)+2.
inline BoundReport conjecture_bound(int m, int k, int t) {
    if (m < 1 || k < 1) {
        throw std::invalid_argument("conjecture_bound: need m, k >= 1");
    }
    if (t < 1 || t > k) {
        throw std::out_of_range("conjecture_bound: need 1 <= t <= k");
    }
    return {"conjecture", binomial(m + k - t - 1, k - t), m, k, t, m >= t * (k - t) + 2, "m >= t(k-t)+2"};
}

}  // namespace mekr

#endif
