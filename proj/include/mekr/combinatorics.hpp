#ifndef MEKR_COMBINATORICS_HPP
#define MEKR_COMBINATORICS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mekr/multiset.hpp"

namespace mekr {

/// Exact non-negative integer count.
using BigCount = boost::multiprecision::cpp_int;

/// Position of an object in canonical (lexicographic) order.
using Rank = std::uint64_t;

/// n choose k. Total in k: returns 0 for k < 0 or k > n.
inline BigCount binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) {
        throw std::domain_error("binomial: n must be non-negative, got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigCount r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Number of k-multisets over an m-set, C(m+k-1, k).
inline BigCount multichoose(std::int64_t m, std::int64_t k) {
    if (k < 0) {
        throw std::domain_error("multichoose: k must be non-negative");
    }
    if (m < 0 || (m == 0 && k > 0)) {
        throw std::domain_error("multichoose: empty universe with k > 0");
    }
    if (k == 0) {
        return 1;
    }
    return binomial(m + k - 1, k);
}

inline BigCount factorial(std::int64_t n) {
    if (n < 0) {
        throw std::domain_error("factorial of negative number");
    }
    BigCount r = 1;
    for (std::int64_t i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

/// Narrowing conversion; nullopt if the count does not fit in 64 bits.
inline std::optional<std::uint64_t> to_u64(const BigCount& c) {
    if (c < 0 || c > std::numeric_limits<std::uint64_t>::max()) {
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(c);
}

inline std::string to_string(const BigCount& c) { return c.str(); }

namespace detail {

inline constexpr int binomial_table_size = 68;  // C(67,33) is the largest row maximum below 2^64

inline const std::vector<std::uint64_t>& binomial_table() {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> t(binomial_table_size * binomial_table_size, 0);
        for (int n = 0; n < binomial_table_size; ++n) {
            t[static_cast<std::size_t>(n * binomial_table_size)] = 1;
            for (int k = 1; k <= n; ++k) {
                t[static_cast<std::size_t>(n * binomial_table_size + k)] =
                    t[static_cast<std::size_t>((n - 1) * binomial_table_size + k - 1)] +
                    t[static_cast<std::size_t>((n - 1) * binomial_table_size + k)];
            }
        }
        return t;
    }();
    return table;
}

// C(n,k) in 64 bits, throwing when the value overflows. Used by the
// rank/unrank paths which index into materialised objects.
inline std::uint64_t binomial_u64(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (n < binomial_table_size) {
        return binomial_table()[static_cast<std::size_t>(n * binomial_table_size + k)];
    }
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                      ") exceeds 64-bit rank range");
        }
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace detail

/// Sorted k-subset of [n].
struct KSubset {
    int n = 0;
    std::vector<int> elements;

    int size() const { return static_cast<int>(elements.size()); }

    /// Validates strict increase and range.
    void check() const {
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (elements[i] < 1 || elements[i] > n) {
                throw std::out_of_range("subset element " + std::to_string(elements[i]) +
                                        " outside [1," + std::to_string(n) + "]");
            }
            if (i > 0 && elements[i] <= elements[i - 1]) {
                throw std::invalid_argument("subset elements must be strictly increasing");
            }
        }
    }

    /// The subset as a 0/1 multiset over [n].
    Multiset as_multiset() const {
        check();
        return Multiset::from_elements(n, std::span<const int>(elements));
    }

    bool operator==(const KSubset&) const = default;
    auto operator<=>(const KSubset&) const = default;
};

/// Lexicographic rank of a sorted subset among all |s|-subsets of [n].
inline Rank rank_subset(const KSubset& s) {
    s.check();
    const std::int64_t n = s.n;
    const std::int64_t k = s.size();
    detail::binomial_u64(n, k);  // overflow guard for the total
    Rank r = 0;
    int prev = 0;
    for (std::int64_t i = 0; i < k; ++i) {
        for (int v = prev + 1; v < s.elements[static_cast<std::size_t>(i)]; ++v) {
            r += detail::binomial_u64(n - v, k - i - 1);
        }
        prev = s.elements[static_cast<std::size_t>(i)];
    }
    return r;
}

inline KSubset unrank_subset(Rank r, int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::invalid_argument("unrank_subset: need 0 <= k <= n");
    }
    const std::uint64_t total = detail::binomial_u64(n, k);
    if (r >= total) {
        throw std::out_of_range("unrank_subset: rank " + std::to_string(r) + " >= C(" +
                                std::to_string(n) + "," + std::to_string(k) + ")");
    }
    KSubset s{n, {}};
    int v = 1;
    for (int i = 0; i < k; ++i) {
        for (;; ++v) {
            const std::uint64_t block = detail::binomial_u64(n - v, k - i - 1);
            if (r < block) {
                break;
            }
            r -= block;
        }
        s.elements.push_back(v);
        ++v;
    }
    return s;
}

/// Stars and bars: a_1 <= ... <= a_k  <->  {a_j + j - 1} in [m+k-1].
inline KSubset multiset_to_subset(const Multiset& a) {
    KSubset s{a.universe() + a.cardinality() - 1, a.elements()};
    for (std::size_t j = 0; j < s.elements.size(); ++j) {
        s.elements[j] += static_cast<int>(j);
    }
    return s;
}

inline Multiset subset_to_multiset(const KSubset& s, int m) {
    std::vector<int> elems = s.elements;
    for (std::size_t j = 0; j < elems.size(); ++j) {
        elems[j] -= static_cast<int>(j);
    }
    return Multiset::from_elements(m, std::span<const int>(elems));
}

inline Rank rank_multiset(const Multiset& a) { return rank_subset(multiset_to_subset(a)); }

inline Multiset unrank_multiset(Rank r, int m, int k) {
    if (m < 1 || k < 1) {
        throw std::invalid_argument("unrank_multiset: need m >= 1 and k >= 1");
    }
    return subset_to_multiset(unrank_subset(r, m + k - 1, k), m);
}

}  // namespace mekr

#endif
