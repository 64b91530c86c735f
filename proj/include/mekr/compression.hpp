#ifndef MEKR_COMPRESSION_HPP
#define MEKR_COMPRESSION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mekr/combinatorics.hpp"
#include "mekr/families.hpp"
#include "mekr/multiset.hpp"

namespace mekr {

/// Record of one exchange step: B1 = members with support S_M removed,
/// B2 = all multisets with support [m] \ S_M added.
struct ExchangeTrace {
    Multiset chosen;
    int support_size = 0;
    std::size_t removed = 0;
    std::size_t added = 0;

    std::int64_t net_gain() const {
        return static_cast<std::int64_t>(added) - static_cast<std::int64_t>(removed);
    }
};

struct ExchangeResult {
    Family family;
    ExchangeTrace trace;
};

/// Member of minimum support size; ties go to the lowest canonical rank.
inline const Multiset& min_support_member(const Family& f) {
    if (f.empty()) {
        throw std::invalid_argument("min_support_member: empty family");
    }
    const Multiset* best = &f[0];
    for (const auto& a : f) {
        if (a.support_size() < best->support_size()) {
            best = &a;
        }
    }
    return *best;
}

/// All k-multisets over [m] with support exactly s.
inline Family support_class(const Support& s, int k) {
    const int m = s.universe;
    return filter_multisets(m, k, [&](const Multiset& a) { return a.support() == s; });
}

/**
 * Replaces every member whose support equals S_M by all k-multisets on the
 * complementary support. M must be a member of minimum support size with
 * |S_M| < m/2, the family must be intersecting, and 2 < m <= k.
 */
inline ExchangeResult exchange(const Family& f, const Multiset& chosen) {
    const int m = f.universe();
    const int k = f.cardinality();
    if (m <= 2) {
        throw std::invalid_argument("exchange: requires m > 2");
    }
    if (m > k) {
        throw std::invalid_argument("exchange: requires m <= k");
    }
    if (!f.contains(chosen)) {
        throw std::invalid_argument("exchange: " + chosen.to_string() + " is not a member");
    }
    const auto i = chosen.support_size();
    if (2 * i >= static_cast<std::size_t>(m)) {
        throw std::invalid_argument("exchange: support size " + std::to_string(i) + " is not below m/2");
    }
    if (min_support_member(f).support_size() != i) {
        throw std::invalid_argument("exchange: chosen member does not have minimum support size");
    }
    if (!is_t_intersecting_family(f, 1)) {
        throw std::invalid_argument("exchange: family is not intersecting");
    }

    const Support s = chosen.support();
    std::vector<Multiset> same_support;
    for (const auto& a : f) {
        if (a.support() == s) {
            same_support.push_back(a);
        }
    }
    const Family removed(m, k, std::move(same_support));
    const Family block = support_class(s.complement(), k);
    const Family kept = f.without(removed);
    const Family result = kept.united_with(block);

    ExchangeTrace trace{chosen, static_cast<int>(i), removed.size(), result.size() - kept.size()};
    return {result, std::move(trace)};
}

/// (k-i)!(i-1)! > (k-m+i)!(m-i-1)!, evaluated exactly.
inline bool factorial_inequality_holds(int m, int k, int i) {
    if (m > k || i < 1 || 2 * i >= m) {
        throw std::invalid_argument("factorial_inequality_holds: need m <= k and 1 <= i < m/2");
    }
    return factorial(k - i) * factorial(i - 1) > factorial(k - m + i) * factorial(m - i - 1);
}

struct CompressionResult {
    Family family;
    std::vector<ExchangeTrace> steps;
};

/// Applies exchange at a minimum-support member until every support has
/// at least m/2 elements.
inline CompressionResult compress_to_fixpoint(const Family& f) {
    const int m = f.universe();
    const int k = f.cardinality();
    if (m > k) {
        throw std::invalid_argument("compress_to_fixpoint: requires m <= k");
    }
    if (!is_t_intersecting_family(f, 1)) {
        throw std::invalid_argument("compress_to_fixpoint: family is not intersecting");
    }
    CompressionResult out{f, {}};
    if (f.empty() || m <= 2) {
        return out;
    }
    const std::size_t max_steps = f.size() * static_cast<std::size_t>(m);
    while (2 * min_support_member(out.family).support_size() < static_cast<std::size_t>(m)) {
        if (out.steps.size() >= max_steps) {
            throw std::logic_error("compress_to_fixpoint: exceeded |f|*m steps");
        }
        auto step = exchange(out.family, min_support_member(out.family));
        out.family = std::move(step.family);
        out.steps.push_back(std::move(step.trace));
    }
    return out;
}

}  // namespace mekr

#endif
