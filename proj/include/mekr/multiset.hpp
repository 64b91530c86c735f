#ifndef MEKR_MULTISET_HPP
#define MEKR_MULTISET_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mekr {

/// Set of distinct elements of [m] (1-based, strictly increasing).
struct Support {
    int universe = 0;
    std::vector<int> elements;

    std::size_t size() const { return elements.size(); }

    bool contains(int x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }

    /// [m] minus this support.
    Support complement() const {
        Support out{universe, {}};
        for (int x = 1; x <= universe; ++x) {
            if (!contains(x)) {
                out.elements.push_back(x);
            }
        }
        return out;
    }

    bool operator==(const Support&) const = default;
};

/**
 * A k-multiset over [m], stored as its multiplicity vector:
 * counts()[i] is the number of copies of element i+1.
 *
 * Members are ordered canonically by their sorted element lists, so
 * {1,1,2} < {1,2,2} < {2,2,2}. A k-subset of [n] is the special case of a
 * 0/1 multiplicity vector.
 */
class Multiset {
public:
    explicit Multiset(std::vector<int> counts) : counts_(std::move(counts)) {
        if (counts_.empty()) {
            throw std::invalid_argument("multiset universe must be nonempty");
        }
        for (int c : counts_) {
            if (c < 0) {
                throw std::invalid_argument("multiplicities must be non-negative");
            }
            k_ += c;
        }
        if (k_ < 1) {
            throw std::invalid_argument("multiset cardinality must be at least 1");
        }
    }

    /// Builds from a list of elements in [m]; order and repetition as given.
    static Multiset from_elements(int m, std::span<const int> elements) {
        if (m < 1) {
            throw std::invalid_argument("universe size must be positive");
        }
        std::vector<int> counts(static_cast<std::size_t>(m), 0);
        for (int x : elements) {
            if (x < 1 || x > m) {
                throw std::out_of_range("element " + std::to_string(x) + " outside [1," +
                                        std::to_string(m) + "]");
            }
            ++counts[static_cast<std::size_t>(x - 1)];
        }
        return Multiset(std::move(counts));
    }

    static Multiset from_elements(int m, std::initializer_list<int> elements) {
        return from_elements(m, std::span<const int>(elements.begin(), elements.size()));
    }

    int universe() const { return static_cast<int>(counts_.size()); }
    int cardinality() const { return k_; }
    std::span<const int> counts() const { return counts_; }

    /// Multiplicity of element x (1-based); 0 outside [m].
    int count(int x) const {
        if (x < 1 || x > universe()) {
            return 0;
        }
        return counts_[static_cast<std::size_t>(x - 1)];
    }

    bool contains(int x) const { return count(x) > 0; }

    /// Sorted element list with repetition, e.g. (1,2,0,1) -> 1 2 2 4.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(k_));
        for (int i = 0; i < universe(); ++i) {
            out.insert(out.end(), static_cast<std::size_t>(counts_[static_cast<std::size_t>(i)]), i + 1);
        }
        return out;
    }

    Support support() const {
        Support s{universe(), {}};
        for (int i = 0; i < universe(); ++i) {
            if (counts_[static_cast<std::size_t>(i)] > 0) {
                s.elements.push_back(i + 1);
            }
        }
        return s;
    }

    std::size_t support_size() const {
        return static_cast<std::size_t>(
            std::count_if(counts_.begin(), counts_.end(), [](int c) { return c > 0; }));
    }

    /// Whitespace-separated element list, the human-readable form.
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int x : elements()) {
            os << (first ? "" : " ") << x;
            first = false;
        }
        return os.str();
    }

    bool operator==(const Multiset&) const = default;

    // Lex order on sorted element lists is descending lex order on the
    // multiplicity vectors when (m, k) agree.
    std::strong_ordering operator<=>(const Multiset& other) const {
        if (auto c = universe() <=> other.universe(); c != 0) {
            return c;
        }
        if (auto c = k_ <=> other.k_; c != 0) {
            return c;
        }
        return other.counts_ <=> counts_;
    }

private:
    std::vector<int> counts_;
    int k_ = 0;
};

/// Cardinality of the multiset intersection: sum of pointwise minima.
inline int intersection_size(const Multiset& a, const Multiset& b) {
    if (a.universe() != b.universe() || a.cardinality() != b.cardinality()) {
        throw std::invalid_argument("intersection_size: multisets from different (m,k) contexts");
    }
    int total = 0;
    auto ca = a.counts();
    auto cb = b.counts();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        total += std::min(ca[i], cb[i]);
    }
    return total;
}

inline Support support(const Multiset& a) { return a.support(); }

/// True iff a contains b as a multiset (pointwise dominance).
inline bool dominates(const Multiset& a, const Multiset& b) {
    if (a.universe() != b.universe()) {
        return false;
    }
    auto ca = a.counts();
    auto cb = b.counts();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] < cb[i]) {
            return false;
        }
    }
    return true;
}

/**
 * Finite collection of distinct k-multisets over [m], kept sorted in
 * canonical order. Immutable once constructed.
 */
class Family {
public:
    Family(int m, int k) : m_(m), k_(k) {
        if (m < 1 || k < 1) {
            throw std::invalid_argument("family context requires m >= 1 and k >= 1");
        }
    }

    Family(int m, int k, std::vector<Multiset> members) : Family(m, k) {
        for (const auto& a : members) {
            if (a.universe() != m || a.cardinality() != k) {
                throw std::invalid_argument("family member " + a.to_string() +
                                            " does not match context (m=" + std::to_string(m) +
                                            ", k=" + std::to_string(k) + ")");
            }
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        members_ = std::move(members);
    }

    int universe() const { return m_; }
    int cardinality() const { return k_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Multiset>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    const Multiset& operator[](std::size_t i) const { return members_[i]; }

    bool contains(const Multiset& a) const {
        return std::binary_search(members_.begin(), members_.end(), a);
    }

    Family united_with(const Family& other) const {
        check_context(other);
        std::vector<Multiset> out;
        std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
        return Family(m_, k_, std::move(out));
    }

    Family without(const Family& other) const {
        check_context(other);
        std::vector<Multiset> out;
        std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
        return Family(m_, k_, std::move(out));
    }

    bool includes(const Family& other) const {
        return m_ == other.m_ && k_ == other.k_ &&
               std::includes(begin(), end(), other.begin(), other.end());
    }

    bool operator==(const Family&) const = default;

private:
    void check_context(const Family& other) const {
        if (m_ != other.m_ || k_ != other.k_) {
            throw std::invalid_argument("families from different (m,k) contexts");
        }
    }

    int m_;
    int k_;
    std::vector<Multiset> members_;
};

}  // namespace mekr

#endif
