#ifndef MEKR_BITSET_HPP
#define MEKR_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace mekr {

/// Fixed-width dynamic bitset with the word-level operations the solver needs.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set_all() {
        for (auto& w : words_) {
            w = ~std::uint64_t{0};
        }
        if (nbits_ % 64 != 0 && !words_.empty()) {
            words_.back() = (std::uint64_t{1} << (nbits_ % 64)) - 1;
        }
    }

    bool none() const {
        for (auto w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    std::size_t first() const { return next(0); }

    /// Lowest set bit with index >= from, or npos.
    std::size_t next(std::size_t from) const {
        if (from >= nbits_) {
            return npos;
        }
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        for (;;) {
            if (w != 0) {
                return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            }
            if (++wi == words_.size()) {
                return npos;
            }
            w = words_[wi];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= o.words_[i];
        }
        return *this;
    }

    /// this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= ~o.words_[i];
        }
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    /// (a & b).any() without materialising.
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) {
                return true;
            }
        }
        return false;
    }

    bool operator==(const Bitset&) const = default;

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mekr

#endif
