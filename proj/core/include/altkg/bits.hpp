#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace altkg {

/// Single-word bitmask helpers.  The alternation kernel and the subset
/// machinery index at most 64 positions, so a plain uint64_t is enough there.
using Mask = std::uint64_t;

inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline constexpr int popcount(Mask m) { return std::popcount(m); }
inline constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

/// Iterate set bits: for (Mask m = x; m; m &= m - 1) { int i = lowest_bit(m); ... }
inline constexpr int lowest_bit(Mask m) { return std::countr_zero(m); }

/// Lexicographically next k-subset mask (Gosper's hack).  Returns 0 when the
/// enumeration within `limit` bits is exhausted.
inline Mask next_k_subset(Mask m, int limit) {
    Mask c = m & (0 - m);
    Mask r = m + c;
    Mask next = (((r ^ m) >> 2) / c) | r;
    if (limit < 64 && (next >> limit) != 0) return 0;
    return next;
}

inline Mask first_k_subset(int k) { return (k == 0) ? 0 : ((k >= 64) ? ~Mask{0} : (bit(k) - 1)); }

/// Growable bitset for graphs whose vertex count exceeds one word
/// (adjacency rows, CSP domains).  Deliberately minimal.
class DynBits {
public:
    DynBits() = default;
    explicit DynBits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= bit(i & 63); }
    void reset(int i) { w_[i >> 6] &= ~bit(i & 63); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (Mask w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (Mask w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    DynBits& operator&=(const DynBits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    DynBits& operator|=(const DynBits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    DynBits& subtract(const DynBits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const DynBits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const DynBits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    /// Index of the lowest set bit, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
        return -1;
    }
    /// Lowest set bit strictly after i, or -1.
    int next_after(int i) const {
        ++i;
        if (i >= n_) return -1;
        size_t wi = size_t(i) >> 6;
        Mask w = w_[wi] & ~(bit(i & 63) - 1);
        while (true) {
            if (w) return int(wi) * 64 + std::countr_zero(w);
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    bool operator==(const DynBits& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_ = 0;
    std::vector<Mask> w_;
};

} // namespace altkg
