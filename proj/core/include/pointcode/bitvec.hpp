#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pointcode/errors.hpp"

namespace pointcode {

/// Packed GF(2) vector. Coordinate i lives at bit (i % 64) of word (i / 64);
/// every textual form prints coordinate 0 leftmost. Storage past the last
/// coordinate is kept zero so equality, ordering and hashing are exact.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(uint32_t n) : len_(n), w_((n + 63) / 64, 0) {}

    static BitVector from_string(std::string_view s) {
        BitVector v(static_cast<uint32_t>(s.size()));
        for (uint32_t i = 0; i < v.len_; ++i) {
            char c = s[i];
            if (c == '1')
                v.set(i);
            else if (c != '0')
                throw ParseError("bit vector literal may contain only '0' and '1'");
        }
        return v;
    }

    static BitVector ones(uint32_t n) {
        BitVector v(n);
        for (size_t i = 0; i < v.w_.size(); ++i) v.w_[i] = ~uint64_t(0);
        v.mask_tail();
        return v;
    }

    uint32_t size() const { return len_; }
    size_t word_count() const { return w_.size(); }
    uint64_t word(size_t i) const { return w_[i]; }

    bool bit(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void set(uint32_t i, bool value = true) {
        if (i >= len_) throw DimensionError("BitVector::set: coordinate out of range");
        uint64_t m = uint64_t(1) << (i & 63);
        if (value)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    uint32_t weight() const {
        if (w_.size() == 1) return static_cast<uint32_t>(std::popcount(w_[0]));
        uint32_t s = 0;
        for (uint64_t x : w_) s += static_cast<uint32_t>(std::popcount(x));
        return s;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }

    BitVector& operator^=(const BitVector& o) {
        if (len_ != o.len_) throw DimensionError("BitVector xor: length mismatch");
        if (w_.size() == 1) {
            w_[0] ^= o.w_[0];
        } else {
            for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        }
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    BitVector& operator|=(const BitVector& o) {
        if (len_ != o.len_) throw DimensionError("BitVector or: length mismatch");
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    BitVector& operator&=(const BitVector& o) {
        if (len_ != o.len_) throw DimensionError("BitVector and: length mismatch");
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    /// popcount(a AND b); lengths must match.
    static uint32_t and_weight(const BitVector& a, const BitVector& b) {
        if (a.len_ != b.len_) throw DimensionError("BitVector and_weight: length mismatch");
        if (a.w_.size() == 1) return static_cast<uint32_t>(std::popcount(a.w_[0] & b.w_[0]));
        uint32_t s = 0;
        for (size_t i = 0; i < a.w_.size(); ++i)
            s += static_cast<uint32_t>(std::popcount(a.w_[i] & b.w_[i]));
        return s;
    }

    /// Lowest set coordinate, or -1 when the vector is zero.
    int lowest_set() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    /// Copy without coordinate j (length shrinks by one).
    BitVector erase_coordinate(uint32_t j) const {
        if (j >= len_) throw DimensionError("erase_coordinate: coordinate out of range");
        BitVector out(len_ - 1);
        for (uint32_t i = 0, o = 0; i < len_; ++i) {
            if (i == j) continue;
            if (bit(i)) out.set(o);
            ++o;
        }
        return out;
    }

    /// Copy extended by `extra` zero coordinates at the end.
    BitVector zero_extended(uint32_t extra) const {
        BitVector out(len_ + extra);
        for (size_t i = 0; i < w_.size(); ++i) out.w_[i] = w_[i];
        return out;
    }

    /// Coordinate permutation: out[perm[i]] = in[i]. perm must be a
    /// permutation of 0..n-1.
    BitVector permuted(const std::vector<uint32_t>& perm) const {
        BitVector out(len_);
        for (uint32_t i = 0; i < len_; ++i)
            if (bit(i)) out.set(perm[i]);
        return out;
    }

    bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    /// Coordinate-lexicographic order ('0' sorts before '1' at the first
    /// differing coordinate), matching the order of to_string() values.
    bool operator<(const BitVector& o) const {
        if (len_ != o.len_) return len_ < o.len_;
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i] ^ o.w_[i];
            if (x) {
                int t = std::countr_zero(x);
                return ((w_[i] >> t) & 1) == 0;
            }
        }
        return false;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (uint32_t i = 0; i < len_; ++i)
            if (bit(i)) s[i] = '1';
        return s;
    }

    size_t hash() const {
        uint64_t h = 0xcbf29ce484222325ull ^ len_;
        for (uint64_t x : w_) {
            h ^= x;
            h *= 0x100000001b3ull;
        }
        return static_cast<size_t>(h);
    }

private:
    void mask_tail() {
        if (len_ & 63) w_.back() &= (uint64_t(1) << (len_ & 63)) - 1;
    }

    uint32_t len_ = 0;
    std::vector<uint64_t> w_;
};

/// Mod-2 inner product: popcount(a AND b) mod 2.
inline int inner_product(const BitVector& a, const BitVector& b) {
    return static_cast<int>(BitVector::and_weight(a, b) & 1);
}

struct BitVectorHash {
    size_t operator()(const BitVector& v) const { return v.hash(); }
};

}  // namespace pointcode
