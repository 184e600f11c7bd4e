#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pointcode/bitvec.hpp"
#include "pointcode/errors.hpp"

namespace pointcode {

/// Dense bit-packed matrix over GF(2), stored as a list of BitVector rows.
/// The column count is carried explicitly so 0-row matrices keep their width.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(uint32_t rows, uint32_t cols) : cols_(cols), r_(rows, BitVector(cols)) {}

    static BitMatrix from_strings(const std::vector<std::string>& rows) {
        if (rows.empty()) throw DimensionError("from_strings: need at least one row");
        BitMatrix m(0, static_cast<uint32_t>(rows.front().size()));
        for (const auto& s : rows) m.append_row(BitVector::from_string(s));
        return m;
    }

    static BitMatrix from_strings(std::initializer_list<const char*> rows) {
        std::vector<std::string> v(rows.begin(), rows.end());
        return from_strings(v);
    }

    static BitMatrix identity(uint32_t n) {
        BitMatrix m(n, n);
        for (uint32_t i = 0; i < n; ++i) m.r_[i].set(i);
        return m;
    }

    uint32_t rows() const { return static_cast<uint32_t>(r_.size()); }
    uint32_t cols() const { return cols_; }

    const BitVector& row(uint32_t i) const { return r_[i]; }
    BitVector& row(uint32_t i) { return r_[i]; }

    bool bit(uint32_t i, uint32_t j) const { return r_[i].bit(j); }
    void set(uint32_t i, uint32_t j, bool v = true) { r_[i].set(j, v); }

    void append_row(BitVector v) {
        if (v.size() != cols_) throw DimensionError("append_row: width mismatch");
        r_.push_back(std::move(v));
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows());
        for (uint32_t i = 0; i < rows(); ++i)
            for (uint32_t j = 0; j < cols_; ++j)
                if (r_[i].bit(j)) t.set(j, i);
        return t;
    }

    bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && r_ == o.r_; }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }
    bool operator<(const BitMatrix& o) const {
        if (cols_ != o.cols_) return cols_ < o.cols_;
        return r_ < o.r_;
    }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(r_.size());
        for (const auto& v : r_) out.push_back(v.to_string());
        return out;
    }

private:
    uint32_t cols_ = 0;
    std::vector<BitVector> r_;
};

struct RrefResult {
    BitMatrix matrix;             // reduced row-echelon form, zero rows dropped
    std::vector<uint32_t> pivots; // pivot column of each surviving row, ascending
};

/// Unique reduced row-echelon form over GF(2).
RrefResult rref(const BitMatrix& m);

uint32_t rank(const BitMatrix& m);

/// Basis of the null space of m (rows orthogonal to every row of m),
/// returned in rref form; its rank is cols - rank(m).
BitMatrix dual(const BitMatrix& m);

/// Reduce v against rref rows with the given pivots; returns the residue.
BitVector reduce_against(BitVector v, const BitMatrix& rref_rows,
                         const std::vector<uint32_t>& pivots);

/// Membership of v in the row space described by (rref_rows, pivots).
bool in_row_space(const BitVector& v, const BitMatrix& rref_rows,
                  const std::vector<uint32_t>& pivots);

enum class SpanOrder {
    gray,          // step i flips basis row countr_zero(i); one XOR per word
    lexicographic  // ascending message order, message bit j <-> basis row j
};

struct SpanGuard {
    uint32_t max_dimension = 24;
    bool override_guard = false;
};

namespace detail {
inline void check_span_guard(uint32_t k, const SpanGuard& g) {
    if (k > 62) throw GuardError("enumerate_span: dimension over hard limit 62");
    if (k > g.max_dimension && !g.override_guard)
        throw GuardError("enumerate_span: dimension " + std::to_string(k) +
                         " exceeds guard " + std::to_string(g.max_dimension) +
                         " (pass an override to enumerate anyway)");
}
}  // namespace detail

/// Visit all 2^k words spanned by a full-rank basis, starting from the zero
/// word. Gray order: word i differs from word i-1 by basis row
/// countr_zero(i). Lexicographic order: words appear by ascending message
/// integer, where message bit j selects basis row j.
template <class Fn>
void for_each_codeword(const BitMatrix& basis, Fn&& fn,
                       SpanOrder order = SpanOrder::gray, SpanGuard guard = {}) {
    const uint32_t k = basis.rows();
    detail::check_span_guard(k, guard);
    BitVector cur(basis.cols());
    fn(const_cast<const BitVector&>(cur));
    if (k == 0) return;
    const uint64_t total = uint64_t(1) << k;
    if (order == SpanOrder::gray) {
        for (uint64_t i = 1; i < total; ++i) {
            cur ^= basis.row(static_cast<uint32_t>(std::countr_zero(i)));
            fn(const_cast<const BitVector&>(cur));
        }
    } else {
        for (uint64_t m = 1; m < total; ++m) {
            uint64_t changed = m ^ (m - 1);
            while (changed) {
                cur ^= basis.row(static_cast<uint32_t>(std::countr_zero(changed)));
                changed &= changed - 1;
            }
            fn(const_cast<const BitVector&>(cur));
        }
    }
}

std::vector<BitVector> span_words(const BitMatrix& basis,
                                  SpanOrder order = SpanOrder::gray,
                                  SpanGuard guard = {});

}  // namespace pointcode
