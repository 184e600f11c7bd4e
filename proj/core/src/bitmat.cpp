#include "pointcode/bitmat.hpp"

#include <algorithm>

namespace pointcode {

RrefResult rref(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (uint32_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

    std::vector<uint32_t> pivots;
    uint32_t lead = 0;
    for (uint32_t col = 0; col < m.cols() && lead < rows.size(); ++col) {
        uint32_t p = lead;
        while (p < rows.size() && !rows[p].bit(col)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[lead], rows[p]);
        for (uint32_t i = 0; i < rows.size(); ++i)
            if (i != lead && rows[i].bit(col)) rows[i] ^= rows[lead];
        pivots.push_back(col);
        ++lead;
    }

    BitMatrix out(0, m.cols());
    for (uint32_t i = 0; i < lead; ++i) out.append_row(std::move(rows[i]));
    return {std::move(out), std::move(pivots)};
}

uint32_t rank(const BitMatrix& m) { return rref(m).matrix.rows(); }

BitMatrix dual(const BitMatrix& m) {
    RrefResult r = rref(m);
    const uint32_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (uint32_t p : r.pivots) is_pivot[p] = true;

    BitMatrix out(0, n);
    for (uint32_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(n);
        v.set(f);
        for (uint32_t i = 0; i < r.pivots.size(); ++i)
            if (r.matrix.bit(i, f)) v.set(r.pivots[i]);
        out.append_row(std::move(v));
    }
    return rref(out).matrix;
}

BitVector reduce_against(BitVector v, const BitMatrix& rref_rows,
                         const std::vector<uint32_t>& pivots) {
    for (uint32_t i = 0; i < pivots.size(); ++i)
        if (v.bit(pivots[i])) v ^= rref_rows.row(i);
    return v;
}

bool in_row_space(const BitVector& v, const BitMatrix& rref_rows,
                  const std::vector<uint32_t>& pivots) {
    return !reduce_against(v, rref_rows, pivots).any();
}

std::vector<BitVector> span_words(const BitMatrix& basis, SpanOrder order, SpanGuard guard) {
    std::vector<BitVector> out;
    out.reserve(size_t(1) << std::min<uint32_t>(basis.rows(), 24));
    for_each_codeword(basis, [&](const BitVector& w) { out.push_back(w); }, order, guard);
    return out;
}

}  // namespace pointcode
