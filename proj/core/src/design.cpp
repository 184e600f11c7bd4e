#include "pointcode/design.hpp"

#include <algorithm>
#include <numeric>

namespace pointcode {

DesignParams derive_params(uint32_t v, uint32_t block_size, uint32_t lambda) {
    if (block_size < 2 || block_size >= v)
        throw AdmissibilityError("need 2 <= k < v for an incomplete design");
    if (lambda < 1) throw AdmissibilityError("need lambda >= 1");
    uint64_t rn = uint64_t(lambda) * (v - 1);
    if (rn % (block_size - 1) != 0)
        throw AdmissibilityError("admissibility failure: r(k-1) = lambda(v-1) has no integer r");
    uint64_t r = rn / (block_size - 1);
    uint64_t bn = r * v;
    if (bn % block_size != 0)
        throw AdmissibilityError("admissibility failure: rv = bk has no integer b");
    DesignParams p;
    p.v = v;
    p.block_size = block_size;
    p.lambda = lambda;
    p.r = static_cast<uint32_t>(r);
    p.b = static_cast<uint32_t>(bn / block_size);
    return p;
}

Design Design::validate(const BitMatrix& candidate, uint32_t v, uint32_t block_size,
                        uint32_t lambda) {
    DesignParams p = derive_params(v, block_size, lambda);
    if (candidate.rows() != v)
        throw ValidationError("candidate has " + std::to_string(candidate.rows()) +
                              " rows, expected v=" + std::to_string(v));
    if (candidate.cols() != p.b)
        throw ValidationError("candidate has " + std::to_string(candidate.cols()) +
                              " columns, expected b=" + std::to_string(p.b));
    for (uint32_t i = 0; i < v; ++i) {
        uint32_t w = candidate.row(i).weight();
        if (w != p.r)
            throw ValidationError("row " + std::to_string(i) + " has weight " +
                                  std::to_string(w) + ", expected r=" + std::to_string(p.r));
    }
    for (uint32_t j = 0; j < p.b; ++j) {
        uint32_t w = 0;
        for (uint32_t i = 0; i < v; ++i) w += candidate.bit(i, j);
        if (w != block_size)
            throw ValidationError("column " + std::to_string(j) + " has weight " +
                                  std::to_string(w) + ", expected k=" + std::to_string(block_size));
    }
    for (uint32_t i = 0; i < v; ++i)
        for (uint32_t j = i + 1; j < v; ++j) {
            uint32_t w = BitVector::and_weight(candidate.row(i), candidate.row(j));
            if (w != lambda)
                throw ValidationError("rows " + std::to_string(i) + "," + std::to_string(j) +
                                      " meet in " + std::to_string(w) +
                                      " blocks, expected lambda=" + std::to_string(lambda));
        }
    Design d;
    d.p_ = p;
    d.inc_ = candidate;
    return d;
}

BitMatrix Design::sorted_incidence() const {
    std::vector<BitVector> cols;
    cols.reserve(p_.b);
    BitMatrix t = inc_.transpose();
    for (uint32_t j = 0; j < p_.b; ++j) cols.push_back(t.row(j));
    std::sort(cols.begin(), cols.end());
    BitMatrix sorted_t(0, p_.v);
    for (auto& c : cols) sorted_t.append_row(std::move(c));
    return sorted_t.transpose();
}

BitMatrix augment(const Design& d) {
    const BitMatrix& inc = d.incidence();
    BitMatrix out(inc.rows(), inc.cols() + 1);
    for (uint32_t i = 0; i < inc.rows(); ++i) {
        for (uint32_t j = 0; j < inc.cols(); ++j)
            if (inc.bit(i, j)) out.set(i, j);
        out.set(i, inc.cols());
    }
    return out;
}

MannBound mann_bound(const Design& d) {
    const DesignParams& p = d.params();
    if (p.r <= p.lambda)
        throw Error("mann_bound: not applicable, requires r > lambda");
    BitMatrix t = d.incidence().transpose();
    std::vector<BitVector> cols;
    cols.reserve(p.b);
    for (uint32_t j = 0; j < p.b; ++j) cols.push_back(t.row(j));
    std::sort(cols.begin(), cols.end());
    uint32_t best = 1, run = 1;
    for (uint32_t j = 1; j < cols.size(); ++j) {
        if (cols[j] == cols[j - 1])
            ++run;
        else
            run = 1;
        best = std::max(best, run);
    }
    return {best, p.b / p.v};
}

CanonicalForm design_canonical(const Design& d) {
    const DesignParams& p = d.params();
    BipartiteIncidence g;
    g.left = p.v;
    g.right = p.b;
    g.adjacency = d.incidence();
    std::vector<uint32_t> points(p.v), blocks(p.b);
    std::iota(points.begin(), points.end(), 0u);
    std::iota(blocks.begin(), blocks.end(), p.v);
    g.color_classes = {std::move(points), std::move(blocks)};
    return canonical_form(g);
}

LinearCode point_code(const Design& d, bool augmented) {
    return LinearCode::from_rows(augmented ? augment(d) : d.incidence());
}

}  // namespace pointcode
