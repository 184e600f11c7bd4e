#include "pointcode/lincode.hpp"

#include <sstream>

namespace pointcode {

uint64_t WeightDistribution::total() const {
    uint64_t s = 0;
    for (uint64_t c : counts) s += c;
    return s;
}

bool WeightDistribution::all_even() const {
    for (size_t w = 1; w < counts.size(); w += 2)
        if (counts[w]) return false;
    return true;
}

std::string WeightDistribution::to_sparse() const {
    std::ostringstream os;
    bool first = true;
    for (size_t w = 0; w < counts.size(); ++w) {
        if (!counts[w]) continue;
        if (!first) os << ',';
        os << w << ':' << counts[w];
        first = false;
    }
    return os.str();
}

WeightDistribution WeightDistribution::from_sparse(const std::string& s, uint32_t n) {
    WeightDistribution wd;
    wd.counts.assign(n + 1, 0);
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("weight distribution entry without ':': " + item);
        uint32_t w = static_cast<uint32_t>(std::stoul(item.substr(0, colon)));
        uint64_t c = std::stoull(item.substr(colon + 1));
        if (w > n) throw ParseError("weight distribution entry beyond length");
        wd.counts[w] = c;
    }
    return wd;
}

LinearCode LinearCode::from_rows(const BitMatrix& rows, SpanGuard guard) {
    if (rows.cols() == 0) throw DimensionError("from_rows: zero-length code");
    LinearCode c;
    RrefResult r = rref(rows);
    c.n_ = rows.cols();
    c.k_ = r.matrix.rows();
    c.gen_ = std::move(r.matrix);
    c.pivots_ = std::move(r.pivots);

    BitVector support(c.n_);
    for (uint32_t i = 0; i < c.k_; ++i) support |= c.gen_.row(i);
    c.zero_mask_ = BitVector::ones(c.n_);
    c.zero_mask_ ^= support;

    if (c.k_ <= guard.max_dimension || guard.override_guard) {
        c.wd_.counts.assign(c.n_ + 1, 0);
        for_each_codeword(c.gen_, [&](const BitVector& w) { ++c.wd_.counts[w.weight()]; },
                          SpanOrder::gray, guard);
        c.wd_valid_ = true;
        c.min_distance_ = c.n_ + 1;
        for (uint32_t w = 1; w <= c.n_; ++w)
            if (c.wd_.counts[w]) { c.min_distance_ = w; break; }
    }
    return c;
}

const WeightDistribution& LinearCode::weight_distribution() const {
    if (!wd_valid_)
        throw GuardError("weight distribution not computed: dimension " +
                         std::to_string(k_) + " exceeds the enumeration guard");
    return wd_;
}

uint32_t LinearCode::min_distance() const {
    if (!wd_valid_)
        throw GuardError("min distance not computed: dimension exceeds the enumeration guard");
    return min_distance_;
}

bool LinearCode::is_self_orthogonal() const {
    for (uint32_t i = 0; i < k_; ++i)
        for (uint32_t j = i; j < k_; ++j)
            if (inner_product(gen_.row(i), gen_.row(j))) return false;
    return true;
}

bool LinearCode::is_doubly_even() const {
    if (wd_valid_) {
        for (size_t w = 0; w < wd_.counts.size(); ++w)
            if (wd_.counts[w] && w % 4 != 0) return false;
        return true;
    }
    // Basis criterion: all basis weights divisible by 4 and pairwise even
    // intersections span a doubly-even code (weight identity
    // wt(a+b) = wt(a) + wt(b) - 2|a&b|).
    for (uint32_t i = 0; i < k_; ++i) {
        if (gen_.row(i).weight() % 4 != 0) return false;
        for (uint32_t j = i + 1; j < k_; ++j)
            if (BitVector::and_weight(gen_.row(i), gen_.row(j)) % 2 != 0) return false;
    }
    return true;
}

bool LinearCode::has_zero_coordinate() const { return zero_mask_.any(); }

bool LinearCode::contains(const BitVector& word) const {
    if (word.size() != n_) throw DimensionError("contains: length mismatch");
    return in_row_space(word, gen_, pivots_);
}

LinearCode cross_section(const LinearCode& c, uint32_t j) {
    if (j >= c.length()) throw DimensionError("cross_section: coordinate out of range");
    const BitMatrix& g = c.generator();
    std::vector<BitVector> kept;
    int with_one = -1;
    for (uint32_t i = 0; i < g.rows(); ++i) {
        if (g.row(i).bit(j) && with_one < 0) {
            with_one = static_cast<int>(i);
            continue;
        }
        BitVector r = g.row(i);
        if (r.bit(j)) r ^= g.row(static_cast<uint32_t>(with_one));
        kept.push_back(std::move(r));
    }
    BitMatrix out(0, c.length() - 1);
    for (const auto& r : kept) out.append_row(r.erase_coordinate(j));
    return LinearCode::from_rows(out);
}

LinearCode extend_at(const LinearCode& c) {
    BitMatrix out(0, c.length() + 1);
    for (uint32_t i = 0; i < c.generator().rows(); ++i)
        out.append_row(c.generator().row(i).zero_extended(1));
    out.append_row(BitVector::ones(c.length() + 1));
    LinearCode e = LinearCode::from_rows(out);
    if (e.dimension() != c.dimension() + 1)
        throw ValidationError("extend_at: degenerate extension, dimension did not grow");
    return e;
}

}  // namespace pointcode
