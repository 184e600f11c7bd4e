#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pointcode/bitmat.hpp"

namespace pointcode {

/// counts[i] = number of codewords of weight i; counts.size() == n+1.
struct WeightDistribution {
    std::vector<uint64_t> counts;

    uint64_t at(uint32_t w) const { return w < counts.size() ? counts[w] : 0; }
    uint64_t total() const;
    bool all_even() const;

    /// Sparse "w:count" pairs joined by commas, ascending w, zeros omitted,
    /// e.g. "0:1,4:7".
    std::string to_sparse() const;
    static WeightDistribution from_sparse(const std::string& s, uint32_t n);

    bool operator==(const WeightDistribution& o) const { return counts == o.counts; }
    bool operator<(const WeightDistribution& o) const { return counts < o.counts; }
};

/// A binary (n,k) linear code held as its rref generator matrix. Two
/// LinearCode values with equal generators are the identical code (same
/// coordinate labeling); equivalence lives in canon.hpp. The weight
/// distribution, minimum distance and zero-coordinate mask are computed at
/// construction whenever k fits under the enumeration guard; values are
/// immutable afterwards and safe to share across threads.
class LinearCode {
public:
    LinearCode() = default;  // empty sentinel for containers

    static LinearCode from_rows(const BitMatrix& rows, SpanGuard guard = {});

    uint32_t length() const { return n_; }
    uint32_t dimension() const { return k_; }
    const BitMatrix& generator() const { return gen_; }
    const std::vector<uint32_t>& pivots() const { return pivots_; }

    const WeightDistribution& weight_distribution() const;

    /// Smallest positive weight present; n+1 for the zero code.
    uint32_t min_distance() const;

    bool is_self_orthogonal() const;
    bool is_doubly_even() const;
    bool has_zero_coordinate() const;

    /// Coordinates that are zero in every codeword.
    const BitVector& zero_coordinate_mask() const { return zero_mask_; }

    bool contains(const BitVector& word) const;

    bool operator==(const LinearCode& o) const { return n_ == o.n_ && gen_ == o.gen_; }
    bool operator<(const LinearCode& o) const { return gen_ < o.gen_; }

private:
    uint32_t n_ = 0, k_ = 0;
    BitMatrix gen_;
    std::vector<uint32_t> pivots_;
    BitVector zero_mask_;
    WeightDistribution wd_;
    bool wd_valid_ = false;
    uint32_t min_distance_ = 0;
};

/// Keep the codewords that are 0 at coordinate j, then delete the
/// coordinate. Dimension drops by one iff some codeword is 1 at j.
LinearCode cross_section(const LinearCode& c, uint32_t j);

/// Add a new last coordinate, pad old codewords with 0 there, and adjoin the
/// all-ones word of the new length; always an (n+1, k+1) code. The inverse of
/// cross_section at the new coordinate.
LinearCode extend_at(const LinearCode& c);

}  // namespace pointcode
