#pragma once

#include <cstdint>

#include "pointcode/bitmat.hpp"
#include "pointcode/canon.hpp"
#include "pointcode/lincode.hpp"

namespace pointcode {

struct DesignParams {
    uint32_t v = 0;
    uint32_t b = 0;
    uint32_t r = 0;
    uint32_t block_size = 0;  // k
    uint32_t lambda = 0;

    bool operator==(const DesignParams& o) const = default;
};

/// Fill in r and b from (v, k, lambda) via r(k-1) = lambda(v-1) and rv = bk.
/// Throws AdmissibilityError naming the violated relation when either
/// quotient is not integral.
DesignParams derive_params(uint32_t v, uint32_t block_size, uint32_t lambda);

/// A validated (v,b,r,k,lambda) BIBD with its v x b incidence matrix, rows =
/// points. The external column order is preserved for round-tripping;
/// normalized (column-sorted) views are derived on demand. Immutable after
/// validation.
class Design {
public:
    Design() = default;  // empty sentinel for containers

    static Design validate(const BitMatrix& candidate, uint32_t v, uint32_t block_size,
                           uint32_t lambda);

    const DesignParams& params() const { return p_; }
    const BitMatrix& incidence() const { return inc_; }

    /// Columns in ascending bit-string order: the internal normal form used
    /// for repeated-block detection and hashing.
    BitMatrix sorted_incidence() const;

private:
    DesignParams p_;
    BitMatrix inc_;
};

/// Append the all-ones column: the v x (b+1) augmented incidence matrix.
BitMatrix augment(const Design& d);

struct MannBound {
    uint32_t max_multiplicity = 0;  // s: largest number of identical blocks
    uint32_t bound = 0;             // floor(b/v); Mann forces s <= b/v
};

/// Largest block multiplicity together with the b/v bound. Requires r >
/// lambda (always true for incomplete designs, checked anyway).
MannBound mann_bound(const Design& d);

/// Fingerprint invariant under independent point and block permutations:
/// canonical form of the two-colored point/block incidence graph.
CanonicalForm design_canonical(const Design& d);

/// The code spanned by the (optionally augmented) incidence rows.
LinearCode point_code(const Design& d, bool augmented);

/// The family rule used by the pipelines: augment exactly when lambda is odd
/// (making row weights and pairwise intersections even).
inline bool augment_for_lambda(uint32_t lambda) { return lambda % 2 == 1; }

}  // namespace pointcode
