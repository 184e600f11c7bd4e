#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pointcode/canon.hpp"
#include "pointcode/design.hpp"
#include "pointcode/lincode.hpp"

namespace pointcode {

/// Target of an embedded-design search. When augmented is set the search
/// looks for v codewords of weight r+1 sharing a common 1-coordinate (the
/// appended all-ones column); otherwise for v codewords of weight r.
struct DesignSearchSpec {
    DesignParams params;
    bool augmented = false;

    static DesignSearchSpec make(uint32_t v, uint32_t block_size, uint32_t lambda,
                                 bool augmented) {
        return {derive_params(v, block_size, lambda), augmented};
    }

    uint32_t code_length() const { return params.b + (augmented ? 1u : 0u); }
    uint32_t row_weight() const { return params.r + (augmented ? 1u : 0u); }
    uint32_t pair_weight() const { return params.lambda + (augmented ? 1u : 0u); }
};

/// The v codewords realizing a design inside a code, with the coordinate
/// playing the all-ones column (augmented case) and the mapping from design
/// blocks to the remaining coordinates.
struct EmbeddingWitness {
    std::vector<BitVector> row_words;
    std::optional<uint32_t> ones_coordinate;
    std::vector<uint32_t> column_order;  // block t -> code coordinate

    BitMatrix to_incidence() const;
};

struct FoundDesign {
    Design design;
    EmbeddingWitness witness;
    CanonicalForm fingerprint;
};

/// Necessary conditions from the distance/zero-coordinate theorem plus row
/// supply: distance >= 4, no all-0 coordinate, and at least v codewords of
/// the row weight.
bool prefilter(const LinearCode& c, const DesignSearchSpec& spec);

struct SearchLimits {
    uint64_t max_nodes = 0;  // 0 = unlimited; exceeded -> BudgetError
};

/// All embeddings of (v,k,lambda)-designs in c, deduplicated to
/// non-isomorphic designs and ordered by fingerprint. Every witness is
/// re-validated before being returned. Returns empty when prefilter fails.
std::vector<FoundDesign> find_designs(const LinearCode& c, const DesignSearchSpec& spec,
                                      const SearchLimits& limits = {});

/// True iff some coordinate permutation maps sub into a subcode of super.
/// Backtracking over coordinate images, pruned by per-coordinate
/// weight-profile invariants and membership checks against super.
bool is_embedded(const LinearCode& sub, const LinearCode& super,
                 const SearchLimits& limits = {});

struct SoEnumOptions {
    uint32_t min_distance = 0;         // 0 = no distance filter
    bool forbid_zero_coordinate = false;
    std::string checkpoint_path;       // empty = no checkpointing
    uint64_t max_children = 0;         // 0 = unlimited; exceeded -> BudgetError
    uint32_t threads = 1;
};

/// One representative per equivalence class of self-orthogonal (n,k) codes
/// meeting the filters, by canonical augmentation over the dimension: a
/// child built from a parent by adjoining one generator survives iff the
/// child's canonical codimension-1 subcode is the parent. Output sorted by
/// fingerprint. Resumable via the checkpoint file.
std::vector<LinearCode> enumerate_so_codes(uint32_t n, uint32_t k,
                                           const SoEnumOptions& opt = {});

/// Same enumeration, returning every level 0..k.
std::vector<std::vector<LinearCode>> enumerate_so_codes_levels(uint32_t n, uint32_t k,
                                                               const SoEnumOptions& opt = {});

struct SdEnumOptions {
    uint32_t threads = 1;
};

/// One representative per equivalence class of binary self-dual (n, n/2)
/// codes, built length-by-length: every self-dual code of length n arises
/// from a self-dual code B of length n-2 either as B plus a duplicated
/// coordinate pair or from an odd-weight coset of B. Output sorted by
/// fingerprint.
std::vector<LinearCode> enumerate_selfdual(uint32_t n, const SdEnumOptions& opt = {});

/// One representative per equivalence class among the cross-sections of the
/// given self-dual codes: cross-sections are taken at one coordinate per
/// Aut-orbit and deduplicated by canonical form. Applied to the full
/// self-dual (n, n/2) classification this yields every maximal
/// self-orthogonal (n-1, n/2 - 1) class. Output sorted by fingerprint.
std::vector<LinearCode> cross_section_classes(const std::vector<LinearCode>& selfdual);

struct ClosureOptions {
    /// Max-dimension filtered codes to hop into; enumerated on demand when
    /// absent.
    std::optional<std::vector<LinearCode>> targets;
    SoEnumOptions enum_options;
    SearchLimits limits;
};

struct ClosureEdge {
    enum class Kind { generates, contains, embeds };
    Kind kind;
    std::string from;  // fingerprint hex
    std::string to;
};

struct ClosureResult {
    std::vector<std::pair<std::string, Design>> designs;    // fingerprint-sorted
    std::vector<std::pair<std::string, LinearCode>> codes;  // fingerprint-sorted
    std::vector<ClosureEdge> edges;
};

/// Fixpoint of: point code of every known design; find_designs in every
/// known code; embedding hops from lower-dimension codes into the
/// max-dimension filtered codes. Seed must lie in the (6l-2, 2l, l) family.
ClosureResult closure(const Design& seed, const ClosureOptions& opt = {});

}  // namespace pointcode
