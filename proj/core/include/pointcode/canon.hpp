#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pointcode/bitmat.hpp"
#include "pointcode/lincode.hpp"

namespace pointcode {

/// Two-colored bipartite incidence graph. Vertices 0..left-1 are the left
/// side (codewords or points), left..left+right-1 the right side
/// (coordinates or blocks). color_classes is an ordered initial partition of
/// all vertices; a cell never mixes the two sides, which is what forbids
/// side-swapping isomorphisms.
struct BipartiteIncidence {
    uint32_t left = 0;
    uint32_t right = 0;
    BitMatrix adjacency;  // left rows x right cols
    std::vector<std::vector<uint32_t>> color_classes;
};

/// Totally ordered fingerprint of a graph under color-respecting
/// relabeling: equal exactly for isomorphic inputs. bytes holds the
/// canonical adjacency bitmap (left rows over right columns, canonical
/// order) prefixed by the side sizes and initial cell sizes.
struct CanonicalForm {
    std::vector<uint8_t> bytes;
    uint64_t automorphism_order = 0;  // saturates at UINT64_MAX

    std::string hex() const;  // sha256 of bytes, lowercase hex

    bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
    bool operator!=(const CanonicalForm& o) const { return bytes != o.bytes; }
    bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

struct CanonResult {
    CanonicalForm form;
    /// Automorphism generators as full vertex permutations. They generate
    /// the full color-respecting automorphism group.
    std::vector<std::vector<uint32_t>> generators;
    /// The same generators restricted to the right side, as permutations of
    /// 0..right-1 (for codes: the coordinate action).
    std::vector<std::vector<uint32_t>> coordinate_generators;
};

/// The codeword/coordinate graph: one left vertex per nonzero codeword,
/// one right vertex per coordinate, an edge where the codeword has a 1.
/// Left vertices are
/// colored by codeword weight. With use_all_codewords = false the left side
/// is restricted to the codewords of the smallest set of weights that spans
/// the code (an equivalence-invariant set), which keeps the graph small for
/// dimensions above full_guard.
BipartiteIncidence code_to_graph(const LinearCode& c, bool use_all_codewords = true,
                                 uint32_t full_guard = 16);

CanonResult canonize(const BipartiteIncidence& g);

CanonicalForm canonical_form(const BipartiteIncidence& g);

/// Canonical form of a code's graph; picks the full construction for
/// dimension <= 16 and the spanning-weight restriction above that.
CanonicalForm code_canonical(const LinearCode& c);

/// Code equivalence: permutation of coordinates. Rejects on (n,k) or weight
/// distribution mismatch before canonizing.
bool are_equivalent(const LinearCode& a, const LinearCode& b);

/// Order of the permutation group generated by gens on 0..npoints-1
/// (Schreier-Sims); saturates at UINT64_MAX.
uint64_t perm_group_order(const std::vector<std::vector<uint32_t>>& gens, uint32_t npoints);

}  // namespace pointcode
