#include <doctest.h>

#include <numeric>
#include <random>

#include "../support/oracles.hpp"
#include "pointcode/canon.hpp"
#include "pointcode/design.hpp"

using namespace pointcode;

namespace {

Design k4_design() {
    BitMatrix inc = BitMatrix::from_strings({
        "111000",
        "100110",
        "010101",
        "001011",
    });
    return Design::validate(inc, 4, 2, 1);
}

BipartiteIncidence relabel(const BipartiteIncidence& g, std::mt19937& rng) {
    std::vector<uint32_t> lp(g.left), rp(g.right);
    std::iota(lp.begin(), lp.end(), 0u);
    std::iota(rp.begin(), rp.end(), 0u);
    std::shuffle(lp.begin(), lp.end(), rng);
    std::shuffle(rp.begin(), rp.end(), rng);
    BipartiteIncidence out;
    out.left = g.left;
    out.right = g.right;
    out.adjacency = BitMatrix(g.left, g.right);
    for (uint32_t i = 0; i < g.left; ++i)
        for (uint32_t j = 0; j < g.right; ++j)
            if (g.adjacency.bit(i, j)) out.adjacency.set(lp[i], rp[j]);
    for (const auto& cell : g.color_classes) {
        std::vector<uint32_t> mapped;
        for (uint32_t v : cell)
            mapped.push_back(v < g.left ? lp[v] : g.left + rp[v - g.left]);
        std::sort(mapped.begin(), mapped.end());
        out.color_classes.push_back(std::move(mapped));
    }
    return out;
}

}  // namespace

TEST_SUITE("canon") {
    TEST_CASE("single left vertex joined to all right vertices has a fixed form") {
        BipartiteIncidence g;
        g.left = 1;
        g.right = 4;
        g.adjacency = BitMatrix::from_strings({"1111"});
        g.color_classes = {{0}, {1, 2, 3, 4}};
        CanonicalForm f1 = canonical_form(g);
        CanonicalForm f2 = canonical_form(g);
        CHECK(f1 == f2);
        CHECK(f1.automorphism_order == 24);  // S4 on the right side
    }

    TEST_CASE("code graph shape: one left vertex per nonzero codeword") {
        LinearCode c = point_code(k4_design(), true);
        BipartiteIncidence g = code_to_graph(c);
        CHECK(g.left == 7);   // 2^3 - 1 nonzero codewords
        CHECK(g.right == 7);
        CHECK(g.color_classes.size() == 2);  // one weight class + coordinates
    }

    TEST_CASE("canonical form is invariant under 1000 random relabelings") {
        LinearCode c = point_code(k4_design(), true);
        BipartiteIncidence g = code_to_graph(c);
        CanonicalForm base = canonical_form(g);
        std::mt19937 rng(97);
        for (int t = 0; t < 1000; ++t) {
            CanonicalForm f = canonical_form(relabel(g, rng));
            CHECK(f == base);
        }
    }

    TEST_CASE("code equivalence under random coordinate permutations") {
        std::mt19937 rng(101);
        LinearCode c = point_code(k4_design(), true);
        for (int t = 0; t < 50; ++t) CHECK(are_equivalent(c, oracles::permuted_code(c, rng)));

        // Distinct weight distributions reject without canonization.
        LinearCode other =
            LinearCode::from_rows(BitMatrix::from_strings({"1100000", "0011000", "0000110"}));
        CHECK(other.is_self_orthogonal());
        CHECK_FALSE(are_equivalent(c, other));
    }

    TEST_CASE("agreement with brute-force permutation search on all (7,<=3) SO codes") {
        std::mt19937 rng(103);
        for (uint32_t k = 1; k <= 3; ++k) {
            auto [classes, subspaces] = oracles::brute_so_classes(7, k);
            (void)subspaces;
            // One stored code per class, rebuilt from the enumeration.
            std::vector<LinearCode> reps;
            {
                std::set<std::string> seen;
                auto all = enumerate_so_codes(7, k);
                for (const LinearCode& c : all) reps.push_back(c);
                for (const LinearCode& c : reps) seen.insert(code_canonical(c).hex());
                CHECK(seen == classes);
            }
            for (size_t i = 0; i < reps.size(); ++i)
                for (size_t j = i; j < reps.size(); ++j) {
                    bool fast = are_equivalent(reps[i], reps[j]);
                    bool slow = oracles::brute_equivalent(reps[i], reps[j]);
                    CHECK(fast == slow);
                }
            // Permuted copies stay equivalent to their source only.
            for (const LinearCode& c : reps) {
                LinearCode p = oracles::permuted_code(c, rng);
                for (const LinearCode& d : reps)
                    CHECK(are_equivalent(p, d) == oracles::brute_equivalent(c, d));
            }
        }
    }

    TEST_CASE("automorphism order matches exhaustive counting") {
        LinearCode simplex = point_code(k4_design(), true);
        CanonResult r = canonize(code_to_graph(simplex));
        CHECK(r.form.automorphism_order == oracles::brute_automorphism_count(simplex));

        std::mt19937 rng(107);
        int done = 0;
        for (int t = 0; t < 40 && done < 12; ++t) {
            auto c = oracles::random_so_code(6 + rng() % 3, 1 + rng() % 3, rng);
            if (!c) continue;
            ++done;
            CanonResult rr = canonize(code_to_graph(*c));
            CHECK(rr.form.automorphism_order == oracles::brute_automorphism_count(*c));
        }
        CHECK(done >= 6);
    }

    TEST_CASE("perm_group_order on generators of S5") {
        std::vector<std::vector<uint32_t>> gens = {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}};
        CHECK(perm_group_order(gens, 5) == 120);
        CHECK(perm_group_order({}, 5) == 1);
        CHECK(perm_group_order({{0, 1, 2, 3, 4}}, 5) == 1);
    }

    TEST_CASE("empty-left graph: the canonizer discovers the full symmetric group") {
        LinearCode zero = LinearCode::from_rows(BitMatrix(0, 6));
        CanonResult r = canonize(code_to_graph(zero));
        CHECK(r.form.automorphism_order == 720);
    }

    TEST_CASE("restricted left vertex set spans and stays equivalence-correct") {
        std::mt19937 rng(109);
        for (int t = 0; t < 10; ++t) {
            uint32_t n = 18, k = 17;
            BitMatrix m(k, n);
            for (uint32_t i = 0; i < k; ++i)
                for (uint32_t j = 0; j < n; ++j)
                    if (rng() & 1) m.set(i, j);
            LinearCode c = LinearCode::from_rows(m);
            if (c.dimension() <= 16) continue;
            BipartiteIncidence g = code_to_graph(c, false);
            CHECK(g.left < (uint32_t(1) << 17));
            LinearCode p = oracles::permuted_code(c, rng);
            CHECK(canonical_form(code_to_graph(c, false)) ==
                  canonical_form(code_to_graph(p, false)));
        }
    }

    TEST_CASE("equivalence is an equivalence relation on a mixed fixture set") {
        std::mt19937 rng(113);
        std::vector<LinearCode> fixtures;
        for (const LinearCode& c : enumerate_so_codes(7, 3)) {
            fixtures.push_back(c);
            fixtures.push_back(oracles::permuted_code(c, rng));
        }
        for (size_t i = 0; i < fixtures.size(); ++i) CHECK(are_equivalent(fixtures[i], fixtures[i]));
        for (size_t i = 0; i < fixtures.size(); ++i)
            for (size_t j = 0; j < fixtures.size(); ++j)
                CHECK(are_equivalent(fixtures[i], fixtures[j]) ==
                      are_equivalent(fixtures[j], fixtures[i]));
        for (size_t i = 0; i < fixtures.size(); ++i)
            for (size_t j = 0; j < fixtures.size(); ++j)
                for (size_t l = 0; l < fixtures.size(); ++l)
                    if (are_equivalent(fixtures[i], fixtures[j]) &&
                        are_equivalent(fixtures[j], fixtures[l]))
                        CHECK(are_equivalent(fixtures[i], fixtures[l]));
    }
}
