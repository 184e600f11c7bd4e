#include <doctest.h>

#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "pointcode/design.hpp"

using namespace pointcode;

namespace {

BitMatrix k4_incidence() {
    return BitMatrix::from_strings({
        "111000",
        "100110",
        "010101",
        "001011",
    });
}

}  // namespace

TEST_SUITE("design") {
    TEST_CASE("derive_params: family members and admissibility failures") {
        DesignParams p = derive_params(4, 2, 1);
        CHECK(p.r == 3);
        CHECK(p.b == 6);
        p = derive_params(16, 6, 3);
        CHECK(p.r == 9);
        CHECK(p.b == 24);
        p = derive_params(10, 4, 2);
        CHECK(p.r == 6);
        CHECK(p.b == 15);
        CHECK_THROWS_AS(derive_params(8, 3, 1), AdmissibilityError);   // r = 7/2
        CHECK_THROWS_AS(derive_params(7, 4, 1), AdmissibilityError);   // r = 2, b = 14/4
        CHECK_THROWS_AS(derive_params(4, 4, 1), AdmissibilityError);   // not incomplete
        CHECK_THROWS_AS(derive_params(4, 2, 0), AdmissibilityError);
    }

    TEST_CASE("validate: the unique (4,2,1)-design and forced violations") {
        Design d = Design::validate(k4_incidence(), 4, 2, 1);
        CHECK(d.params().r == 3);

        // Duplicate one column over another: a pair count becomes 2.
        BitMatrix bad = k4_incidence();
        for (uint32_t i = 0; i < 4; ++i) bad.set(i, 5, bad.bit(i, 0));
        CHECK_THROWS_AS(Design::validate(bad, 4, 2, 1), ValidationError);

        // Wrong row weight reported with the offending row.
        BitMatrix short_row = k4_incidence();
        short_row.set(2, 0, true);
        try {
            Design::validate(short_row, 4, 2, 1);
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("row") != std::string::npos);
        }

        // Wrong shape.
        CHECK_THROWS_AS(Design::validate(BitMatrix(4, 5), 4, 2, 1), ValidationError);
        CHECK_THROWS_AS(Design::validate(BitMatrix(3, 6), 4, 2, 1), ValidationError);
    }

    TEST_CASE("augment appends the all-ones column") {
        Design d = Design::validate(k4_incidence(), 4, 2, 1);
        BitMatrix a = augment(d);
        CHECK(a.rows() == 4);
        CHECK(a.cols() == 7);
        for (uint32_t i = 0; i < 4; ++i) {
            CHECK(a.row(i).weight() == 4);
            CHECK(a.bit(i, 6));
        }
        for (uint32_t i = 0; i < 4; ++i)
            for (uint32_t j = i + 1; j < 4; ++j)
                CHECK(inner_product(a.row(i), a.row(j)) == 0);
        CHECK(rank(a) == 3);
    }

    TEST_CASE("mann bound") {
        Design d = Design::validate(k4_incidence(), 4, 2, 1);
        MannBound mb = mann_bound(d);
        CHECK(mb.max_multiplicity == 1);
        CHECK(mb.bound == 1);

        // (4,3,4): every 3-subset of a 4-set twice; s = 2 = b/v.
        BitMatrix doubled(4, 8);
        uint32_t col = 0;
        for (uint32_t omit = 0; omit < 4; ++omit)
            for (int copy = 0; copy < 2; ++copy, ++col)
                for (uint32_t p = 0; p < 4; ++p)
                    if (p != omit) doubled.set(p, col);
        Design dd = Design::validate(doubled, 4, 3, 4);
        MannBound mb2 = mann_bound(dd);
        CHECK(mb2.max_multiplicity == 2);
        CHECK(mb2.bound == 2);
        CHECK(mb2.max_multiplicity <= mb2.bound);
    }

    TEST_CASE("design fingerprints are invariant under point/block permutations") {
        Design d = Design::validate(k4_incidence(), 4, 2, 1);
        CanonicalForm base = design_canonical(d);
        std::mt19937 rng(131);
        for (int t = 0; t < 1000; ++t) {
            Design p = Design::validate(oracles::permuted_incidence(d, rng), 4, 2, 1);
            CHECK(design_canonical(p) == base);
        }
    }

    TEST_CASE("exhaustive (4,2,1) search: every output validates, one class") {
        std::set<std::string> classes;
        uint64_t total = oracles::enumerate_designs(derive_params(4, 2, 1), [&](const Design& d) {
            classes.insert(design_canonical(d).hex());
            MannBound mb = mann_bound(d);
            CHECK(mb.max_multiplicity <= mb.bound);
            return true;
        });
        CHECK(total >= 1);
        CHECK(classes.size() == 1);
    }

    TEST_CASE("a (16,6,3)-design found by backtracking validates and has rank 10..12") {
        auto d = oracles::find_any_design(derive_params(16, 6, 3));
        REQUIRE(d.has_value());
        uint32_t rk = rank(d->incidence());
        CHECK(rk >= 10);
        CHECK(rk <= 12);
        BitMatrix a = augment(*d);
        CHECK(rank(a) == rk);
        for (uint32_t i = 0; i < 16; ++i) CHECK(a.row(i).weight() == 10);
        for (uint32_t i = 0; i < 16; ++i)
            for (uint32_t j = i + 1; j < 16; ++j)
                CHECK(inner_product(a.row(i), a.row(j)) == 0);
        CHECK(mann_bound(*d).max_multiplicity == 1);

        LinearCode c = point_code(*d, true);
        CHECK(c.length() == 25);
        CHECK(c.dimension() == rk);
        CHECK(c.is_self_orthogonal());
        CHECK(c.min_distance() >= 4);
        CHECK_FALSE(c.has_zero_coordinate());
    }

    TEST_CASE("sorted incidence is column-sorted and row-compatible") {
        Design d = Design::validate(k4_incidence(), 4, 2, 1);
        BitMatrix s = d.sorted_incidence();
        BitMatrix st = s.transpose();
        for (uint32_t j = 0; j + 1 < st.rows(); ++j)
            CHECK((st.row(j) < st.row(j + 1) || st.row(j) == st.row(j + 1)));
        CHECK(rank(s) == rank(d.incidence()));
    }
}
