#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "pointcode/design.hpp"
#include "pointcode/lincode.hpp"

using namespace pointcode;

namespace {

// The unique (4,2,1)-design: all 2-subsets of a 4-set as blocks.
Design k4_design() {
    BitMatrix inc = BitMatrix::from_strings({
        "111000",
        "100110",
        "010101",
        "001011",
    });
    return Design::validate(inc, 4, 2, 1);
}

}  // namespace

TEST_SUITE("lincode") {
    TEST_CASE("point code of the unique (4,2,1)-design is the (7,3) code with W[4]=7") {
        LinearCode c = point_code(k4_design(), true);
        CHECK(c.length() == 7);
        CHECK(c.dimension() == 3);
        CHECK(c.is_self_orthogonal());
        const WeightDistribution& wd = c.weight_distribution();
        CHECK(wd.at(0) == 1);
        CHECK(wd.at(4) == 7);
        CHECK(wd.total() == 8);
        CHECK(c.min_distance() == 4);
        CHECK(c.is_doubly_even());
        CHECK_FALSE(c.has_zero_coordinate());
        CHECK(wd.to_sparse() == "0:1,4:7");
        CHECK(WeightDistribution::from_sparse("0:1,4:7", 7) == wd);
    }

    TEST_CASE("rank collapse and the zero code") {
        LinearCode dup = LinearCode::from_rows(BitMatrix::from_strings({"110", "110"}));
        CHECK(dup.length() == 3);
        CHECK(dup.dimension() == 1);

        LinearCode zero = LinearCode::from_rows(BitMatrix(0, 7));
        CHECK(zero.dimension() == 0);
        CHECK(zero.weight_distribution().at(0) == 1);
        CHECK(zero.weight_distribution().total() == 1);
        CHECK(zero.min_distance() == 8);  // sentinel n+1
    }

    TEST_CASE("self-orthogonality from generator rows") {
        CHECK_FALSE(LinearCode::from_rows(BitMatrix::from_strings({"1100000", "1010000"}))
                        .is_self_orthogonal());
        CHECK(LinearCode::from_rows(BitMatrix::from_strings({"1111000", "0011110"}))
                  .is_self_orthogonal());
    }

    TEST_CASE("doubly-even: enumeration and basis criterion agree") {
        CHECK_FALSE(LinearCode::from_rows(BitMatrix::from_strings({"111111000"}))
                        .is_doubly_even());
        std::mt19937 rng(67);
        for (int t = 0; t < 60; ++t) {
            auto c = oracles::random_so_code(10 + rng() % 4, 1 + rng() % 4, rng);
            if (!c) continue;
            bool by_enum = c->is_doubly_even();
            bool by_basis = true;
            for (uint32_t i = 0; i < c->generator().rows() && by_basis; ++i) {
                if (c->generator().row(i).weight() % 4 != 0) by_basis = false;
                for (uint32_t j = i + 1; j < c->generator().rows() && by_basis; ++j)
                    if (BitVector::and_weight(c->generator().row(i), c->generator().row(j)) % 2)
                        by_basis = false;
            }
            CHECK(by_enum == by_basis);
        }
    }

    TEST_CASE("zero coordinates") {
        CHECK_FALSE(LinearCode::from_rows(BitMatrix::from_strings({"110", "011"}))
                        .has_zero_coordinate());
        LinearCode c = LinearCode::from_rows(BitMatrix::from_strings({"1100", "0110"}));
        CHECK(c.has_zero_coordinate());
        CHECK(c.zero_coordinate_mask().bit(3));
        CHECK(c.zero_coordinate_mask().weight() == 1);
    }

    TEST_CASE("cross-section and extension") {
        // Full space of length 2, cross-sectioned at coordinate 1.
        LinearCode full2 = LinearCode::from_rows(BitMatrix::from_strings({"10", "01"}));
        LinearCode cs = cross_section(full2, 1);
        CHECK(cs.length() == 1);
        CHECK(cs.dimension() == 1);

        LinearCode zero5 = LinearCode::from_rows(BitMatrix(0, 5));
        LinearCode zcs = cross_section(zero5, 2);
        CHECK(zcs.length() == 4);
        CHECK(zcs.dimension() == 0);

        LinearCode zero1 = LinearCode::from_rows(BitMatrix(0, 1));
        LinearCode ext = extend_at(zero1);
        CHECK(ext.length() == 2);
        CHECK(ext.dimension() == 1);
        CHECK(ext.generator().row(0).to_string() == "11");
    }

    TEST_CASE("cross_section(extend_at(c), last) == c exactly") {
        std::mt19937 rng(71);
        int done = 0;
        for (int t = 0; t < 100 && done < 40; ++t) {
            uint32_t n = 3 + rng() % 12;
            uint32_t k = 1 + rng() % 4;
            auto c = oracles::random_so_code(n, k, rng);
            if (!c) continue;
            ++done;
            LinearCode back = cross_section(extend_at(*c), n);
            CHECK(back == *c);
            CHECK(back.generator() == c->generator());
        }
        CHECK(done > 10);
    }

    TEST_CASE("cross-sections of self-orthogonal codes stay self-orthogonal") {
        std::mt19937 rng(73);
        for (int t = 0; t < 40; ++t) {
            auto c = oracles::random_so_code(9 + rng() % 6, 1 + rng() % 4, rng);
            if (!c) continue;
            for (uint32_t j = 0; j < c->length(); ++j)
                CHECK(cross_section(*c, j).is_self_orthogonal());
        }
    }

    TEST_CASE("weight distribution sums to 2^k and is permutation invariant") {
        std::mt19937 rng(79);
        LinearCode c = point_code(k4_design(), true);
        for (int t = 0; t < 100; ++t) {
            LinearCode p = oracles::permuted_code(c, rng);
            CHECK(p.weight_distribution() == c.weight_distribution());
        }
        for (int t = 0; t < 30; ++t) {
            auto r = oracles::random_so_code(8 + rng() % 8, 1 + rng() % 5, rng);
            if (!r) continue;
            CHECK(r->weight_distribution().total() == (uint64_t(1) << r->dimension()));
            if (r->is_self_orthogonal()) CHECK(r->weight_distribution().all_even());
        }
    }

    TEST_CASE("min distance equals the brute-force span minimum") {
        std::mt19937 rng(83);
        for (int t = 0; t < 50; ++t) {
            uint32_t n = 4 + rng() % 13;
            uint32_t rows = 1 + rng() % 6;
            BitMatrix m(rows, n);
            for (uint32_t i = 0; i < rows; ++i)
                for (uint32_t j = 0; j < n; ++j)
                    if (rng() & 1) m.set(i, j);
            LinearCode c = LinearCode::from_rows(m);
            uint32_t best = n + 1;
            for_each_codeword(c.generator(), [&](const BitVector& w) {
                if (w.any()) best = std::min(best, w.weight());
            });
            CHECK(c.min_distance() == best);
        }
    }

    TEST_CASE("the (7,3) W[4]=7 code sits inside its (7,4) dual") {
        LinearCode c = point_code(k4_design(), true);
        BitMatrix d = dual(c.generator());
        CHECK(d.rows() == 4);
        LinearCode dual_code = LinearCode::from_rows(d);
        for_each_codeword(c.generator(), [&](const BitVector& w) {
            CHECK(dual_code.contains(w));
        });
    }

    TEST_CASE("membership") {
        LinearCode c = LinearCode::from_rows(BitMatrix::from_strings({"1111000", "0011110"}));
        CHECK(c.contains(BitVector::from_string("1100110")));
        CHECK(c.contains(BitVector(7)));
        CHECK_FALSE(c.contains(BitVector::from_string("1000000")));
    }

    TEST_CASE("guard: dimension above the default is refused but overridable") {
        BitMatrix big = BitMatrix::identity(26);
        CHECK_THROWS_AS(LinearCode::from_rows(big).weight_distribution(), GuardError);
        SpanGuard g;
        g.max_dimension = 26;
        LinearCode c = LinearCode::from_rows(big, g);
        CHECK(c.weight_distribution().total() == (uint64_t(1) << 26));
    }
}
