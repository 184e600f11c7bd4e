#include <doctest.h>

#include <random>
#include <set>

#include "../support/oracles.hpp"
#include "pointcode/bitmat.hpp"
#include "pointcode/bitvec.hpp"

using namespace pointcode;

TEST_SUITE("gf2") {
    TEST_CASE("bitvector string round trip and ordering") {
        BitVector v = BitVector::from_string("0100110");
        CHECK(v.size() == 7);
        CHECK(v.weight() == 3);
        CHECK(v.to_string() == "0100110");
        CHECK(v.bit(1));
        CHECK_FALSE(v.bit(0));
        CHECK(v.lowest_set() == 1);
        CHECK_THROWS_AS(BitVector::from_string("01x"), ParseError);

        std::mt19937 rng(7);
        for (int t = 0; t < 200; ++t) {
            uint32_t n = 1 + rng() % 90;
            std::string a(n, '0'), b(n, '0');
            for (auto& ch : a) ch = (rng() & 1) ? '1' : '0';
            for (auto& ch : b) ch = (rng() & 1) ? '1' : '0';
            CHECK((BitVector::from_string(a) < BitVector::from_string(b)) == (a < b));
        }
    }

    TEST_CASE("inner product matches the naive coordinate loop") {
        CHECK(inner_product(BitVector::from_string("0000"),
                            BitVector::from_string("1111")) == 0);
        CHECK(inner_product(BitVector::from_string("1100000"),
                            BitVector::from_string("1010000")) == 1);
        CHECK(inner_product(BitVector::from_string("1111000"),
                            BitVector::from_string("0011110")) == 0);
        CHECK_THROWS_AS(inner_product(BitVector(3), BitVector(4)), DimensionError);

        std::mt19937 rng(11);
        for (int t = 0; t < 500; ++t) {
            uint32_t n = 1 + rng() % 130;
            BitVector a(n), b(n);
            for (uint32_t i = 0; i < n; ++i) {
                if (rng() & 1) a.set(i);
                if (rng() & 1) b.set(i);
            }
            CHECK(inner_product(a, b) == oracles::naive_inner_product(a, b));
        }
    }

    TEST_CASE("rref: identity, zero matrix, dependent rows") {
        BitMatrix id = BitMatrix::identity(3);
        RrefResult r = rref(id);
        CHECK(r.matrix == id);
        CHECK(r.pivots == std::vector<uint32_t>{0, 1, 2});

        RrefResult z = rref(BitMatrix(4, 6));
        CHECK(z.matrix.rows() == 0);
        CHECK(z.matrix.cols() == 6);
        CHECK(z.pivots.empty());

        BitMatrix m = BitMatrix::from_strings({"1111000", "0011110", "1100110"});
        RrefResult rr = rref(m);
        CHECK(rr.matrix.rows() == 2);
        CHECK(rr.pivots == std::vector<uint32_t>{0, 2});
        CHECK(rank(m) == 2);
    }

    TEST_CASE("rref is idempotent on random matrices") {
        std::mt19937 rng(23);
        for (int t = 0; t < 100; ++t) {
            uint32_t rows = 1 + rng() % 30, cols = 1 + rng() % 30;
            BitMatrix m(rows, cols);
            for (uint32_t i = 0; i < rows; ++i)
                for (uint32_t j = 0; j < cols; ++j)
                    if (rng() & 1) m.set(i, j);
            RrefResult r1 = rref(m);
            RrefResult r2 = rref(r1.matrix);
            CHECK(r1.matrix == r2.matrix);
            CHECK(r1.pivots == r2.pivots);
        }
    }

    TEST_CASE("rank equals transpose rank and the brute-force span rank") {
        std::mt19937 rng(31);
        for (int t = 0; t < 60; ++t) {
            uint32_t rows = 1 + rng() % 11, cols = 1 + rng() % 14;
            BitMatrix m(rows, cols);
            for (uint32_t i = 0; i < rows; ++i)
                for (uint32_t j = 0; j < cols; ++j)
                    if (rng() & 1) m.set(i, j);
            uint32_t rk = rank(m);
            CHECK(rk == rank(m.transpose()));
            CHECK(rk == oracles::brute_rank(m));
        }
    }

    TEST_CASE("dual: dimension law and orthogonality") {
        BitMatrix zero_code(0, 5);
        CHECK(dual(zero_code).rows() == 5);
        CHECK(dual(BitMatrix::identity(5)).rows() == 0);

        std::mt19937 rng(41);
        for (int t = 0; t < 80; ++t) {
            uint32_t rows = 1 + rng() % 8, cols = 1 + rng() % 20;
            BitMatrix m(rows, cols);
            for (uint32_t i = 0; i < rows; ++i)
                for (uint32_t j = 0; j < cols; ++j)
                    if (rng() & 1) m.set(i, j);
            BitMatrix d = dual(m);
            CHECK(d.rows() + rank(m) == cols);
            for (uint32_t i = 0; i < m.rows(); ++i)
                for (uint32_t j = 0; j < d.rows(); ++j)
                    CHECK(inner_product(m.row(i), d.row(j)) == 0);
        }
    }

    TEST_CASE("enumerate_span: examples, orders, cardinality, closure") {
        std::vector<BitVector> words;
        for_each_codeword(BitMatrix(0, 7), [&](const BitVector& w) { words.push_back(w); });
        REQUIRE(words.size() == 1);
        CHECK(words[0].to_string() == "0000000");

        BitMatrix basis = BitMatrix::from_strings({"1111000", "0011110"});
        std::set<std::string> span;
        for_each_codeword(basis, [&](const BitVector& w) { span.insert(w.to_string()); });
        CHECK(span == std::set<std::string>{"0000000", "1111000", "0011110", "1100110"});

        std::set<std::string> lex;
        for_each_codeword(basis, [&](const BitVector& w) { lex.insert(w.to_string()); },
                          SpanOrder::lexicographic);
        CHECK(lex == span);

        std::mt19937 rng(53);
        BitMatrix big(0, 20);
        {
            BitMatrix raw(8, 20);
            for (uint32_t i = 0; i < 8; ++i)
                for (uint32_t j = 0; j < 20; ++j)
                    if (rng() & 1) raw.set(i, j);
            big = rref(raw).matrix;
        }
        std::set<std::string> all;
        for_each_codeword(big, [&](const BitVector& w) { all.insert(w.to_string()); });
        CHECK(all.size() == (size_t(1) << big.rows()));

        // XOR closure spot check on a small span.
        std::vector<BitVector> ws(span.size(), BitVector(7));
        {
            size_t i = 0;
            for (const auto& s : span) ws[i++] = BitVector::from_string(s);
        }
        for (const auto& a : ws)
            for (const auto& b : ws)
                CHECK(span.count((a ^ b).to_string()) == 1);
    }

    TEST_CASE("enumerate_span guard") {
        BitMatrix wide = rref(BitMatrix::identity(30)).matrix;
        CHECK_THROWS_AS(for_each_codeword(wide, [](const BitVector&) {}), GuardError);
        uint64_t count = 0;
        SpanGuard g;
        g.max_dimension = 30;
        for_each_codeword(BitMatrix::identity(25), [&](const BitVector&) { ++count; },
                          SpanOrder::gray, g);
        CHECK(count == (uint64_t(1) << 25));
    }
}
