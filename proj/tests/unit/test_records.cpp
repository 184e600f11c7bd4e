#include <doctest.h>

#include <sstream>

#include "pointcode/records.hpp"

using namespace pointcode;

TEST_SUITE("records") {
    TEST_CASE("design records: comments, blank separators, per-record errors") {
        std::istringstream in(
            "# the unique (4,2,1)-design\n"
            "4 6 3 2 1\n"
            "111000\n"
            "100110\n"
            "# a comment inside the record\n"
            "010101\n"
            "001011\n"
            "\n"
            "4 6 3 2 1\n"
            "111000\n"
            "100110\n"
            "\n"
            "not a header\n"
            "\n"
            "4 6 3 2 1\n"
            "111000\n"
            "100110\n"
            "010101\n"
            "00101x\n");
        DesignReadResult res = read_design_records(in);
        REQUIRE(res.records.size() == 1);
        CHECK(res.records[0].v == 4);
        CHECK(res.records[0].incidence.rows() == 4);
        REQUIRE(res.issues.size() == 3);
        CHECK(res.issues[0].line == 9);   // truncated record header line
        CHECK(res.issues[1].line == 13);  // malformed header
        CHECK(res.issues[2].line == 15);  // bad character, reported per record
    }

    TEST_CASE("code records round trip through write and read") {
        std::istringstream in(
            "7 3\n"
            "1101000\n"
            "0110100\n"
            "0011010\n");
        CodeReadResult res = read_code_records(in);
        REQUIRE(res.records.size() == 1);
        LinearCode c = LinearCode::from_rows(res.records[0].rows);
        std::ostringstream out;
        write_code_record(out, c);
        std::istringstream back(out.str());
        CodeReadResult res2 = read_code_records(back);
        REQUIRE(res2.records.size() == 1);
        CHECK(LinearCode::from_rows(res2.records[0].rows) == c);
    }

    TEST_CASE("design writer emits the header and preserves column order") {
        BitMatrix inc = BitMatrix::from_strings({
            "111000",
            "100110",
            "010101",
            "001011",
        });
        Design d = Design::validate(inc, 4, 2, 1);
        std::ostringstream out;
        write_design_record(out, d);
        std::istringstream back(out.str());
        DesignReadResult res = read_design_records(back);
        REQUIRE(res.records.size() == 1);
        CHECK(res.records[0].incidence == inc);
        CHECK(res.records[0].r == 3);
    }

    TEST_CASE("row width errors carry line numbers") {
        std::istringstream in(
            "2 2\n"
            "110\n"
            "01\n");
        CodeReadResult res = read_code_records(in);
        CHECK(res.records.empty());
        REQUIRE(res.issues.size() == 1);
        CHECK(res.issues[0].message.find("line 2") != std::string::npos);
    }
}
