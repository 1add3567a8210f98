#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "qds/io.hpp"

using namespace qds;

TEST_CASE("code spec parsing") {
    SECTION("stabilizer spec with SM matrix") {
        std::istringstream in(
            "# comment\n"
            "n 2\nk 1\nr 1\n"
            "H\n"
            "11\n"
            "A\n"
            "1\n");
        CodeSpec spec = parse_code_spec(in);
        CHECK(spec.n == 2);
        CHECK(spec.k == 1);
        CHECK(spec.r == 1);
        REQUIRE(spec.h_rows.size() == 1);
        DSCode code = spec.to_ds_code();
        CHECK(code.n() == 2);
        CHECK(code.ds_rows() == 2);
    }
    SECTION("CSS spec") {
        std::istringstream in("n 3\nk 1\nr 0\ncss\nhprime\n110\n011\n");
        CodeSpec spec = parse_code_spec(in);
        CHECK(spec.css);
        auto rows = spec.to_hprime();
        REQUIRE(rows.size() == 2);
        CHECK(rows[0] == 0b011);  // string index = bit index
        CHECK(rows[1] == 0b110);
        CHECK_THROWS_AS(spec.to_ds_code(), std::invalid_argument);
    }
    SECTION("malformed inputs") {
        std::istringstream missing("k 1\n");
        CHECK_THROWS_AS(parse_code_spec(missing), std::invalid_argument);
        std::istringstream stray("n 3\njunk\n");
        CHECK_THROWS_AS(parse_code_spec(stray), std::invalid_argument);
        std::istringstream novalue("n\n");
        CHECK_THROWS_AS(parse_code_spec(novalue), std::invalid_argument);
    }
    SECTION("row count and length validation") {
        std::istringstream wrong("n 2\nk 1\nr 0\nH\n11\n1w\n");
        CHECK_THROWS_AS(parse_code_spec(wrong).to_ds_code(), std::invalid_argument);
        std::istringstream shortrow("n 3\nk 2\nr 0\nH\n11\n");
        CHECK_THROWS_AS(parse_code_spec(shortrow).to_ds_code(), std::invalid_argument);
    }
}

TEST_CASE("code spec round trip") {
    DSCode code(simplex_css(3).stabilizers(), SMCode::repetition(6, 2));
    CodeSpec spec = spec_from_code(code);
    std::ostringstream out;
    write_code_spec(out, spec);
    std::istringstream in(out.str());
    CodeSpec back = parse_code_spec(in);
    DSCode code2 = back.to_ds_code();
    CHECK(code2.n() == code.n());
    CHECK(code2.k() == code.k());
    CHECK(code2.r() == code.r());
    for (int i = 0; i < code.m(); ++i) CHECK(code2.H().row(i) == code.H().row(i));
    for (int i = 0; i < code.m(); ++i)
        for (int j = 0; j < code.r(); ++j) CHECK(code2.A().at(i, j) == code.A().at(i, j));
}

TEST_CASE("enumerator CSV round trip") {
    DSCode code(simplex_css(3).stabilizers(), SMCode::empty(6));
    for (const SplitWeightEnumerator& B : {enumerate_code(code), enumerate_dual(code)}) {
        std::ostringstream out;
        write_enumerator_csv(out, B);
        std::istringstream in(out.str());
        SplitWeightEnumerator back = read_enumerator_csv(in);
        CHECK(back == B);
        CHECK(back.side == B.side);
    }
    SECTION("bad header rejected") {
        std::istringstream in("nope\n");
        CHECK_THROWS_AS(read_enumerator_csv(in), std::invalid_argument);
    }
}
