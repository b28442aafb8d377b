#include "doctest.h"
#include "oracle.hpp"

#include "psfig/error.hpp"
#include "psfig/texdim.hpp"

#include <random>

using namespace psfig;

namespace {

ErrorCode code_of(std::string_view text) {
    try {
        parse_dimension(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error for '" << text << "'");
    return ErrorCode::io;
}

} // namespace

TEST_CASE("spot values") {
    CHECK(parse_dimension("0pt").sp() == 0);
    CHECK(parse_dimension("1pt").sp() == 65536);
    CHECK(parse_dimension("1bp").sp() == 65781);
    CHECK(parse_dimension("3in").sp() == 14208860);
    CHECK(parse_dimension("1in").sp() == 4736286);
    CHECK(parse_dimension("72 bp").sp() == 4736286);
    CHECK(parse_dimension("36pt").sp() == 2359296);
}

TEST_CASE("one of each unit matches the rational oracle") {
    for (std::string_view u : {"pt", "pc", "in", "bp", "cm", "mm", "dd", "cc"}) {
        const auto r = unit_ratio(u);
        REQUIRE(r);
        const auto expected = oracle::tex_dimension(1, "", r->num, r->den);
        CHECK_MESSAGE(parse_dimension(std::string("1") + std::string(u)).sp() == expected.convert_to<std::int64_t>(),
                      u);
    }
}

TEST_CASE("fractions use TeX's rounding") {
    CHECK(parse_dimension("0.5pt").sp() == 32768);
    CHECK(parse_dimension(".5pt").sp() == 32768);
    CHECK(parse_dimension("5.pt").sp() == 5 * 65536);
    CHECK(parse_dimension("12.5bp").sp() == 822272);
    CHECK(parse_dimension("100.25bp").sp() == 6594621);
    // 0.00001pt = 0.65536sp rounds to 1sp
    CHECK(parse_dimension("0.00001pt").sp() == 1);
    CHECK(parse_dimension("0.000007pt").sp() == 0);
    // digits past the 17th are ignored
    CHECK(parse_dimension("1.99999999999999999999pt") == parse_dimension("1.99999999999999999pt"));
}

TEST_CASE("sp is taken literally and drops the fraction") {
    CHECK(parse_dimension("123sp").sp() == 123);
    CHECK(parse_dimension("123.9sp").sp() == 123);
    CHECK(parse_dimension("1073741823sp").sp() == max_dimen);
    CHECK(code_of("1073741824sp") == ErrorCode::overflow);
}

TEST_CASE("signs, spaces and case") {
    CHECK(parse_dimension("-1pt").sp() == -65536);
    CHECK(parse_dimension("+1pt").sp() == 65536);
    CHECK(parse_dimension("-1bp").sp() == -65781);
    CHECK(parse_dimension("  3 in  ").sp() == 14208860);
    CHECK(parse_dimension("3IN").sp() == 14208860);
}

TEST_CASE("maxdimen boundary") {
    CHECK(parse_dimension("16383.99999pt").sp() == max_dimen);
    CHECK(code_of("16384pt") == ErrorCode::overflow);
    CHECK(code_of("99999999999pt") == ErrorCode::overflow);
    CHECK(code_of("227in") == ErrorCode::overflow);
    CHECK_THROWS_AS(Scaled(max_dimen + 1), Error);
    CHECK(Scaled(-max_dimen).sp() == -max_dimen);
}

TEST_CASE("rejected inputs") {
    CHECK(code_of("3") == ErrorCode::unknown_unit);
    CHECK(code_of("3furlong") == ErrorCode::unknown_unit);
    CHECK(code_of("1em") == ErrorCode::unknown_unit);
    CHECK(code_of("1ex") == ErrorCode::unknown_unit);
    CHECK(code_of("1mu") == ErrorCode::unknown_unit);
    CHECK(code_of("1truept") == ErrorCode::unknown_unit);
    CHECK(code_of("pt") == ErrorCode::malformed_number);
    CHECK(code_of(".pt") == ErrorCode::malformed_number);
    CHECK(code_of("") == ErrorCode::malformed_number);
    CHECK(code_of("1,5pt") == ErrorCode::unknown_unit);
    CHECK(code_of("1pt x") == ErrorCode::malformed_number);
    CHECK(code_of("1 2pt") == ErrorCode::unknown_unit);
}

TEST_CASE("convert_number") {
    CHECK(convert_number("72", "bp").sp() == 4736286);
    CHECK(convert_number("-10", "bp").sp() == -657817);
    CHECK_THROWS_AS(convert_number("(atend)", "bp"), Error);
    CHECK_THROWS_AS(convert_number("72 ", "bp"), Error);
}

TEST_CASE("format_sp") {
    CHECK(format_sp(Scaled(0)) == "0");
    CHECK(format_sp(Scaled(65536)) == "65536");
    CHECK(format_sp(parse_dimension("72bp")) == "4736286");
    CHECK(format_sp(Scaled(-42)) == "-42");
}

TEST_CASE("property: sp round trip") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-max_dimen, max_dimen);
    for (int i = 0; i < 20000; ++i) {
        const Scaled v(dist(rng));
        REQUIRE(parse_dimension(format_sp(v) + "sp") == v);
    }
}

TEST_CASE("property: random literals match the oracle and are monotone") {
    std::mt19937_64 rng(11);
    const std::string_view units[] = {"pt", "pc", "in", "bp", "cm", "mm", "dd", "cc"};
    std::uniform_int_distribution<int> unit_pick(0, 7);
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> len(0, 8);
    for (int i = 0; i < 20000; ++i) {
        const std::string_view u = units[unit_pick(rng)];
        const auto r = *unit_ratio(u);
        const std::uint64_t integer = std::uniform_int_distribution<std::uint64_t>(0, 600)(rng);
        std::string frac;
        for (int k = len(rng); k > 0; --k)
            frac.push_back(static_cast<char>('0' + digit(rng)));
        const std::string text = std::to_string(integer) + (frac.empty() ? "" : "." + frac) + std::string(u);
        const auto expected = oracle::tex_dimension(integer, frac, r.num, r.den);
        if (expected > max_dimen) {
            CHECK_THROWS_AS(parse_dimension(text), Error);
            continue;
        }
        const Scaled got = parse_dimension(text);
        REQUIRE_MESSAGE(got.sp() == expected.convert_to<std::int64_t>(), text);
        // the value for the next larger literal of the same unit is never smaller
        const std::string bumped = std::to_string(integer + 1) + std::string(u);
        if (oracle::tex_dimension(integer + 1, "", r.num, r.den) <= max_dimen)
            CHECK(parse_dimension(bumped) >= got);
    }
}
