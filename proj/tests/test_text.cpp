#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rado/text.hpp"
#include "support.hpp"

using namespace rado;

TEST_CASE("parse examples") {
    const auto in = parse_polynomial("x^2 - x*y + 3z");
    CHECK(in.polynomial.arity() == 3);
    CHECK(support(in.polynomial) == Support{{2, 0, 0}, {1, 1, 0}, {0, 0, 1}});
    CHECK(in.polynomial.coefficient(MultiIndex{0, 0, 1}) == 3);
    CHECK(in.source == "x^2 - x*y + 3z");

    const auto e = parse_polynomial("-x3 - x4 + x1*x2 + x1*x2^2").polynomial;
    CHECK(e.arity() == 4);
    CHECK(e.coefficient(MultiIndex{1, 2, 0, 0}) == 1);
    CHECK(e.coefficient(MultiIndex{0, 0, 1, 0}) == -1);
    CHECK(e.term_count() == 4);
}

TEST_CASE("aliases and implicit multiplication") {
    CHECK(parse_polynomial("w").polynomial.arity() == 4);
    CHECK(parse_polynomial("2x*y").polynomial == parse_polynomial("2*x*y").polynomial);
    CHECK(parse_polynomial("3 z").polynomial == parse_polynomial("3*x3").polynomial);
    CHECK(parse_polynomial("x*x").polynomial == parse_polynomial("x^2").polynomial);
    CHECK(parse_polynomial("x - x").polynomial.is_zero());
    CHECK(parse_polynomial("5").polynomial.constant_term() == 5);
    CHECK(parse_polynomial("x", 3).polynomial.arity() == 3);
}

TEST_CASE("syntax errors report offsets") {
    try {
        parse_polynomial("x^");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x + * y"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("q"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x9"), ParseError);            // arity > 8
    CHECK_THROWS_AS(parse_polynomial("x0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^100000"), ParseError);      // exponent overflow
    CHECK_THROWS_AS(parse_polynomial("x + x2"), ParseError);        // mixed alias and index
    CHECK_THROWS_AS(parse_polynomial("x + y)"), ParseError);
}

TEST_CASE("canonical printing") {
    CHECK(to_string(parse_polynomial("x + y - 3z").polynomial) == "x1 + x2 - 3*x3");
    CHECK(to_string(parse_polynomial("x*y - z^3").polynomial) == "-x3^3 + x1*x2");
    CHECK(to_string(parse_polynomial("0").polynomial) == "0");
}

TEST_CASE("print then parse is the identity") {
    std::mt19937 rng(rado::test::seed());
    std::uniform_int_distribution<std::size_t> ar(1, kMaxArity);
    for (int iter = 0; iter < 500; ++iter) {
        const std::size_t n = ar(rng);
        const auto p = test::random_polynomial(rng, n, 6, 1000, 6);
        const std::string text = to_string(p);
        const auto back = parse_polynomial(text, n);
        REQUIRE(back.polynomial == p);
        CHECK(to_string(back.polynomial) == text);
    }
}
