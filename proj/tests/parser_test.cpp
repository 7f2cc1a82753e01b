#include "chordalcad/parser.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace chordalcad;

TEST_CASE("single polynomial grammar") {
    VarTable t;
    Poly a = parse_poly("x1*x3 - 1", t);
    CHECK(a == Poly::variable(*t.find("x1")) * Poly::variable(*t.find("x3")) - Poly::constant(1));
    Poly b = parse_poly("x3^3 + x1", t);
    CHECK(b.degree(*t.find("x3")) == 3);
    Poly d = parse_poly("-x + 2*x", t);
    CHECK(d == Poly::variable(*t.find("x")));
    Poly e = parse_poly("(x + 1)*(x - 1)", t);
    CHECK(e == Poly::variable(*t.find("x")).pow(2) - Poly::constant(1));
    CHECK(parse_poly("2^3", t) == Poly::constant(8));
    CHECK(parse_poly("x^0", t) == Poly::constant(1));
    CHECK(parse_poly("  7  ", t) == Poly::constant(7));
}

TEST_CASE("parse errors carry position and expectation") {
    VarTable t;
    SUBCASE("implicit multiplication") {
        try {
            parse_poly("x1 x2", t);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(e.column() == 4);
            CHECK(e.expected().find('*') != std::string::npos);
        }
    }
    SUBCASE("dangling operator") { CHECK_THROWS_AS(parse_poly("x1 +", t), ParseError); }
    SUBCASE("unbalanced parenthesis") { CHECK_THROWS_AS(parse_poly("(x1 + 2", t), ParseError); }
    SUBCASE("exponent must be a literal") { CHECK_THROWS_AS(parse_poly("x^y", t), ParseError); }
    SUBCASE("negative exponent") { CHECK_THROWS_AS(parse_poly("x^-2", t), ParseError); }
    SUBCASE("stray character") { CHECK_THROWS_AS(parse_poly("x1 $ 2", t), ParseError); }
    SUBCASE("error line numbers count comment lines") {
        try {
            parse_system("# header\nx1 + 1\nx2 !\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
}

TEST_CASE("system files") {
    SUBCASE("comments, blanks, and constants") {
        auto in = parse_system("# a comment\n\nx1*x2 - 1  # trailing\n5\nx2^2 + x3\n");
        CHECK(in.system.polys.size() == 2);  // the constant line vanishes
        CHECK_FALSE(in.declared_order.has_value());
    }
    SUBCASE("order directive") {
        auto in = parse_system("# order: x2 > x1\nx1 + x2\n");
        REQUIRE(in.declared_order.has_value());
        CHECK(*in.declared_order == "x2 > x1");
    }
    SUBCASE("directive only counts before the polynomials") {
        auto in = parse_system("x1 + x2\n# order: x2 > x1\n");
        CHECK_FALSE(in.declared_order.has_value());
    }
}

TEST_CASE("canonical text round trip") {
    testutil::Ctx c;
    std::vector<VarId> vars{c.var("x1"), c.var("x2"), c.var("x3")};
    std::mt19937_64 rng(401);
    for (int i = 0; i < 80; ++i) {
        Poly p = testutil::random_poly(rng, vars, 4, 5);
        std::string text = p.to_string(c.table);
        CHECK(parse_poly(text, c.table) == p);
    }
    CHECK(parse_poly(Poly::zero().to_string(c.table), c.table).is_zero());
}
