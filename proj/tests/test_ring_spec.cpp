#include <doctest.h>

#include "cayring/ring_spec.hpp"

using namespace cayring;

using Kind = RingSpecTerm::Kind;

TEST_CASE("terms parse into local factors") {
    RingSpecAst ast = parse_ring_spec("Z6");
    REQUIRE(ast.factors.size() == 2);
    CHECK(ast.factors[0] == RingSpecTerm{Kind::zn, 2, 0});
    CHECK(ast.factors[1] == RingSpecTerm{Kind::zn, 3, 0});

    ast = parse_ring_spec("Z12");  // smallest prime first
    REQUIRE(ast.factors.size() == 2);
    CHECK(ast.factors[0] == RingSpecTerm{Kind::zn, 4, 0});
    CHECK(ast.factors[1] == RingSpecTerm{Kind::zn, 3, 0});
    CHECK(render_ring_spec(ast) == "Z4 x Z3");

    ast = parse_ring_spec("GF(5)");
    REQUIRE(ast.factors.size() == 1);
    CHECK(ast.factors[0] == RingSpecTerm{Kind::gf, 5, 0});

    ast = parse_ring_spec("GF(4)[t]/(t^2)");
    REQUIRE(ast.factors.size() == 1);
    CHECK(ast.factors[0] == RingSpecTerm{Kind::gf_trunc, 4, 2});
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_ring_spec(" Z 4  x GF( 9 ) ") == parse_ring_spec("Z4xGF(9)"));
    CHECK(parse_ring_spec("GF(8)x GF(8)") == parse_ring_spec("GF(8) x GF(8)"));
    CHECK(parse_ring_spec("GF( 4 ) [ t ] / ( t ^ 2 )") == parse_ring_spec("GF(4)[t]/(t^2)"));
}

TEST_CASE("render and parse round trip") {
    for (const char* spec :
         {"Z6", "Z12", "Z360", "GF(5)", "GF(27)", "GF(4)[t]/(t^2)", "Z4 x GF(9)",
          "GF(2) x GF(2) x GF(2)", "Z8 x GF(2)[t]/(t^3)"}) {
        CAPTURE(spec);
        RingSpecAst ast = parse_ring_spec(spec);
        CHECK(parse_ring_spec(render_ring_spec(ast)) == ast);
    }
}

TEST_CASE("syntax errors carry 1-based offsets") {
    auto offset_of = [](const char* text) {
        try {
            parse_ring_spec(text);
        } catch (const SyntaxError& e) {
            return e.offset;
        }
        return size_t(0);
    };
    CHECK(offset_of("Z6 x") == 5);  // end of input reports length + 1
    CHECK(offset_of("") == 1);
    CHECK(offset_of("Q5") == 1);
    CHECK(offset_of("Z6 y Z3") == 4);
    CHECK(offset_of("Z") == 2);
    CHECK(offset_of("Z1") == 2);
    CHECK(offset_of("GF(4") == 5);
    CHECK(offset_of("GF(4)[t]/(t^0)") == 13);

    try {
        parse_ring_spec("Z6 x");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.expected == "'Z' or 'GF'");
    }
}

TEST_CASE("field orders must be prime powers") {
    try {
        parse_ring_spec("GF(6)");
        FAIL("expected rejection");
    } catch (const NotPrimePower& e) {
        CHECK(e.value == 6);
    }
    CHECK_THROWS_AS(parse_ring_spec("GF(12)[t]/(t^2)"), NotPrimePower);
}

TEST_CASE("order caps apply to the expanded product") {
    try {
        parse_ring_spec("Z8000");
        FAIL("expected cap rejection");
    } catch (const OrderCapExceeded& e) {
        CHECK(e.order == 8000);
        CHECK(e.cap == kDefaultOrderCap);
    }
    RingSpecAst ast = parse_ring_spec("Z8000", 10000);
    REQUIRE(ast.factors.size() == 2);
    CHECK(ast.factors[0] == RingSpecTerm{Kind::zn, 64, 0});
    CHECK(ast.factors[1] == RingSpecTerm{Kind::zn, 125, 0});
    CHECK_THROWS_AS(parse_ring_spec("Z16 x GF(25) x Z27", 4096), OrderCapExceeded);
}

TEST_CASE("ring_from_spec builds working rings") {
    FiniteRing R = ring_from_spec("Z6");
    CHECK(R.order() == 6);
    CHECK(R.render() == "Z2 x Z3");
    CHECK(ring_from_spec("GF(4)[t]/(t^2)").order() == 16);
}
