#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace polyfunc;
using namespace testutil;

TEST_CASE("parse integer polynomials") {
    MVPoly f = parse_poly("x1^2 + 3*x2", Z(), 2);
    MVPoly expected(Z(), 2);
    expected.add_term(MultiIndex{{2, 0}}, zi(1));
    expected.add_term(MultiIndex{{0, 1}}, zi(3));
    CHECK(f == expected);

    CHECK(parse_poly("x^2*x", Z(), 1) == parse_poly("x^3", Z(), 1));
    CHECK(parse_poly("2*x^2+1", Z(), 1).coeff(MultiIndex{{2}}) == zi(2));
    CHECK(parse_poly("-x + 3", Z(), 1).coeff(MultiIndex{{1}}) == zi(-1));
    CHECK(parse_poly(" x ^ 2 + 3 * x ", Z(), 1) == parse_poly("x^2+3*x", Z(), 1));
    CHECK(parse_poly("0", Z(), 1).is_zero());
    CHECK(parse_poly("(x+1)^3 - x^3 - 3*x^2 - 3*x - 1", Z(), 1).is_zero());
}

TEST_CASE("parse polynomials over F_q[t]") {
    Ring f2 = RingInstance::gf(2);
    MVPoly f = parse_poly("(t+1)*x^2 + t", f2, 1);
    MVPoly expected(f2, 1);
    expected.add_term(MultiIndex{{2}}, el(f2, "t+1"));
    expected.add_term(MultiIndex{{0}}, el(f2, "t"));
    CHECK(f == expected);

    Ring f4 = RingInstance::gf(2, 2);
    MVPoly g = parse_poly("u*x + u^2", f4, 1);
    CHECK(g.coeff(MultiIndex{{0}}) == el(f4, "u+1"));  // u^2 = u+1 in F_4
    CHECK(!g.coeff(MultiIndex{{1}}).is_zero());
}

TEST_CASE("parse errors carry the offset") {
    CHECK_THROWS_AS(parse_poly("x^^2", Z(), 1), ParseError);
    try {
        parse_poly("x^^2", Z(), 1);
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(parse_poly("x3", Z(), 2), ParseError);       // unknown variable
    CHECK_THROWS_AS(parse_poly("y + 1", Z(), 1), ParseError);    // unknown symbol
    CHECK_THROWS_AS(parse_poly("x +", Z(), 1), ParseError);      // dangling operator
    CHECK_THROWS_AS(parse_poly("(x", Z(), 1), ParseError);       // missing paren
    CHECK_THROWS_AS(parse_poly("x 1", Z(), 1), ParseError);      // trailing junk
    Ring f2 = RingInstance::gf(2);
    CHECK_THROWS_AS(parse_poly("2*x", f2, 1), ParseError);       // digit outside F_2
    CHECK_THROWS_AS(parse_poly("t*x", Z(), 1), ParseError);      // t needs F_q[t]
    CHECK_THROWS_AS(parse_poly("u*x", f2, 1), ParseError);       // u needs s > 1
    CHECK_THROWS_AS(parse_poly("x", Z(), 2), ParseError);        // several variables: x1..xr
}

TEST_CASE("render and reparse is the identity") {
    auto roundtrip = [](const MVPoly& f) {
        CHECK(parse_poly(render_poly(f), f.ring(), f.arity()) == f);
    };
    roundtrip(parse_poly("x^2 - 3*x + 1", Z(), 1));
    roundtrip(parse_poly("-x1^2*x2 + 4*x2^3 - 7", Z(), 2));
    roundtrip(parse_poly("0", Z(), 1));
    roundtrip(parse_poly("42", Z(), 1));
    Ring f2 = RingInstance::gf(2);
    roundtrip(parse_poly("(t+1)*x^2 + t*x + 1", f2, 1));
    roundtrip(parse_poly("(t^2+t)*x^3", f2, 1));
    Ring f4 = RingInstance::gf(2, 2);
    roundtrip(parse_poly("(u*t+1)*x^2 + u", f4, 1));
    Ring f3 = RingInstance::gf(3);
    roundtrip(parse_poly("2*t^2*x1^2 + (t+2)*x2 + 1", f3, 2));
}

TEST_CASE("parse_ideal") {
    CHECK(parse_ideal("12", Z()) == zideal(12));
    CHECK(parse_ideal("2^2*3", Z()) == zideal(12));
    CHECK(parse_ideal("-6", Z()) == zideal(6));  // normalized
    Ring f3 = RingInstance::gf(3);
    CHECK(parse_ideal("2*t^2+2", f3) == ideal(f3, "t^2+1"));  // made monic
    CHECK_THROWS_AS(parse_ideal("x+1", Z()), ParseError);     // no variables in ideal strings
}
