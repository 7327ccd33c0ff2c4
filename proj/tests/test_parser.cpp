// The eval expression language.

#include "edaha/parser.hpp"
#include "edaha/representation.hpp"

#include <doctest.h>

using namespace edaha;
using LP = LaurentPoly;

TEST_CASE("pexp of a Laurent fraction prints its canonical form") {
    EvalResult r = evalExpression("pexp(Q/(p+p^-1))");
    REQUIRE(r.isPexp);
    const LP Q = LP::mono(1), p = LP::mono(0, 1), one(1);
    CHECK(fractionEqual(r.fraction, FormalFraction(Q * p * (one - p * p), {ex(0, 4)})));
    CHECK(r.str() == "pexp(-Q*p^3 + Q*p : 1 - p^4)");
    CHECK(evalExpression("pexp(Q p (1 - p^2) / (1 - p^4))").str() == r.str());
}

TEST_CASE("scalar arithmetic") {
    EvalResult r = evalExpression("2Q^2 - 1/Q + i*s");
    REQUIRE_FALSE(r.isMatrix);
    const LP expect = LP::mono(2, 0, 0, GaussRat(2)) - LP::mono(-1) + LP::mono(0, 0, 1, GaussRat::i());
    CHECK(r.scalar == RingElement(expect));
    CHECK(evalExpression("(Q^2 - Q^-2)^2").scalar == RingElement(deltaQ() * deltaQ()));
    CHECK(evalExpression("pexp(Q p)^-1 * pexp(Q p)").scalar == RingElement(1));
}

TEST_CASE("matrix names") {
    CHECK(evalExpression("DA").matrix == matrixDA());
    CHECK(evalExpression("DB").matrix == matrixDB());
    CHECK(evalExpression("S").matrix == matrixSmall());
    CHECK(evalExpression("OA(a^5)").matrix == matrixOA1());
    CHECK(evalExpression("OB(b^-1 a)").matrix == oMatrix(Family::B, FreeWord::parse("a")));
    CHECK(evalExpression("OA(1) OB(1) OA(1)").matrix.isZero());
    CHECK(evalExpression("OA(1)^3 + (Q^2-Q^-2)^2 OA(1)").matrix.isZero());
}

TEST_CASE("malformed expressions") {
    CHECK_THROWS_AS(evalExpression("x"), ParseError);
    CHECK_THROWS_AS(evalExpression("OB(ba"), ParseError);
    CHECK_THROWS_AS(evalExpression("DA + 1"), ParseError);
    CHECK_THROWS_AS(evalExpression("1/DA"), ParseError);
    CHECK_THROWS_AS(evalExpression("pexp(DA)"), ParseError);
    CHECK_THROWS_AS(evalExpression("OA(g)"), ParseError);
    CHECK_THROWS_AS(evalExpression("(Q"), ParseError);
}
