// Laurent polynomials, formal fractions, pexp and the numeric evaluator.

#include "edaha/operators.hpp"

#include <doctest.h>

#include <complex>
#include <random>

using namespace edaha;
using LP = LaurentPoly;

namespace {

const LP Qv = LP::mono(1), pv = LP::mono(0, 1), sv = LP::mono(0, 0, 1), one(1);
const LP E = LP::Q(8) - LP::Q(-8);

LP randomPoly(std::mt19937_64& rng, bool withQ) {
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), n(1, 3);
    LP f;
    int terms = n(rng);
    for (int k = 0; k < terms; ++k) {
        int q = e(rng);
        if (withQ && q == 0) q = 1;
        f += LP::mono(q, e(rng), e(rng), GaussRat(c(rng)));
    }
    return f;
}

FormalFraction randomFraction(std::mt19937_64& rng) {
    static const std::vector<std::pair<int, int>> dirs{{1, 0}, {0, 1}, {2, 0}, {0, 2}, {1, 1}, {1, -1}};
    std::uniform_int_distribution<size_t> pick(0, dirs.size() - 1);
    LP num = randomPoly(rng, true);
    while (num.isZero()) num = randomPoly(rng, true);
    return FormalFraction::ps(num, {dirs[pick(rng)], dirs[pick(rng)]});
}

using C = std::complex<double>;

// (z; x, y)_infinity by brute force.
C poch2(C z, C x, C y, int M = 200) {
    C r = 1;
    C xm = 1;
    for (int m = 0; m < M; ++m, xm *= x) {
        C yn = 1;
        for (int n = 0; n < M; ++n, yn *= y) r *= 1.0 - z * xm * yn;
    }
    return r;
}

C toC(const Cx& z) { return {toDouble(real(z)), toDouble(imag(z))}; }

}  // namespace

TEST_CASE("laurent arithmetic") {
    CHECK((one - pv * pv) * (one + pv * pv) == one - pv.pow(4));
    const LP ph = LP::monomial({0, 2, 1});  // p s^{1/2}
    CHECK(ph * ph == LP::mono(0, 2, 1));
    const LP x = LP::mono(0, 1, -1);
    CHECK((one - x) * (-LP::mono(0, -1, 1)) == one - LP::mono(0, -1, 1));
}

TEST_CASE("laurent substitution") {
    CHECK(pv.subst(shifts::psS) == pv * sv);
    CHECK(LP::mono(0, 2, -2).subst(shifts::pSoverP) == LP::mono(0, 4, -2));
    CHECK(LP::Q(8).subst(shifts::sPinv) == LP::Q(8));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        LP f = randomPoly(rng, false), g = randomPoly(rng, false);
        for (const SL2Z& m : {shifts::psS, shifts::sinvP, shifts::pOverS}) {
            CHECK((f * g).subst(m) == f.subst(m) * g.subst(m));
            CHECK(f.subst(m).subst(m.inverse()) == f);
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        LP a = randomPoly(rng, false), b = randomPoly(rng, false), c = randomPoly(rng, false);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact division") {
    auto q = divideExact(Qv * pv - Qv * pv.pow(3), one - pv * pv);
    REQUIRE(q);
    CHECK(*q == Qv * pv);
    CHECK_FALSE(divideExact(one - pv.pow(4), one - sv * sv));
    const LP pinv = LP::mono(0, -1);
    auto r = divideExact(Qv * pinv * (one - pinv * pinv), one - pinv * pinv);
    REQUIRE(r);
    CHECK(*r == Qv * pinv);
}

TEST_CASE("fraction canonicalization") {
    const LP pinv = LP::mono(0, -1);
    FormalFraction printed(Qv * pinv * (one - pinv * pinv), {ex(0, -4, 0)});
    FormalFraction expected(Qv * pv * (one - pv * pv), {ex(0, 4, 0)});
    CHECK(fractionEqual(printed, expected));
    CHECK(canonicalize(printed).str() == canonicalize(expected).str());

    const LP mu = Qv * sv;
    FormalFraction withCommon = FormalFraction::ps(mu * (one - pv * sv), {{1, 1}, {0, 2}});
    CHECK(fractionEqual(withCommon, FormalFraction::ps(mu, {{0, 2}})));

    CHECK(canonicalize(FormalFraction::ps(LP(), {{1, 0}})).den.empty());
    CHECK_FALSE(fractionEqual(FormalFraction::ps(Qv * pv, {{0, 1}}), FormalFraction::ps(Qv * pv, {{0, 2}})));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        FormalFraction f = randomFraction(rng);
        CHECK(fractionEqual(f, canonicalize(f)));
    }
}

TEST_CASE("fractions reject Q-degree zero numerators") {
    CHECK_THROWS_AS(FormalFraction(pv, {ex(0, 1)}), InvalidFraction);
}

TEST_CASE("two ways of computing a pexp argument") {
    // Q/(p + 1/p) as a rational function, against Q p (1 - p^2) / (1 - p^4).
    RatFunc direct = RatFunc(Qv) / RatFunc::fraction(pv + LP::mono(0, -1), one);
    FormalFraction viaP = fromValue(direct);
    FormalFraction expected(Qv * pv * (one - pv * pv), {ex(0, 4)});
    CHECK(fractionEqual(viaP, expected));
    CHECK(RingElement::pexp(viaP) == RingElement::pexp(expected));
}

TEST_CASE("pexp of rational arguments") {
    // (1 - Q^8) / (1 - Q^-8) = -Q^8 under pexp(z : empty) = 1 - z.
    RingElement r = RingElement::pexp(FormalFraction(E));
    REQUIRE(r.isRational());
    CHECK(r.rationalValue() == RatFunc(LP::mono(8, 0, 0, GaussRat(-1))));
    CHECK(RingElement::pexp(FormalFraction(LP(), {ex(0, 1)})) == RingElement(1));
    RingElement twice = RingElement::pexp(FormalFraction(E * LP(2)));
    CHECK(twice == RingElement(RatFunc(LP::Q(16))));
}

TEST_CASE("exponential property") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 25; ++t) {
        FormalFraction f = randomFraction(rng), g = randomFraction(rng);
        RingElement pf = RingElement::pexp(f), pg = RingElement::pexp(g);
        CHECK(pf * pg == RingElement::pexp(f + g));
        CHECK(RingElement::pexp(-f) == pf.inverseUnit());
        CHECK(pf * RingElement::pexp(-f) == RingElement(1));
        CHECK((pf - pf).isZero());
    }
}

TEST_CASE("pexp cancellation of a common factor") {
    const LP mu = Qv * pv * sv;
    FormalFraction a = FormalFraction::ps(mu * (one - pv * sv.pow(2)), {{1, 2}, {0, 2}});
    FormalFraction b = FormalFraction::ps(mu, {{0, 2}});
    CHECK(RingElement::pexp(a) == RingElement::pexp(b));
}

TEST_CASE("products of pexp atoms") {
    RingElement x = RingElement::pexp(FormalFraction::ps(Qv * pv * sv, {{2, 0}}));
    RingElement y = RingElement::pexp(FormalFraction::ps(Qv * pv.pow(3) * sv, {{2, 0}}));
    FormalFraction sum = FormalFraction::ps(Qv * pv * sv * (one + pv * pv), {{2, 0}});
    CHECK(x * y == RingElement::pexp(sum));

    FormalFraction f = FormalFraction::ps(Qv * sv, {{1, 1}});
    RatFunc k = RatFunc::fraction(LP::mono(1, 0, 0, GaussRat(2)), one - LP::Q(4));
    CHECK(RingElement::pexp(f).scaled(k) * RingElement::pexp(-f).scaled(k.inverse()) == RingElement(1));
}

TEST_CASE("shift and unit inverse") {
    RingElement x = RingElement::pexp(FormalFraction::ps(Qv * pv * sv, {{0, 2}}));
    CHECK(x.shift(shifts::psS) == RingElement::pexp(FormalFraction::ps(Qv * pv * sv * sv, {{0, 2}})));
    CHECK(x.shift(SL2Z::identity()) == x);

    RingElement y = RingElement::pexp(FormalFraction::ps(Qv * sv, {{1, 0}}));
    CHECK((x * y).shift(shifts::sinvP) == x.shift(shifts::sinvP) * y.shift(shifts::sinvP));
    CHECK(x.shift(shifts::psS).shift(shifts::pOverS) == x);

    const RatFunc miQ(LP::mono(1, 0, 0, GaussRat(0, -1)));
    RingElement u = x.scaled(miQ);
    CHECK(u.inverseUnit() == x.inverseUnit().scaled(miQ.inverse()));
    CHECK(RingElement(1).inverseUnit() == RingElement(1));
    CHECK(u * u.inverseUnit() == RingElement(1));
}

TEST_CASE("pochhammer identities at 50 digits") {
    NumericPolicy pol;
    PrecisionScope scope(pol.precisionDigits);
    const Cx p = cx(0.21, 0.17), z = cx(0.4, -0.3), p2 = cx(-0.15, 0.22);
    CHECK(absd(pochEval(Cx(0), {p}, pol) - Cx(1)) < 1e-40);
    CHECK(absd(pochEval(z, {p}, pol) - (Cx(1) - z) * pochEval(z * p, {p}, pol)) < 1e-30);
    CHECK(absd(pochEval(z, {Cx(1) / p}, pol) - Cx(1) / pochEval(p * z, {p}, pol)) < 1e-30);
    CHECK(absd(pochEval(z, {p, p2}, pol) - pochEval(z, {p2, p}, pol)) < 1e-30);
    CHECK_THROWS_AS(pochEval(z, {cx(1, 0)}, pol), OnUnitCircle);
}

TEST_CASE("ring evaluation") {
    NumericPolicy pol;
    PrecisionScope scope(pol.precisionDigits);
    const SamplePoint pt = SamplePoint::make(cx(0.7, 0.3), cx(0.1), cx(0.15));
    CHECK(absd(ringEval(RingElement(1), pt, pol) - Cx(1)) < 1e-40);

    RingElement r = RingElement::pexp(FormalFraction(E));
    CHECK(absd(ringEval(r, pt, pol) - evalRat(r.rationalValue(), pt)) < 1e-40);

    // Entry (1,2) of O_B^(1), against a brute-force double product.
    const LP num = E * pv * sv * (one - pv);
    RingElement entry = RingElement::pexp(FormalFraction::ps(num, {{0, 2}, {2, 0}}));
    const C Q(0.7, 0.3), P(0.1), S(0.15);
    const C e8 = std::pow(Q, 8), em8 = std::pow(Q, -8);
    C oracle = poch2(e8 * P * S, S * S, P * P) * poch2(em8 * P * P * S, S * S, P * P) /
               (poch2(e8 * P * P * S, S * S, P * P) * poch2(em8 * P * S, S * S, P * P));
    CHECK(std::abs(toC(ringEval(entry, pt, pol)) - oracle) < 1e-12 * std::abs(oracle));

    std::mt19937_64 rng(9);
    for (int t = 0; t < 5; ++t) {
        RingElement x = RingElement::pexp(randomFraction(rng)), y = RingElement::pexp(randomFraction(rng));
        if (!pointValidFor(x * y, pt, pol.eps)) continue;
        Cx lhs = ringEval(x * y, pt, pol), rhs = ringEval(x, pt, pol) * ringEval(y, pt, pol);
        CHECK(absd(lhs - rhs) < 1e-30 * std::max(1.0, absd(rhs)));
    }
}

TEST_CASE("exact and numeric forms agree on single atoms") {
    NumericPolicy pol;
    PrecisionScope scope(pol.precisionDigits);
    std::mt19937_64 rng(13);
    auto pts = samplePoints(pol, 5, 99);
    for (int t = 0; t < 5; ++t) {
        FormalFraction f = randomFraction(rng);
        RingElement x = RingElement::pexp(f), y = RingElement::pexp(canonicalize(f));
        for (auto& pt : pts) {
            if (!pointValidFor(x, pt, pol.eps)) continue;
            Cx a = ringEval(x, pt, pol), b = ringEval(y, pt, pol);
            CHECK(absd(a - b) < 1e-30 * std::max(1.0, absd(b)));
        }
    }
}

TEST_CASE("zero test tiers") {
    NumericPolicy pol;
    RingElement x = RingElement::pexp(FormalFraction::ps(Qv * sv, {{0, 2}}));
    ZeroCheck z = zeroTest(x - x, pol);
    CHECK(z.zero);
    CHECK(z.tier == Tier::Symbolic);
    CHECK_FALSE(zeroTest(x, pol).zero);
}
