// Acceptance suite: one line per criterion.
//
//   acceptance               run all twelve
//   acceptance --criterion N run one

#include "edaha/certificates.hpp"
#include "edaha/laumon.hpp"
#include "edaha/parser.hpp"
#include "edaha/representation.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace edaha;
using LP = LaurentPoly;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// Every check passes, and numeric ones stay below the residual bound.
struct Tally {
    size_t total = 0, failed = 0, numeric = 0;
    double worst = 0;
    std::string firstFail;

    void add(const MatrixCheck& m, double bound) {
        ++total;
        const bool ok = m.pass && (m.tier() == Tier::Symbolic || m.residual() < bound);
        if (m.tier() == Tier::Numeric) {
            ++numeric;
            worst = std::max(worst, m.residual());
        }
        if (!ok) {
            if (firstFail.empty()) firstFail = m.label;
            ++failed;
        }
    }
    std::string str() const {
        std::string s = fmt("%zu/%zu pass, %zu numeric (worst residual %.2g)", total - failed, total, numeric, worst);
        if (failed) s += ", first failure " + firstFail;
        return s;
    }
};

NumericPolicy basePolicy() {
    NumericPolicy p;
    p.precisionDigits = 50;
    p.samples = 3;
    return p;
}

Outcome runBraid() {
    auto t0 = Clock::now();
    BraidResult b = checkBraid(basePolicy());
    const double t = seconds(t0);
    Outcome o;
    o.pass = b.pass && b.symbolic && b.kappaPSFree && b.shiftsEqual && b.numericResidual < 1e-25 && t < 30;
    o.detail = fmt("kappa = %s, symbolic %s, numeric residual %.2g at 3 points, %.1f s", b.kappa.str().c_str(),
                   b.symbolic ? "yes" : "no", b.numericResidual, t);
    return o;
}

Outcome runSHat() {
    SSquaredResult s2 = checkSSquared(basePolicy());
    SFourthResult s4 = checkSFourth();
    const RingElement c(LP::mono(-16, 0, 0, GaussRat(16)));
    const bool fourth = s4.pass && s4.s4.shift == SL2Z::identity() && s4.s4.matrix == Mat3R::identity().scaled(c);
    Outcome o;
    o.pass = s2.pass && s2.shiftOk && fourth;
    o.detail = fmt("S-hat^2 entrywise %s, S-hat^4 = 16 Q^-16 Id %s", s2.pass ? "exact" : "mismatch",
                   fourth ? "exact" : "mismatch");
    if (!s2.notes.empty()) o.detail += " (" + std::to_string(s2.notes.size()) + " transcription notes)";
    return o;
}

Outcome runBaseRelations() {
    Tally t;
    for (auto& m : baseRelationChecks(basePolicy())) t.add(m, 0);
    Outcome o;
    o.pass = t.failed == 0 && t.numeric == 0 && t.total == 6;
    o.detail = t.str();
    return o;
}

Outcome runRelators() {
    auto t0 = Clock::now();
    Tally t;
    std::set<std::string> ids;
    NumericPolicy pol = basePolicy();
    for (auto& m : relationSuite(pol, 2, 25, 4)) {
        t.add(m, 1e-20);
        ids.insert(m.label.substr(0, m.label.find('[')));
    }
    const double s = seconds(t0);
    Outcome o;
    o.pass = t.failed == 0 && s < 600;
    std::set<std::string> families;
    for (auto id : ids) {
        if (id.back() == 'A' || id.back() == 'B') id.pop_back();
        families.insert(id);
    }
    o.pass = o.pass && families.size() == 12;
    o.detail = fmt("%zu families (%zu ids), ", families.size(), ids.size()) + t.str() + fmt(", %.1f s", s);
    return o;
}

Outcome runShiftsC() {
    Tally t;
    for (auto& m : shiftSuite(basePolicy(), 3, 2)) t.add(m, 1e-20);
    Outcome o;
    o.pass = t.failed == 0;
    o.detail = "a-shift |g| <= 3, b-identity |g| <= 2: " + t.str();
    return o;
}

Outcome runEquivariance() {
    Tally t;
    for (auto& m : equivarianceSuite(basePolicy(), 2)) t.add(m, 1e-20);
    Outcome o;
    o.pass = t.failed == 0;
    o.detail = "|g| <= 2: " + t.str();
    return o;
}

Outcome runAppendix() {
    auto t0 = Clock::now();
    auto rs = appendixSuite();
    auto ps = pslzSuite();
    rs.insert(rs.end(), ps.begin(), ps.end());
    std::set<std::string> fams;
    size_t ok = 0, corrected = 0;
    bool printedRejected = true;
    std::string firstFail;
    for (auto& r : rs) {
        fams.insert(r.family);
        if (r.pass) ++ok;
        else if (firstFail.empty()) firstFail = r.id;
        if (!r.corrections.empty()) ++corrected;
        printedRejected = printedRejected && r.printedFails;
    }
    const double s = seconds(t0);
    Outcome o;
    o.pass = ok == rs.size() && fams.size() >= 15 && s < 60;
    o.detail = fmt("%zu families, %zu/%zu chains exact, %zu with corrected steps (printed forms rejected: %s), %.1f s",
                   fams.size(), ok, rs.size(), corrected, printedRejected ? "all" : "not all", s);
    if (!firstFail.empty()) o.detail += ", first failure " + firstFail;
    return o;
}

Outcome runCasimir() {
    auto rs = casimirSuite();
    size_t ok = 0;
    for (auto& r : rs) ok += r.pass;
    Outcome o;
    o.pass = ok == rs.size() && !rs.empty();
    o.detail = fmt("%zu/%zu certificates exact", ok, rs.size());
    return o;
}

Outcome runPsi0() {
    Psi0Report r = psi0Checks(basePolicy());
    size_t ok = 0;
    for (auto& m : r.relations) ok += m.pass && m.tier() == Tier::Symbolic;
    Outcome o;
    o.pass = r.pass && ok == r.relations.size() && r.rank == 9 && r.limit.pass;
    o.detail = fmt("%zu/%zu defining relations exact, spanning rank %d, p -> 0 limit %s", ok, r.relations.size(),
                   r.rank, r.limit.pass ? "exact" : "mismatch");
    return o;
}

Outcome runLaumon() {
    auto t0 = Clock::now();
    NumericPolicy pol = basePolicy();
    pol.precisionDigits = 30;
    pol.tol = 1e-20;
    LaumonOptions lo;
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) all.push_back({i, j});
    ConjectureReport num = conjectureCheck(all, "numeric", lo, pol);
    size_t ok = 0, stable = 0;
    double worst = 0;
    for (auto& e : num.entries) {
        ok += e.pass;
        stable += e.stable;
        if (e.stable) worst = std::max(worst, e.residual);
    }
    ConjectureReport ser = conjectureCheck({{1, 1}, {1, 2}, {2, 1}, {2, 2}}, "series", lo, pol);
    std::string series;
    for (auto& e : ser.entries) {
        series += fmt(" (%d,%d):", e.i, e.j);
        series += e.pass ? "ok" : fmt("p^%d", e.firstMismatchPHalf / 2);
    }
    const double s = seconds(t0);
    Outcome o;
    o.pass = num.pass && s < 900;
    o.detail = fmt("numeric %zu/%zu agree, %zu/%zu stabilized, worst stable residual %.3g; series to p^2:%s; %.1f s",
                   ok, num.entries.size(), stable, num.entries.size(), worst, series.c_str(), s);
    return o;
}

Outcome runEigen() {
    NumericPolicy pol = basePolicy();
    size_t ok = 0, total = 0;
    std::string fails;
    for (int k = 1; k <= 3; ++k) {
        EigenReport r = eigenRelationCheck(k, pol);
        for (auto& e : r.entries) {
            ++total;
            const bool pass = e.zero.zero && (e.zero.tier == Tier::Symbolic || e.zero.residual < 1e-8);
            ok += pass;
            if (!pass) fails += fmt(" (k=%d,i=%d)", e.k, e.i);
        }
    }
    const SamplePoint pt = SamplePoint::make(cx(1.05 * std::cos(0.37), 1.05 * std::sin(0.37)), cx(1e-2), cx(0.15));
    const double sq = eigenResidualAt(1, pt, pol, XConvention::Squared);
    Outcome o;
    o.pass = ok == total;
    o.detail = fmt("%zu/%zu rows hold with X_k = i Q^(k-2)", ok, total);
    if (!fails.empty()) o.detail += ", failing" + fails;
    o.detail += fmt("; diagnostic X_k = i Q^(2(k-2)) residual %.2g at p = 0.01", sq);
    return o;
}

Outcome runFoundations() {
    NumericPolicy pol = basePolicy();
    PrecisionScope scope(pol.precisionDigits);
    std::mt19937_64 rng(pol.seed);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
        const Cx z = cx(u(rng), u(rng)), p = cx(u(rng), u(rng)), p2 = cx(u(rng), u(rng));
        worst = std::max(worst, absd(pochEval(z, {p}, pol) - (Cx(1) - z) * pochEval(z * p, {p}, pol)));
        worst = std::max(worst, absd(pochEval(z, {Cx(1) / p}, pol) * pochEval(p * z, {p}, pol) - Cx(1)));
        worst = std::max(worst, absd(pochEval(z, {p, p2}, pol) - pochEval(z, {p2, p}, pol)));
    }
    const LP Q = LP::mono(1), p = LP::mono(0, 1), s = LP::mono(0, 0, 1), one(1);
    bool expOk = true;
    std::uniform_int_distribution<int> e(-2, 2), c(1, 3);
    for (int t = 0; t < 20; ++t) {
        const LP nf = LP::mono(c(rng), e(rng), e(rng), GaussRat(c(rng))) - LP::mono(-1, e(rng) + 3, e(rng));
        const LP ng = LP::mono(-c(rng), e(rng), e(rng)) + LP::mono(2, 1, e(rng), GaussRat(2));
        const FormalFraction f = FormalFraction::ps(nf, {{1, 0}, {0, 2}}), g = FormalFraction::ps(ng, {{1, 1}});
        const RingElement pf = RingElement::pexp(f), pg = RingElement::pexp(g);
        expOk = expOk && pf * pg == RingElement::pexp(f + g) && pf * RingElement::pexp(-f) == RingElement(1);
        const FormalFraction cancel = FormalFraction::ps(nf * (one - p * s), {{1, 1}, {1, 0}, {0, 2}});
        expOk = expOk && RingElement::pexp(cancel) == pf;
    }
    const EvalResult ex = evalExpression("pexp(Q/(p+p^-1))");
    const bool example = ex.isPexp && fractionEqual(ex.fraction, FormalFraction(Q * p * (one - p * p), {edaha::ex(0, 4)}));
    Outcome o;
    o.pass = worst < 1e-30 && expOk && example;
    o.detail = fmt("q-Pochhammer identities worst %.2g, exponential and cancellation %s, two-ways example %s (%s)",
                   worst, expOk ? "exact" : "mismatch", example ? "exact" : "mismatch", ex.str().c_str());
    return o;
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> cs{
        {"braid relation", runBraid},
        {"S-hat squared and fourth power", runSHat},
        {"base relations for g = 1", runBaseRelations},
        {"relator annihilation", runRelators},
        {"shift properties", runShiftsC},
        {"equivariance", runEquivariance},
        {"appendix certificates", runAppendix},
        {"Casimir certificates", runCasimir},
        {"undeformed quotient", runPsi0},
        {"Laumon specialization", runLaumon},
        {"eigen-relation", runEigen},
        {"foundations", runFoundations},
    };
    int only = 0;
    for (int a = 1; a < argc; ++a) {
        if (!std::strcmp(argv[a], "--criterion") && a + 1 < argc) only = std::atoi(argv[++a]);
        else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 1;
        }
    }
    if (only < 0 || only > int(cs.size())) {
        std::fprintf(stderr, "criterion must be 1..%zu\n", cs.size());
        return 1;
    }
    int failed = 0;
    for (size_t n = 0; n < cs.size(); ++n) {
        if (only && int(n) + 1 != only) continue;
        Outcome o;
        try {
            o = cs[n].run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("error: ") + e.what();
        }
        failed += !o.pass;
        std::printf("criterion %2zu %s %s: %s\n", n + 1, o.pass ? "PASS" : "FAIL", cs[n].name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
