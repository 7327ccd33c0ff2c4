// Command-line driver: verification suites, the Laumon comparison and eval.

#include "edaha/certificates.hpp"
#include "edaha/laumon.hpp"
#include "edaha/parser.hpp"
#include "edaha/representation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

using namespace edaha;
using json = nlohmann::ordered_json;

namespace {

struct Check {
    std::string id;
    Tier tier = Tier::Symbolic;
    double residual = 0;
    bool pass = false;
    double ms = 0;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct Options {
    NumericPolicy policy;
    int maxWordLen = -1;
    int maxTotalLen = 2;
    int randomCount = 25;
    std::string jsonPath;
    bool verbose = false;
};

// Convergence failures map to exit 1, distinct from a failed identity.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double msSince(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Check fromMatrix(const MatrixCheck& m) { return {m.label, m.tier(), m.residual(), m.pass, m.ms}; }

Check fromEntries(const std::string& id, const std::vector<EntryCheck>& es, bool pass, double ms) {
    Check c{id, Tier::Symbolic, 0, pass, ms};
    for (auto& e : es) {
        if (e.zero.tier == Tier::Numeric) c.tier = Tier::Numeric;
        c.residual = std::max(c.residual, e.zero.residual);
    }
    return c;
}

void addChains(Report& r, const std::vector<ChainResult>& rs) {
    for (auto& c : rs) {
        r.checks.push_back({c.family + "/" + c.id, Tier::Symbolic, 0, c.pass && c.printedFails, c.ms});
        if (!c.pass) r.notes.push_back(c.id + ": step " + std::to_string(c.failedStep) + ": " + c.message);
        if (!c.printedFails) r.notes.push_back(c.id + ": a printed variant unexpectedly passes");
    }
}

Report runSl2z(const Options& o) {
    Report r{"sl2z", {}, {}};
    auto t0 = std::chrono::steady_clock::now();
    BraidResult b = checkBraid(o.policy);
    Check braid = fromEntries("braid", b.entries, b.pass, msSince(t0));
    braid.residual = std::max(braid.residual, b.numericResidual);
    r.checks.push_back(braid);
    r.notes.push_back("kappa = " + b.kappa.str());

    t0 = std::chrono::steady_clock::now();
    SSquaredResult s2 = checkSSquared(o.policy);
    r.checks.push_back(fromEntries("S-hat^2", s2.entries, s2.pass, msSince(t0)));
    for (auto& n : s2.notes) r.notes.push_back(n);

    t0 = std::chrono::steady_clock::now();
    SFourthResult s4 = checkSFourth();
    r.checks.push_back({"S-hat^4", Tier::Symbolic, 0, s4.pass, msSince(t0)});

    for (auto& id : conjugationIdentityNames()) {
        t0 = std::chrono::steady_clock::now();
        IdentityResult ir = conjugationIdentityCheck(id, o.policy);
        r.checks.push_back(fromEntries(id, ir.entries, ir.pass, msSince(t0)));
    }
    return r;
}

Report runRelations(const Options& o, const std::string& only) {
    Report r{"relations", {}, {}};
    if (only.empty())
        for (auto& m : baseRelationChecks(o.policy)) r.checks.push_back(fromMatrix(m));
    for (auto& m : relationSuite(o.policy, o.maxTotalLen, o.randomCount, 4, only)) r.checks.push_back(fromMatrix(m));
    return r;
}

Report runShifts(const Options& o) {
    Report r{"shifts", {}, {}};
    const int lenA = o.maxWordLen >= 0 ? o.maxWordLen : 3;
    const int lenB = o.maxWordLen >= 0 ? std::max(0, o.maxWordLen - 1) : 2;
    for (auto& m : shiftSuite(o.policy, lenA, lenB)) r.checks.push_back(fromMatrix(m));
    return r;
}

Report runEquivariance(const Options& o) {
    Report r{"equivariance", {}, {}};
    for (auto& m : equivarianceSuite(o.policy, o.maxWordLen >= 0 ? o.maxWordLen : 2)) r.checks.push_back(fromMatrix(m));
    return r;
}

Report runAppendix(const std::string& family) {
    Report r{"appendix", {}, {}};
    if (family.empty() || family == "pslz") {
        if (family.empty()) addChains(r, appendixSuite());
        addChains(r, pslzSuite());
    } else {
        addChains(r, appendixSuite(family));
    }
    if (r.checks.empty()) throw CLI::ValidationError("--family", "no chains for family " + family);
    return r;
}

Report runCasimir() {
    Report r{"casimir", {}, {}};
    addChains(r, casimirSuite());
    return r;
}

Report runPsi0(const Options& o) {
    Report r{"psi0", {}, {}};
    auto t0 = std::chrono::steady_clock::now();
    Psi0Report p = psi0Checks(o.policy);
    for (auto& m : p.relations) r.checks.push_back(fromMatrix(m));
    r.checks.push_back({"spanning-rank", Tier::Numeric, 0, p.rank == 9, msSince(t0)});
    r.checks.push_back(fromMatrix(p.limit));
    r.notes.push_back("rank " + std::to_string(p.rank) + " (printed Psi0(O_A) gives " +
                      std::to_string(p.printedRank) + ")");
    return r;
}

Report runLaumon(const Options& o, int i, int j, const std::string& mode, const LaumonOptions& lo) {
    Report r{"laumon", {}, {}};
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            if ((i == 0 || i == a) && (j == 0 || j == b)) pairs.push_back({a, b});
    auto t0 = std::chrono::steady_clock::now();
    ConjectureReport rep = conjectureCheck(pairs, mode, lo, o.policy);
    const double ms = msSince(t0) / std::max<size_t>(1, rep.entries.size());
    bool unstable = false;
    for (size_t n = 0; n < rep.entries.size(); ++n) {
        auto& e = rep.entries[n];
        const size_t pt = n % rep.points.size();
        std::string id = "psi" + std::to_string(e.i) + std::to_string(e.j) + "@pt" + std::to_string(pt);
        r.checks.push_back({id, Tier::Numeric, e.residual, e.pass, ms});
        char buf[200];
        std::snprintf(buf, sizeof buf, "%s f = %.10g%+.10gi psi = %.10g%+.10gi%s", id.c_str(), e.f.real(),
                      e.f.imag(), e.psi.real(), e.psi.imag(), e.stable ? "" : " (not stabilized)");
        r.notes.push_back(buf);
        if (mode == "series" && e.firstMismatchPHalf >= 0)
            r.notes.push_back(id + " first mismatch at p^" + std::to_string(e.firstMismatchPHalf) + "/2");
        if (mode == "numeric" && !e.stable) unstable = true;
    }
    if (unstable) {
        printf("%s: truncation did not stabilize\n", r.suite.c_str());
        for (auto& n : r.notes) printf("  %s\n", n.c_str());
        throw ConvergenceError("Laumon sum did not stabilize at the sample point");
    }
    return r;
}

Report runEigen(const Options& o, int k, XConvention conv) {
    Report r{"eigen", {}, {}};
    for (int kk = 1; kk <= 3; ++kk) {
        if (k && k != kk) continue;
        auto t0 = std::chrono::steady_clock::now();
        EigenReport rep = eigenRelationCheck(kk, o.policy, conv);
        const double ms = msSince(t0) / 3;
        for (auto& e : rep.entries)
            r.checks.push_back({"k" + std::to_string(e.k) + "/row" + std::to_string(e.i), e.zero.tier,
                                e.zero.residual, e.zero.zero, ms});
    }
    return r;
}

json policyJson(const Options& o) {
    return {{"seed", o.policy.seed},
            {"precision", o.policy.precisionDigits},
            {"tol", o.policy.tol},
            {"samples", o.policy.samples},
            {"max_product_index", o.policy.maxProductIndex},
            {"max_word_len", o.maxWordLen},
            {"max_total_len", o.maxTotalLen}};
}

int emit(const Report& r, const Options& o) {
    size_t passed = 0;
    for (auto& c : r.checks) {
        passed += c.pass;
        if (o.verbose || !c.pass)
            printf("  %-4s %-40s %-9s residual %.3g  %.1f ms\n", c.pass ? "ok" : "FAIL", c.id.c_str(),
                   tierName(c.tier), c.residual, c.ms);
    }
    for (auto& n : r.notes) printf("  note: %s\n", n.c_str());
    printf("%s: %zu/%zu checks pass: %s\n", r.suite.c_str(), passed, r.checks.size(), r.pass() ? "PASS" : "FAIL");
    if (!o.jsonPath.empty()) {
        json j;
        j["suite"] = r.suite;
        j["policy"] = policyJson(o);
        j["checks"] = json::array();
        for (auto& c : r.checks)
            j["checks"].push_back(
                {{"id", c.id}, {"tier", tierName(c.tier)}, {"residual", c.residual}, {"pass", c.pass}, {"ms", c.ms}});
        j["pass"] = r.pass();
        std::ofstream out(o.jsonPath);
        if (!out) throw std::runtime_error("cannot write " + o.jsonPath);
        out << j.dump(2) << "\n";
    }
    return r.pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification driver for the elliptic DAHA representation"};
    app.require_subcommand(1);
    // Global options may follow the subcommand too.
    app.fallthrough();
    Options o;
    app.add_option("--precision", o.policy.precisionDigits, "working precision in digits")->capture_default_str();
    app.add_option("--tol", o.policy.tol, "numeric zero tolerance")->capture_default_str();
    app.add_option("--samples", o.policy.samples, "sample points per numeric check")->capture_default_str();
    app.add_option("--seed", o.policy.seed, "sampling seed")->capture_default_str();
    app.add_option("--max-product-index", o.policy.maxProductIndex, "q-Pochhammer truncation")->capture_default_str();
    app.add_option("--max-word-len", o.maxWordLen, "word length bound for shifts and equivariance");
    app.add_option("--max-total-len", o.maxTotalLen, "exhaustive relator tuple length")->capture_default_str();
    app.add_option("--json", o.jsonPath, "write a JSON report");
    app.add_flag("-v,--verbose", o.verbose, "list passing checks too");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    verify->add_subcommand("sl2z", "braid relation, S-hat^2, S-hat^4");
    auto* rel = verify->add_subcommand("relations", "base relations and relator annihilation");
    std::string only;
    rel->add_option("--only", only, "restrict to one relator id");
    rel->add_option("--random", o.randomCount, "seeded tuples per relator id")->capture_default_str();
    verify->add_subcommand("shifts", "a-shift and b-identity");
    verify->add_subcommand("equivariance", "D_A conjugation and the S-hat flip");
    auto* app_ = verify->add_subcommand("appendix", "ideal-membership certificates");
    std::string family;
    app_->add_option("--family", family, "e.g. R6, mutual-inverse, pslz");
    verify->add_subcommand("casimir", "Casimir certificates");
    verify->add_subcommand("psi0", "the undeformed quotient");

    auto* laumon = app.add_subcommand("laumon", "Laumon comparisons");
    laumon->require_subcommand(1);
    auto* lcheck = laumon->add_subcommand("check", "compare the specialized f with psi_ij");
    int li = 0, lj = 0, sOrder = 4;
    std::string mode = "numeric", conv = "printed";
    LaumonOptions lo;
    lo.extraRandomPoint = false;
    bool randomPoint = false;
    lcheck->add_option("--i", li, "row, 0 for all")->check(CLI::Range(0, 3));
    lcheck->add_option("--j", lj, "column, 0 for all")->check(CLI::Range(0, 3));
    lcheck->add_option("--mode", mode)->check(CLI::IsMember({"numeric", "series"}))->capture_default_str();
    lcheck->add_option("--p", lo.p)->capture_default_str();
    lcheck->add_option("--s", lo.s)->capture_default_str();
    lcheck->add_option("--tol", lo.tol)->capture_default_str();
    lcheck->add_option("--p-order", lo.pOrder)->capture_default_str();
    lcheck->add_option("--s-order", sOrder, "accepted; s is held at its sample value");
    lcheck->add_option("--max-boxes", lo.maxBoxes)->capture_default_str();
    lcheck->add_flag("--random-point", randomPoint, "add the seeded random sample");
    lcheck->add_option("--x-convention", conv)->check(CLI::IsMember({"printed", "squared"}));
    auto* leigen = laumon->add_subcommand("eigen", "O_B^(1) eigen-relation for psi");
    int k = 0;
    leigen->add_option("--k", k, "0 for all")->check(CLI::Range(0, 3));
    leigen->add_option("--x-convention", conv)->check(CLI::IsMember({"printed", "squared"}));

    auto* eval = app.add_subcommand("eval", "evaluate an expression");
    std::string expr;
    eval->add_option("expression", expr)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        o.policy.validate();
        const XConvention xc = conv == "squared" ? XConvention::Squared : XConvention::Printed;
        if (*eval) {
            std::cout << evalExpression(expr).str() << "\n";
            return 0;
        }
        Report r;
        if (*verify) {
            if (verify->got_subcommand("sl2z")) r = runSl2z(o);
            else if (verify->got_subcommand("relations")) r = runRelations(o, only);
            else if (verify->got_subcommand("shifts")) r = runShifts(o);
            else if (verify->got_subcommand("equivariance")) r = runEquivariance(o);
            else if (verify->got_subcommand("appendix")) r = runAppendix(family);
            else if (verify->got_subcommand("casimir")) r = runCasimir();
            else r = runPsi0(o);
        } else if (*lcheck) {
            lo.extraRandomPoint = randomPoint;
            lo.conv = xc;
            r = runLaumon(o, li, lj, mode, lo);
        } else {
            r = runEigen(o, k, xc);
        }
        return emit(r, o);
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DidNotConverge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const TruncationUnstable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
