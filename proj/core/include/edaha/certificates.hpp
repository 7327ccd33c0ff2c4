#pragma once
// Certificate chains over the free algebra, read from fixture files.
//
// Expression syntax: A[w], B[w] generators; R4A[w], R2[w1,w2,w3] relators;
// IdemR[g; h1,...] and IdemL[g; h1,...] cancellation elements; eA, eB, C;
// a(...), ai(...), b(...), bi(...), s(...) automorphisms; $name definitions;
// juxtaposition multiplies, "/" divides by scalars, "^n" takes powers.

#include "edaha/freealgebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace edaha {

struct LemmaUse {
    bool right = true;
    FreeWord g;
    std::vector<FreeWord> hs;
};

struct ExprError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// With dropIdeal, relator and lemma atoms outside automorphisms evaluate to 0,
// so the value changes only by an element of the ideal.
NCPoly evalNCExpr(const std::string& text, bool dropIdeal = false,
                  const std::map<std::string, std::string>& defs = {}, std::vector<LemmaUse>* lemmas = nullptr);

// "eq" steps must agree exactly in F; "mod" steps after dropping ideal atoms.
struct ChainStep {
    std::string rel;
    std::string expr;
};

// A step whose printed form is kept next to the corrected one.
struct Correction {
    int step = 0;
    std::string printed;
    std::string note;
};

struct Chain {
    std::string id;
    std::string family;
    std::map<std::string, std::string> defs;
    std::vector<ChainStep> steps;
    std::vector<Correction> corrections;
};

struct ChainResult {
    std::string id;
    std::string family;
    bool pass = false;
    int failedStep = -1;
    std::string message;
    size_t lemmasChecked = 0;
    double ms = 0;
    std::vector<std::string> corrections;
    bool printedFails = true;  // every printed variant is rejected
};

// Corrected chains are also re-run with each printed step substituted back.
ChainResult checkChain(const Chain& c);
Chain printedVariant(const Chain& c, const Correction& k);
std::vector<Chain> loadChains(const std::string& path);
std::string dataDir();

// Fixture-backed suites; family filters the appendix set (e.g. "R6").
std::vector<ChainResult> appendixSuite(const std::string& family = "");
std::vector<ChainResult> casimirSuite();
std::vector<ChainResult> pslzSuite();

}  // namespace edaha
