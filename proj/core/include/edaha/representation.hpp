#pragma once
// The matrices O_A^(g), O_B^(g), the homomorphism Psi on the free algebra and
// the checks that it kills the relators and intertwines the automorphisms.

#include "edaha/freealgebra.hpp"
#include "edaha/operators.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace edaha {

// c_+ for sign > 0, c_- otherwise. Each (1 + x) factor of the denominator is
// stored as (1 - x^2)/(1 - x).
RingElement auxC(int sign, const FreeWord& h, const FreeWord& g);
FormalFraction auxCFraction(int sign, const FreeWord& h, const FreeWord& g);
// Dual constant: c_(sigma h, sigma g) at (p,s) -> (s, 1/p).
RingElement auxCTilde(int sign, const FreeWord& h, const FreeWord& g);

// Memo of generator images keyed by canonical label. Append-only.
class GeneratorCache {
public:
    Mat3R get(Family f, const FreeWord& w);
    size_t size() const;
    void clear();

private:
    Mat3R compute(Family f, const FreeWord& label);
    mutable std::recursive_mutex mu_;
    std::map<std::pair<Family, FreeWord>, Mat3R> memo_;
};

GeneratorCache& defaultCache();
Mat3R oMatrix(Family f, const FreeWord& w, GeneratorCache& cache = defaultCache());
Mat3R psi(const NCPoly& x, GeneratorCache& cache = defaultCache());

struct MatrixCheck {
    std::string label;
    std::vector<EntryCheck> entries;
    bool pass = false;
    double ms = 0;

    Tier tier() const;  // worst tier over entries
    double residual() const;
};

MatrixCheck checkZeroMatrix(const std::string& label, const Mat3R& m, const NumericPolicy& policy,
                            std::uint64_t salt = 0);

// The six identities for g = 1.
std::vector<MatrixCheck> baseRelationChecks(const NumericPolicy& policy);

MatrixCheck verifyRelatorInstance(const RelatorInstance& r, const NumericPolicy& policy,
                                  GeneratorCache& cache = defaultCache());

// All tuples of total length <= maxTotal for every relator id, then randomCount
// seeded tuples of total length <= randomMaxTotal.
std::vector<RelatorInstance> relatorInstances(int maxTotal, int randomCount, int randomMaxTotal, std::uint64_t seed,
                                              const std::string& only = "");
std::vector<MatrixCheck> relationSuite(const NumericPolicy& policy, int maxTotal = 2, int randomCount = 25,
                                       int randomMaxTotal = 4, const std::string& only = "");

// a-shift O_A^(ga)(p,s) = O_A^(g)(ps,s) and the cross-multiplied b-identity
// S(1/s,p) O_A^(gb) = O_B^(sigma g)(p/s,p) S(1/s,p).
MatrixCheck aShiftCheck(const FreeWord& g, const NumericPolicy& policy);
MatrixCheck bIdentityCheck(const FreeWord& g, const NumericPolicy& policy);
std::vector<MatrixCheck> shiftSuite(const NumericPolicy& policy, int maxLenA = 3, int maxLenB = 2);

// Conjugation by D_A for both families, and S-hat O_B^(sigma g) = O_A^(g) S-hat.
MatrixCheck equivarianceACheck(const FreeWord& g, const NumericPolicy& policy);
MatrixCheck equivarianceBCheck(const FreeWord& g, const NumericPolicy& policy);
MatrixCheck sHatFlipCheck(const FreeWord& g, const NumericPolicy& policy);
std::vector<MatrixCheck> equivarianceSuite(const NumericPolicy& policy, int maxLen = 2);

// Undeformed quotient.
Mat3R psi0A();
Mat3R psi0APrinted();  // diag(-iD, 0, -iD) as displayed
Mat3R psi0B();

struct Psi0Report {
    std::vector<MatrixCheck> relations;
    int rank = 0;
    int printedRank = 0;
    MatrixCheck limit;  // p -> 0 of O_B^(1) minus psi0B
    bool pass = false;
};
Psi0Report psi0Checks(const NumericPolicy& policy);

// Numeric rank of the nine spanning words at a sample Q.
int spanningRank(const Mat3R& A, const Mat3R& B, const NumericPolicy& policy);

// Drops every atom to 1; valid where each atom's fraction vanishes at p = 0.
RingElement limitPToZero(const RingElement& x);

}  // namespace edaha
