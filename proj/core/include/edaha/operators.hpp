#pragma once
// 3x3 matrices over the pexp ring, twisted difference operators and the
// SL(2,Z) relation checks.

#include "edaha/qpoch.hpp"

#include <array>
#include <string>
#include <vector>

namespace edaha {

class Mat3R {
public:
    Mat3R() = default;
    static Mat3R identity();
    static Mat3R diag(const RingElement& a, const RingElement& b, const RingElement& c);

    RingElement& operator()(int i, int j) { return e_[i][j]; }
    const RingElement& operator()(int i, int j) const { return e_[i][j]; }

    Mat3R& operator+=(const Mat3R& o);
    Mat3R& operator-=(const Mat3R& o);
    friend Mat3R operator+(Mat3R a, const Mat3R& b) { return a += b; }
    friend Mat3R operator-(Mat3R a, const Mat3R& b) { return a -= b; }
    friend Mat3R operator*(const Mat3R& a, const Mat3R& b);
    Mat3R scaled(const RingElement& c) const;
    Mat3R shift(const SL2Z& m) const;

    bool isZero() const;
    friend bool operator==(const Mat3R& a, const Mat3R& b) { return (a - b).isZero(); }
    std::string str() const;

private:
    std::array<std::array<RingElement, 3>, 3> e_;
};

// Common substitutions, written as (p,s) -> (p^a s^b, p^c s^d).
namespace shifts {
inline const SL2Z psS{1, 1, 0, 1};      // (ps, s)
inline const SL2Z pSoverP{1, 0, -1, 1}; // (p, s/p)
inline const SL2Z pOverS{1, -1, 0, 1};  // (p/s, s)
inline const SL2Z sPinv{0, 1, -1, 0};   // (s, 1/p)
inline const SL2Z sinvP{0, -1, 1, 0};   // (1/s, p)
inline const SL2Z inv{-1, 0, 0, -1};    // (1/p, 1/s)
}  // namespace shifts

// Matrix composed with a substitution of the elliptic parameters.
struct TwistedOperator {
    Mat3R matrix = Mat3R::identity();
    SL2Z shift;

    // (M1 o d1)(M2 o d2) = M1 d1(M2) o d1 d2; the substitution acting first on
    // exponents is the right factor's.
    friend TwistedOperator operator*(const TwistedOperator& x, const TwistedOperator& y);
    friend bool operator==(const TwistedOperator& x, const TwistedOperator& y) {
        return x.shift == y.shift && x.matrix == y.matrix;
    }
};

Mat3R matrixDA();
Mat3R matrixDAinv();
Mat3R matrixDB();
TwistedOperator buildDA();
TwistedOperator buildDB();
TwistedOperator buildS();

// Base generator images O_A^{(1)}, O_B^{(1)}.
Mat3R matrixOA1();
Mat3R matrixOB1();
// Matrix part of S-hat, D_A D_B(ps,s) D_A.
Mat3R matrixSmall();
// D_A D_B(ps,s) D_A^{-1}; does not satisfy the O_B^{(1)} consistency identity.
Mat3R matrixSmallLiteral();

struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EntryCheck {
    int i = 0, j = 0;
    ZeroCheck zero;
};

// Entrywise zero test; symbolic entries are cheap, the rest go numeric.
std::vector<EntryCheck> matZeroTest(const Mat3R& m, const NumericPolicy& policy, std::uint64_t salt = 0);
bool allZero(const std::vector<EntryCheck>& checks);

struct BraidResult {
    RingElement kappa;
    bool shiftsEqual = false;
    bool kappaPSFree = false;
    bool symbolic = false;          // every entry decided by the fast path
    std::vector<EntryCheck> entries;  // L - kappa R
    double numericResidual = 0;     // max |L - kappa R| over sample points
    bool pass = false;
};
BraidResult checkBraid(const NumericPolicy& policy);

struct SSquaredResult {
    TwistedOperator s2;
    Mat3R printed;
    std::vector<EntryCheck> entries;  // s2 - printed
    bool shiftOk = false;
    std::vector<std::string> notes;
    bool pass = false;
};
SSquaredResult checkSSquared(const NumericPolicy& policy);

struct SFourthResult {
    TwistedOperator s4;
    bool pass = false;
};
SFourthResult checkSFourth();

struct IdentityResult {
    std::string id;
    std::vector<EntryCheck> entries;
    bool pass = false;
};
// Names: "ob1-consistency", "dehn-twist-idempotent", "identity".
IdentityResult conjugationIdentityCheck(const std::string& id, const NumericPolicy& policy);
std::vector<std::string> conjugationIdentityNames();

// Max |entry| of a matrix at a sample point.
double matMaxAbs(const Mat3R& m, const SamplePoint& pt, const NumericPolicy& policy);

}  // namespace edaha
