#pragma once
// Partition sums for the affine Laumon character, the closed forms psi_ij and
// the checks relating them to O_B^(1).

#include "edaha/qpoch.hpp"

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace edaha {

using Partition = std::vector<int>;
using CD = std::complex<double>;

int partAt(const Partition& l, int i);  // 1-based, 0 past the end
int partSize(const Partition& l);
std::vector<Partition> partitionsOf(int n);

struct TruncationUnstable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient times a monomial on the half lattice.
struct Mono {
    GaussRat c{1};
    Exp e{0, 0, 0};

    static Mono q(int twiceExp, const GaussRat& c = GaussRat(1)) { return {c, {twiceExp, 0, 0}}; }
    friend Mono operator*(const Mono& a, const Mono& b);
    Mono inverse() const;
    CD eval(const SamplePoint& pt) const;
};

// Pochhammer: factors (x; q)_{l_b - l_{b+1}}, finite for finite partitions.
// Literal: plain (1 - x) factors over 1 <= a <= b <= bMax.
enum class NekReading { Pochhammer, Literal };

CD nekFactor(const Partition& lam, const Partition& mu, int k, CD u, CD q, CD kappa, int N,
             NekReading reading = NekReading::Pochhammer, int bMax = 0);

// Literal product at bMax and bMax + N; throws TruncationUnstable on drift above tol.
CD nekFactorLiteralMonitored(const Partition& lam, const Partition& mu, int k, CD u, CD q, CD kappa, int N, int bMax,
                             double tol);

struct LaumonParams {
    int N = 2;
    std::vector<Mono> xs, ys;
    Mono pSlot, sSlot, q, t;
    int maxBoxes = 60;
    int maxPHalf = 20;  // bound on the weight's p-degree, in half units
};

struct LaumonValue {
    CD value;
    std::map<int, CD> byPHalf;  // p^{k/2} coefficient at the sample's s and Q
    size_t tuples = 0;
    double drift = 0;  // change against the next-smaller truncation
    bool stable = false;
};

LaumonValue laumonF(const LaumonParams& params, const SamplePoint& pt, double tol);

// X_k = i Q^{k-2} as printed; Squared uses i Q^{2(k-2)}.
enum class XConvention { Printed, Squared };
Mono xValue(int k, XConvention conv = XConvention::Printed);

LaumonParams specialization(int i, int j, XConvention conv = XConvention::Printed);

RingElement psiClosed(int i, int j);

struct ConjectureEntry {
    int i = 0, j = 0;
    CD f, psi;
    double residual = 0;
    bool stable = false;
    bool pass = false;
    // Series mode: first p^{k/2} order with a mismatch, -1 if none up to the requested order.
    int firstMismatchPHalf = -1;
    std::map<int, std::pair<CD, CD>> coefficients;
};

struct ConjectureReport {
    std::string mode;
    std::vector<SamplePoint> points;
    std::vector<ConjectureEntry> entries;
    bool pass = false;
};

struct LaumonOptions {
    double p = 0.1, s = 0.15;
    bool extraRandomPoint = true;
    double tol = 1e-6;
    int pOrder = 2;  // series mode, integer p-order
    XConvention conv = XConvention::Printed;
    int maxBoxes = 60;
    int maxPHalf = 20;
};

ConjectureReport conjectureCheck(const std::vector<std::pair<int, int>>& pairs, const std::string& mode,
                                 const LaumonOptions& opts, const NumericPolicy& policy);

struct EigenEntry {
    int k = 0, i = 0;
    ZeroCheck zero;
};

struct EigenReport {
    int k = 0;
    XConvention conv = XConvention::Printed;
    std::vector<EigenEntry> entries;
    bool pass = false;
};

EigenReport eigenRelationCheck(int k, const NumericPolicy& policy, XConvention conv = XConvention::Printed);

// Samples at |p| = r, returns the largest |lhs - rhs| over i.
double eigenResidualAt(int k, const SamplePoint& pt, const NumericPolicy& policy, XConvention conv);

}  // namespace edaha
