#pragma once
// Arbitrary-precision evaluation of iterated q-Pochhammer symbols and of ring elements.

#include "edaha/plethystic.hpp"

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace edaha {

using Real = boost::multiprecision::mpfr_float;
using Cx = boost::multiprecision::number<
    boost::multiprecision::backends::complex_adaptor<boost::multiprecision::mpfr_float_backend<0>>>;

struct NumericPolicy {
    int precisionDigits = 50;
    int maxProductIndex = 80;
    double tol = 1e-30;
    int samples = 3;
    std::uint64_t seed = 20240601;
    double eps = 0.2;  // exclusion band around |x| = 1

    void validate() const;
};

struct OnUnitCircle : std::domain_error {
    using std::domain_error::domain_error;
};
struct DidNotConverge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NearUnitCircle : std::domain_error {
    using std::domain_error::domain_error;
};

// Sets the working precision for the lifetime of the guard.
class PrecisionScope {
public:
    explicit PrecisionScope(int digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned old_;
};

// Half-lattice monomials are evaluated through stored square roots.
struct SamplePoint {
    Cx Q, p, s;
    Cx Qh, ph, sh;
    static SamplePoint make(const Cx& Q, const Cx& p, const Cx& s);
};

Cx cx(double re, double im = 0);
double toDouble(const Real& r);
double absd(const Cx& z);

Cx evalMono(const Exp& e, const SamplePoint& pt);
Cx evalPoly(const LaurentPoly& f, const SamplePoint& pt);
Cx evalRat(const RatFunc& f, const SamplePoint& pt);

// Rectangular truncated product on the extended parameter range.
Cx pochEval(const Cx& z, const std::vector<Cx>& params, const NumericPolicy& policy);

// pexp of a reduced fraction value via the product rule and a log series.
Cx pexpEval(const RatFunc& frac, const SamplePoint& pt, const NumericPolicy& policy);
Cx ringEval(const RingElement& x, const SamplePoint& pt, const NumericPolicy& policy);

// Seeded draws with |p|,|s| in [0.05, 0.35] and 0.5 <= |Q| <= 2 away from low roots of unity.
std::vector<SamplePoint> samplePoints(const NumericPolicy& policy, int count, std::uint64_t salt = 0);
bool pointValidFor(const RingElement& x, const SamplePoint& pt, double eps);

enum class Tier { Symbolic, Numeric };
inline const char* tierName(Tier t) { return t == Tier::Symbolic ? "symbolic" : "numeric"; }

struct ZeroCheck {
    bool zero = false;
    Tier tier = Tier::Symbolic;
    double residual = 0;  // relative to max(1, sum of term magnitudes)
};

ZeroCheck zeroTest(const RingElement& x, const NumericPolicy& policy, std::uint64_t salt = 0);

}  // namespace edaha
