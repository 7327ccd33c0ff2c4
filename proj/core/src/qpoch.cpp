#include "edaha/qpoch.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace edaha {

namespace bmp = boost::multiprecision;

void NumericPolicy::validate() const {
    if (precisionDigits <= 0) throw std::invalid_argument("precisionDigits must be positive");
    if (maxProductIndex < 10) throw std::invalid_argument("maxProductIndex must be >= 10");
    if (samples <= 0) throw std::invalid_argument("samples must be positive");
    if (!(tol > 0) || tol < std::pow(10.0, 3 - precisionDigits))
        throw std::invalid_argument("tol inconsistent with precision");
}

PrecisionScope::PrecisionScope(int digits) : old_(Real::default_precision()) {
    Real::default_precision(unsigned(digits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(old_); }

Cx cx(double re, double im) { return Cx(Real(re), Real(im)); }

double toDouble(const Real& r) { return r.convert_to<double>(); }

double absd(const Cx& z) { return toDouble(Real(abs(z))); }

namespace {

Real absr(const Cx& z) { return Real(abs(z)); }

Cx ipow(Cx b, long n) {
    if (n < 0) {
        b = Cx(1) / b;
        n = -n;
    }
    Cx r(1);
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

Real fromQ(const mpq_class& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Cx fromGauss(const GaussRat& c) {
    if (c.isReal()) return Cx(fromQ(c.re()));
    return Cx(fromQ(c.re()), fromQ(c.im()));
}

// Log-series tail: -sum_k z^k / (k prod (1 - x_i^k)).
Cx logSeries(const Cx& z, const std::vector<Cx>& xs, size_t from) {
    Real stop = pow(Real(10), -int(Real::default_precision()) - 5);
    Cx sum(0), zk(1);
    std::vector<Cx> xk(xs.begin() + from, xs.end());
    std::vector<Cx> xpow = xk;
    for (long k = 1; k < 100000; ++k) {
        zk *= z;
        Cx den(k);
        for (auto& x : xpow) den *= Cx(1) - x;
        Cx term = zk / den;
        sum += term;
        for (size_t i = 0; i < xpow.size(); ++i) xpow[i] *= xk[i];
        if (absr(term) < stop * (1 + absr(sum))) return -sum;
    }
    throw DidNotConverge("log series did not converge");
}

Cx pochV(Cx z, const std::vector<Cx>& xs, size_t from) {
    if (from == xs.size()) return Cx(1) - z;
    Cx r(1);
    const Real half(0.5);
    while (absr(z) >= half) {
        r *= pochV(z, xs, from + 1);
        z *= xs[from];
    }
    return r * exp(logSeries(z, xs, from));
}

Cx rectProduct(const Cx& z, const std::vector<Cx>& ps, size_t level, int M) {
    if (level == ps.size()) return Cx(1) - z;
    Cx r(1), w = z;
    for (int i = 0; i < M; ++i) {
        r *= rectProduct(w, ps, level + 1, M);
        w *= ps[level];
    }
    return r;
}

}  // namespace

SamplePoint SamplePoint::make(const Cx& Q, const Cx& p, const Cx& s) {
    return {Q, p, s, sqrt(Q), sqrt(p), sqrt(s)};
}

Cx evalMono(const Exp& e, const SamplePoint& pt) {
    Cx r(1);
    auto part = [&r](const Cx& full, const Cx& half, int d) {
        if (d == 0) return;
        if (d % 2 == 0) r *= ipow(full, d / 2);
        else r *= ipow(half, d);
    };
    part(pt.Q, pt.Qh, e[0]);
    part(pt.p, pt.ph, e[1]);
    part(pt.s, pt.sh, e[2]);
    return r;
}

Cx evalPoly(const LaurentPoly& f, const SamplePoint& pt) {
    Cx r(0);
    for (auto& [e, c] : f.terms()) r += fromGauss(c) * evalMono(e, pt);
    return r;
}

Cx evalRat(const RatFunc& f, const SamplePoint& pt) {
    Cx n = evalPoly(f.num(), pt);
    for (auto& [fac, m] : f.den()) n /= ipow(evalPoly(fac.poly(), pt), m);
    return n;
}

Cx pochEval(const Cx& z, const std::vector<Cx>& params, const NumericPolicy& policy) {
    Cx zz = z;
    std::vector<Cx> ps;
    int sign = 1;
    for (auto& p : params) {
        double a = absd(p);
        if (std::abs(a - 1) < 1e-12 || a == 0) throw OnUnitCircle("pochEval: |p| on the unit circle or zero");
        if (a > 1) {
            Cx pi = Cx(1) / p;
            zz *= pi;
            ps.push_back(pi);
            sign = -sign;
        } else {
            ps.push_back(p);
        }
    }
    const int M = policy.maxProductIndex;
    for (auto& p : ps) {
        Real last = absr(zz * ipow(p, M - 1));
        if (toDouble(last) > policy.tol) throw DidNotConverge("pochEval: tail factor exceeds tol");
    }
    Cx r = rectProduct(zz, ps, 0, M);
    return sign > 0 ? r : Cx(1) / r;
}

Cx pexpEval(const RatFunc& frac, const SamplePoint& pt, const NumericPolicy&) {
    if (frac.isZero()) return Cx(1);
    auto [num, ds] = toOneMinusForm(frac.num(), frac.den());
    std::vector<std::pair<Real, Cx>> xs;
    for (auto& d : ds) {
        Cx x = evalMono(d, pt);
        if (absr(x) > 1) {
            num = num * LaurentPoly::monomial(-d, GaussRat(-1));
            x = Cx(1) / x;
        }
        xs.push_back({absr(x), x});
    }
    std::sort(xs.begin(), xs.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<Cx> params;
    for (auto& [a, x] : xs) {
        if (a >= 1) throw NearUnitCircle("pexpEval: factor on the unit circle");
        params.push_back(x);
    }
    Cx r(1);
    for (auto& [e, c] : num.terms()) {
        if (!c.isReal() || c.re().get_den() != 1) throw InvalidFraction("pexp numerator needs integer coefficients");
        r *= ipow(pochV(evalMono(e, pt), params, 0), c.re().get_num().get_si());
    }
    return r;
}

Cx ringEval(const RingElement& x, const SamplePoint& pt, const NumericPolicy& policy) {
    Cx r(0);
    for (auto& t : x.terms()) r += evalRat(t.pref, pt) * pexpEval(t.atom, pt, policy);
    return r;
}

std::vector<SamplePoint> samplePoints(const NumericPolicy& policy, int count, std::uint64_t salt) {
    std::mt19937_64 rng(policy.seed ^ (salt * 0x9E3779B97F4A7C15ULL));
    std::uniform_real_distribution<double> arg(-M_PI, M_PI), ps(0.05, 0.35), lq(std::log(0.5), std::log(2.0));
    std::vector<SamplePoint> out;
    while (int(out.size()) < count) {
        double qr = std::exp(lq(rng)), qa = arg(rng);
        std::complex<double> Q = std::polar(qr, qa);
        bool bad = false;
        for (int k = 1; k <= 8 && !bad; ++k) bad = std::abs(std::pow(Q, k) - 1.0) < 0.1;
        if (std::abs(std::pow(Q, 4) + 1.0) < 0.1) bad = true;
        double pr = ps(rng), pa = arg(rng), sr = ps(rng), sa = arg(rng);
        if (bad) continue;
        out.push_back(SamplePoint::make(cx(Q.real(), Q.imag()), cx(pr * std::cos(pa), pr * std::sin(pa)),
                                        cx(sr * std::cos(sa), sr * std::sin(sa))));
    }
    return out;
}

bool pointValidFor(const RingElement& x, const SamplePoint& pt, double eps) {
    for (auto& t : x.terms()) {
        for (auto& [f, m] : t.atom.den())
            if (std::abs(absd(evalMono(f.v, pt)) - 1) < eps) return false;
        for (auto& [f, m] : t.pref.den())
            if (absd(evalPoly(f.poly(), pt)) < 1e-6) return false;
    }
    return true;
}

ZeroCheck zeroTest(const RingElement& x, const NumericPolicy& policy, std::uint64_t salt) {
    if (x.isZero()) return {true, Tier::Symbolic, 0};
    PrecisionScope scope(policy.precisionDigits + 10);
    std::vector<SamplePoint> pts;
    for (std::uint64_t k = 0; int(pts.size()) < policy.samples; ++k) {
        if (k > 2000) throw NearUnitCircle("zeroTest: no valid sample points");
        for (auto& pt : samplePoints(policy, 1, salt * 7919 + k))
            if (pointValidFor(x, pt, policy.eps)) pts.push_back(pt);
    }
    double worst = 0;
    for (auto& pt : pts) {
        Cx total(0);
        Real mag(0);
        for (auto& t : x.terms()) {
            Cx v = evalRat(t.pref, pt) * pexpEval(t.atom, pt, policy);
            total += v;
            mag += absr(v);
        }
        double res = toDouble(absr(total) / (mag > 1 ? mag : Real(1)));
        worst = std::max(worst, res);
    }
    return {worst < policy.tol, Tier::Numeric, worst};
}

}  // namespace edaha
