#pragma once
// Exact scalars: Gaussian rationals, Laurent polynomials in (Q,p,s) on the
// half-integer lattice, and rational functions with factored denominators.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edaha {

class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v), im_(0) {}
    GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static GaussRat i() { return GaussRat(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool isReal() const { return sgn(im_) == 0; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);
    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    GaussRat inverse() const;

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b);
    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

// Doubled exponents of (Q, p, s): entry 2 means the first power.
using Exp = std::array<int, 3>;

inline Exp operator+(const Exp& a, const Exp& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Exp operator-(const Exp& a, const Exp& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Exp operator-(const Exp& a) { return {-a[0], -a[1], -a[2]}; }
inline Exp operator*(int k, const Exp& a) { return {k * a[0], k * a[1], k * a[2]}; }
inline bool isZeroExp(const Exp& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

// Integer-valued (Q,p,s) exponents, doubled for storage.
inline Exp ex(int q, int p = 0, int s = 0) { return {2 * q, 2 * p, 2 * s}; }

// Substitution (p,s) -> (p^a s^b, p^c s^d); acts on exponent rows by (i,j) -> (i,j)M.
struct SL2Z {
    long a = 1, b = 0, c = 0, d = 1;
    static SL2Z identity() { return {}; }
    long det() const { return a * d - b * c; }
    SL2Z inverse() const { return {d, -b, -c, a}; }
    friend SL2Z operator*(const SL2Z& x, const SL2Z& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const SL2Z&, const SL2Z&) = default;
    Exp apply(const Exp& e) const {
        return {e[0], int(e[1] * a + e[2] * c), int(e[1] * b + e[2] * d)};
    }
    std::string str() const;
};

class LaurentPoly {
public:
    using Terms = std::map<Exp, GaussRat>;

    LaurentPoly() = default;
    LaurentPoly(long c) { if (c) terms_[Exp{0, 0, 0}] = GaussRat(c); }
    LaurentPoly(const GaussRat& c) { if (!c.isZero()) terms_[Exp{0, 0, 0}] = c; }
    static LaurentPoly monomial(const Exp& e, const GaussRat& c = GaussRat(1));
    // Integer exponents (not doubled).
    static LaurentPoly mono(int q, int p = 0, int s = 0, const GaussRat& c = GaussRat(1)) {
        return monomial(ex(q, p, s), c);
    }
    static LaurentPoly Q(int k) { return mono(k); }
    static LaurentPoly oneMinus(const Exp& e) { return LaurentPoly(1) - monomial(e); }

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    bool isMonomial() const { return terms_.size() == 1; }
    size_t size() const { return terms_.size(); }
    GaussRat constantTerm() const;
    std::pair<Exp, GaussRat> leading() const { return *terms_.rbegin(); }
    // True if only the Q variable appears.
    bool onlyQ() const;
    bool hasQZeroTerm() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const GaussRat& c) const;
    LaurentPoly shifted(const Exp& e) const;
    LaurentPoly pow(unsigned n) const;
    // Frobenius-type map x -> x^k on all three variables.
    LaurentPoly dilate(int k) const;
    LaurentPoly subst(const SL2Z& m) const;
    void addTerm(const Exp& e, const GaussRat& c);

    // Componentwise min/max of exponents; poly must be nonzero.
    Exp minExp() const;
    Exp maxExp() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);
    std::string str() const;

private:
    Terms terms_;
};

// Exact quotient f/g when it exists in the Laurent ring.
std::optional<LaurentPoly> divideExact(const LaurentPoly& f, const LaurentPoly& g);

std::string expStr(const Exp& e);

// Cyclotomic factors C_e(x^v): C_1(x) = 1 - x, C_e = Phi_e for e >= 2, v primitive
// with its first nonzero entry positive.
struct CycloFactor {
    Exp v;
    int e = 1;
    friend auto operator<=>(const CycloFactor&, const CycloFactor&) = default;
    LaurentPoly poly() const;
    std::string str() const;
};

using CycloDen = std::map<CycloFactor, int>;

const std::vector<long>& cyclotomicCoeffs(int n);
int eulerPhi(int n);

// Splits d into primitive oriented direction v and positive multiple n, with sign
// +1 if d = n v and -1 if d = -n v.
struct Direction { Exp v; int n; int sign; };
Direction directionOf(const Exp& d);

// 1 - x^d = unit * prod C_e(x^v).
struct OneMinusSplit { LaurentPoly unit; std::vector<CycloFactor> factors; };
OneMinusSplit splitOneMinus(const Exp& d);

// C_e(x^{v'}) for arbitrary nonzero v': unit * C_e(x^{orient(v')}).
std::pair<LaurentPoly, CycloFactor> orientFactor(const Exp& v, int e);

// Writes N / prod C as N' / prod (1 - x^{n_i}) by greedy grouping per direction.
std::pair<LaurentPoly, std::vector<Exp>> toOneMinusForm(LaurentPoly num, const CycloDen& den);

// Factor f as unit * prod C_e(x^v)^m if possible.
std::optional<std::pair<LaurentPoly, CycloDen>> factorCyclo(const LaurentPoly& f);

struct NotAUnit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long c) : num_(c) {}
    RatFunc(const GaussRat& c) : num_(c) {}
    RatFunc(LaurentPoly n) : num_(std::move(n)) {}
    RatFunc(LaurentPoly n, CycloDen d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    // n / d with d required to factor into cyclotomic pieces.
    static RatFunc fraction(const LaurentPoly& n, const LaurentPoly& d);
    // (1 - x^e)^k for any integer k.
    static RatFunc oneMinusPow(const Exp& e, long k);

    const LaurentPoly& num() const { return num_; }
    const CycloDen& den() const { return den_; }
    LaurentPoly denPoly() const;
    bool isZero() const { return num_.isZero(); }
    bool isPolynomial() const { return den_.empty(); }
    bool isOne() const { return den_.empty() && num_ == LaurentPoly(1); }
    bool onlyQ() const;

    RatFunc operator-() const { RatFunc r = *this; r.num_ = -r.num_; return r; }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc inverse() const;
    RatFunc pow(long k) const;
    RatFunc subst(const SL2Z& m) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }
    std::string str() const;

private:
    void normalize();
    LaurentPoly num_;
    CycloDen den_;
};

// Common constants.
inline LaurentPoly Qpoly(int k) { return LaurentPoly::Q(k); }
// Q^2 - Q^{-2}
RatFunc deltaQ();
// Q^8 - Q^{-8}
LaurentPoly eightQ();

}  // namespace edaha
