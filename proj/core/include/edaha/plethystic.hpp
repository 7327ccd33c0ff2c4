#pragma once
// Formal fractions, the plethystic exponential, and the ring of pexp expressions.

#include "edaha/corering.hpp"

#include <string>
#include <vector>

namespace edaha {

// (mu : 1 - x^{d_1} : ... : 1 - x^{d_n}) with x^d = p^a s^b.
struct FormalFraction {
    LaurentPoly num;
    std::vector<Exp> den;

    FormalFraction() = default;
    FormalFraction(LaurentPoly n, std::vector<Exp> d = {});
    // Integer (a,b) denominator vectors.
    static FormalFraction ps(LaurentPoly n, std::vector<std::pair<int, int>> d);

    // Value in the localized module, reduced and with oriented factors.
    RatFunc value() const;
    std::string str() const;
};

struct InvalidFraction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Unique reduced representative, denominators written as (1 - x^n) products.
FormalFraction canonicalize(const FormalFraction& f);
FormalFraction fromValue(const RatFunc& v);
bool fractionEqual(const FormalFraction& f, const FormalFraction& g);
FormalFraction operator+(const FormalFraction& f, const FormalFraction& g);
FormalFraction operator-(const FormalFraction& f);

// pexp(c z : empty) = (1 - z)^c for every term c z of a polynomial.
RatFunc foldPolynomial(const LaurentPoly& p);

class RingElement {
public:
    struct Term {
        RatFunc atom;  // reduced fraction; zero for the rational term
        RatFunc pref;
        LaurentPoly denPoly;
    };

    RingElement() = default;
    RingElement(long c) : RingElement(RatFunc(c)) {}
    RingElement(const GaussRat& c) : RingElement(RatFunc(c)) {}
    RingElement(const RatFunc& c);
    RingElement(const LaurentPoly& c) : RingElement(RatFunc(c)) {}

    static RingElement pexp(const FormalFraction& f);
    static RingElement pexpValue(const RatFunc& v);

    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool isZero() const { return terms_.empty(); }
    bool isRational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].atom.isZero()); }
    RatFunc rationalValue() const;  // requires isRational
    bool isUnit() const { return terms_.size() == 1; }
    // True if no atom and no prefactor involves p or s.
    bool psFree() const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
    RingElement scaled(const RatFunc& c) const;

    RingElement inverseUnit() const;
    RingElement shift(const SL2Z& m) const;
    // Exact structural identity after merging (fast path of the zero test).
    friend bool operator==(const RingElement& a, const RingElement& b) { return (a - b).isZero(); }

    std::string str() const;

private:
    void addTerm(const RatFunc& atom, const RatFunc& pref);
    std::vector<Term> terms_;
};

}  // namespace edaha
