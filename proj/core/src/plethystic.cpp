#include "edaha/plethystic.hpp"

namespace edaha {

FormalFraction::FormalFraction(LaurentPoly n, std::vector<Exp> d) : num(std::move(n)), den(std::move(d)) {
    if (num.hasQZeroTerm()) throw InvalidFraction("numerator has a Q-degree zero term: " + num.str());
    for (auto& v : den)
        if (v[0] != 0 || isZeroExp(v)) throw InvalidFraction("bad denominator vector " + expStr(v));
}

FormalFraction FormalFraction::ps(LaurentPoly n, std::vector<std::pair<int, int>> d) {
    std::vector<Exp> v;
    for (auto [a, b] : d) v.push_back(ex(0, a, b));
    return FormalFraction(std::move(n), std::move(v));
}

RatFunc FormalFraction::value() const {
    LaurentPoly n = num;
    CycloDen d;
    for (auto& v : den) {
        OneMinusSplit sp = splitOneMinus(v);
        // 1/(u C...) = u^{-1}/C...
        auto [e, c] = sp.unit.leading();
        n = n.shifted(-e).scaled(c.inverse());
        for (auto& f : sp.factors) ++d[f];
    }
    return RatFunc(n, d);
}

FormalFraction fromValue(const RatFunc& v) {
    auto [n, ds] = toOneMinusForm(v.num(), v.den());
    return FormalFraction(n, ds);
}

FormalFraction canonicalize(const FormalFraction& f) { return fromValue(f.value()); }

std::string FormalFraction::str() const {
    std::string s = "(" + num.str();
    for (auto& d : den) s += " : 1 - " + expStr(d);
    return s + ")";
}

bool fractionEqual(const FormalFraction& f, const FormalFraction& g) {
    LaurentPoly a = f.num, b = g.num;
    for (auto& d : g.den) a = a * LaurentPoly::oneMinus(d);
    for (auto& d : f.den) b = b * LaurentPoly::oneMinus(d);
    return a == b;
}

FormalFraction operator+(const FormalFraction& f, const FormalFraction& g) {
    return fromValue(f.value() + g.value());
}

FormalFraction operator-(const FormalFraction& f) { return FormalFraction(-f.num, f.den); }

RatFunc foldPolynomial(const LaurentPoly& p) {
    RatFunc r(1);
    for (auto& [e, c] : p.terms()) {
        if (!c.isReal() || c.re().get_den() != 1)
            throw InvalidFraction("rational part of pexp needs integer coefficients: " + p.str());
        if (e[0] == 0) throw InvalidFraction("Q-degree zero term in pexp argument");
        r = r * RatFunc::oneMinusPow(e, c.re().get_num().get_si());
    }
    return r;
}

RingElement::RingElement(const RatFunc& c) {
    if (!c.isZero()) terms_.push_back({RatFunc(), c, LaurentPoly(1)});
}

RingElement RingElement::pexpValue(const RatFunc& v) {
    RingElement r;
    if (v.isPolynomial()) r.addTerm(RatFunc(), foldPolynomial(v.num()));
    else r.addTerm(v, RatFunc(1));
    return r;
}

RingElement RingElement::pexp(const FormalFraction& f) { return pexpValue(f.value()); }

void RingElement::addTerm(const RatFunc& atom, const RatFunc& pref) {
    if (pref.isZero()) return;
    if (!atom.isZero() && atom.isPolynomial()) {
        addTerm(RatFunc(), pref * foldPolynomial(atom.num()));
        return;
    }
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->atom.den() != atom.den()) continue;
        RatFunc extra(1);
        if (!(it->atom.num() == atom.num())) {
            auto q = divideExact(atom.num() - it->atom.num(), it->denPoly);
            if (!q) continue;
            extra = foldPolynomial(*q);
        }
        it->pref = it->pref + pref * extra;
        if (it->pref.isZero()) terms_.erase(it);
        return;
    }
    terms_.push_back({atom, pref, atom.denPoly()});
}

RatFunc RingElement::rationalValue() const {
    if (terms_.empty()) return RatFunc();
    if (!isRational()) throw std::logic_error("rationalValue: element has pexp atoms");
    return terms_[0].pref;
}

bool RingElement::psFree() const {
    for (auto& t : terms_)
        if (!t.atom.isZero() || !t.pref.onlyQ()) return false;
    return true;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& t : r.terms_) t.pref = -t.pref;
    return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    for (auto& t : o.terms_) addTerm(t.atom, t.pref);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    for (auto& t : o.terms_) addTerm(t.atom, -t.pref);
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    RingElement r;
    for (auto& x : a.terms_)
        for (auto& y : b.terms_) {
            RatFunc p = x.pref * y.pref;
            if (x.atom.isZero()) r.addTerm(y.atom, p);
            else if (y.atom.isZero()) r.addTerm(x.atom, p);
            else r.addTerm(x.atom + y.atom, p);
        }
    return r;
}

RingElement RingElement::scaled(const RatFunc& c) const {
    if (c.isZero()) return {};
    RingElement r = *this;
    for (auto& t : r.terms_) t.pref = t.pref * c;
    return r;
}

RingElement RingElement::inverseUnit() const {
    if (terms_.size() != 1) throw NotAUnit("inverseUnit: element has " + std::to_string(terms_.size()) + " terms");
    const Term& t = terms_[0];
    RingElement r;
    r.terms_.push_back({-t.atom, t.pref.inverse(), t.denPoly});
    return r;
}

RingElement RingElement::shift(const SL2Z& m) const {
    RingElement r;
    for (auto& t : terms_) r.addTerm(t.atom.subst(m), t.pref.subst(m));
    return r;
}

std::string RingElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& t : terms_) {
        if (!s.empty()) s += " + ";
        s += "[" + t.pref.str() + "]";
        if (!t.atom.isZero()) s += "*pexp" + fromValue(t.atom).str();
    }
    return s;
}

}  // namespace edaha
