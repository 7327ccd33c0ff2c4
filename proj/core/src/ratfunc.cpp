#include "edaha/corering.hpp"

namespace edaha {

namespace {

LaurentPoly monoInverse(const LaurentPoly& u) {
    auto [e, c] = u.leading();
    return LaurentPoly::monomial(-e, c.inverse());
}

}  // namespace

void RatFunc::normalize() {
    if (num_.isZero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        LaurentPoly P = it->first.poly();
        while (it->second > 0) {
            auto q = divideExact(num_, P);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        if (it->second <= 0) it = den_.erase(it);
        else ++it;
    }
}

RatFunc RatFunc::fraction(const LaurentPoly& n, const LaurentPoly& d) {
    auto f = factorCyclo(d);
    if (!f) throw NotAUnit("denominator is not a product of cyclotomic factors: " + d.str());
    return RatFunc(n * monoInverse(f->first), f->second);
}

RatFunc RatFunc::oneMinusPow(const Exp& e, long k) {
    if (k >= 0) return RatFunc(LaurentPoly::oneMinus(e).pow(unsigned(k)));
    OneMinusSplit sp = splitOneMinus(e);
    CycloDen den;
    for (auto& f : sp.factors) den[f] += int(-k);
    return RatFunc(monoInverse(sp.unit).pow(unsigned(-k)), den);
}

LaurentPoly RatFunc::denPoly() const {
    LaurentPoly d(1);
    for (auto& [f, m] : den_) d = d * f.poly().pow(unsigned(m));
    return d;
}

bool RatFunc::onlyQ() const {
    if (!num_.onlyQ()) return false;
    for (auto& [f, m] : den_)
        if (f.v[1] != 0 || f.v[2] != 0) return false;
    return true;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    if (a.den_ == b.den_) {
        RatFunc r;
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
        r.normalize();
        return r;
    }
    CycloDen d = a.den_;
    for (auto& [f, m] : b.den_) d[f] = std::max(d[f], m);
    auto lift = [&d](const RatFunc& x) {
        LaurentPoly n = x.num_;
        for (auto& [f, m] : d) {
            auto it = x.den_.find(f);
            int have = it == x.den_.end() ? 0 : it->second;
            if (m > have) n = n * f.poly().pow(unsigned(m - have));
        }
        return n;
    };
    RatFunc r;
    r.num_ = lift(a) + lift(b);
    r.den_ = std::move(d);
    r.normalize();
    return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.isZero() || b.isZero()) return RatFunc();
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (auto& [f, m] : b.den_) r.den_[f] += m;
    if (!a.den_.empty() || !b.den_.empty()) r.normalize();
    return r;
}

RatFunc RatFunc::inverse() const {
    if (isZero()) throw NotAUnit("inverse of zero");
    auto f = factorCyclo(num_);
    if (!f) throw NotAUnit("numerator does not factor into cyclotomic pieces: " + num_.str());
    RatFunc r;
    r.num_ = denPoly() * monoInverse(f->first);
    r.den_ = f->second;
    r.normalize();
    return r;
}

RatFunc RatFunc::pow(long k) const {
    RatFunc base = k < 0 ? inverse() : *this;
    unsigned long n = k < 0 ? -k : k;
    RatFunc r(1);
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

RatFunc RatFunc::subst(const SL2Z& m) const {
    RatFunc r;
    r.num_ = num_.subst(m);
    for (auto& [f, mult] : den_) {
        auto [u, g] = orientFactor(m.apply(f.v), f.e);
        r.num_ = r.num_ * monoInverse(u).pow(unsigned(mult));
        r.den_[g] += mult;
    }
    r.normalize();
    return r;
}

std::string RatFunc::str() const {
    if (den_.empty()) return num_.str();
    auto [n, ds] = toOneMinusForm(num_, den_);
    std::string s = "(" + n.str() + ")/(";
    for (size_t k = 0; k < ds.size(); ++k) {
        if (k) s += "*";
        s += "(1 - " + expStr(ds[k]) + ")";
    }
    return s + ")";
}

RatFunc deltaQ() { return RatFunc(LaurentPoly::Q(2) - LaurentPoly::Q(-2)); }

LaurentPoly eightQ() { return LaurentPoly::Q(8) - LaurentPoly::Q(-8); }

}  // namespace edaha
