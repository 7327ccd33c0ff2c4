#include "edaha/corering.hpp"

#include <algorithm>
#include <sstream>

namespace edaha {

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
}

GaussRat GaussRat::inverse() const {
    if (isZero()) throw std::domain_error("GaussRat: division by zero");
    if (sgn(im_) == 0) return GaussRat(1 / re_, 0);
    mpq_class n = re_ * re_ + im_ * im_;
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string GaussRat::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    if (sgn(re_) == 0) {
        if (im_ == 1) return "i";
        if (im_ == -1) return "-i";
        return im_.get_str() + "*i";
    }
    std::string s = "(" + re_.get_str();
    s += sgn(im_) > 0 ? "+" : "-";
    mpq_class a = abs(im_);
    s += (a == 1 ? std::string("i") : a.get_str() + "*i");
    return s + ")";
}

std::string SL2Z::str() const {
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return os.str();
}

LaurentPoly LaurentPoly::monomial(const Exp& e, const GaussRat& c) {
    LaurentPoly r;
    if (!c.isZero()) r.terms_[e] = c;
    return r;
}

bool LaurentPoly::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && isZeroExp(terms_.begin()->first));
}

GaussRat LaurentPoly::constantTerm() const {
    auto it = terms_.find(Exp{0, 0, 0});
    return it == terms_.end() ? GaussRat(0) : it->second;
}

bool LaurentPoly::onlyQ() const {
    for (auto& [e, c] : terms_)
        if (e[1] != 0 || e[2] != 0) return false;
    return true;
}

bool LaurentPoly::hasQZeroTerm() const {
    for (auto& [e, c] : terms_)
        if (e[0] == 0) return true;
    return false;
}

void LaurentPoly::addTerm(const Exp& e, const GaussRat& c) {
    if (c.isZero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.isZero() || b.isZero()) return r;
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) r.addTerm(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const GaussRat& c) const {
    if (c.isZero()) return {};
    LaurentPoly r = *this;
    for (auto& [e, x] : r.terms_) x *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exp& s) const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + s, c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly r(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

LaurentPoly LaurentPoly::dilate(int k) const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.addTerm(k * e, c);
    return r;
}

LaurentPoly LaurentPoly::subst(const SL2Z& m) const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.addTerm(m.apply(e), c);
    return r;
}

Exp LaurentPoly::minExp() const {
    Exp m = terms_.begin()->first;
    for (auto& [e, c] : terms_)
        for (int k = 0; k < 3; ++k) m[k] = std::min(m[k], e[k]);
    return m;
}

Exp LaurentPoly::maxExp() const {
    Exp m = terms_.begin()->first;
    for (auto& [e, c] : terms_)
        for (int k = 0; k < 3; ++k) m[k] = std::max(m[k], e[k]);
    return m;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0) return c;
        if (auto c = ia->second <=> ib->second; c != 0) return c;
    }
    if (ia == a.terms_.end()) return ib == b.terms_.end() ? std::strong_ordering::equal : std::strong_ordering::less;
    return std::strong_ordering::greater;
}

static std::string halfStr(int d) {
    if (d % 2 == 0) return std::to_string(d / 2);
    return "(" + std::to_string(d) + "/2)";
}

std::string expStr(const Exp& e) {
    static const char* names[3] = {"Q", "p", "s"};
    std::string s;
    for (int k = 0; k < 3; ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[k];
        if (e[k] != 2) s += "^" + halfStr(e[k]);
    }
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string m = expStr(e);
        std::string cs;
        bool neg = c.isReal() && sgn(c.re()) < 0;
        GaussRat a = neg ? -c : c;
        if (m.empty()) cs = a.str();
        else if (a == GaussRat(1)) cs = m;
        else cs = a.str() + "*" + m;
        if (first) s += neg ? "-" + cs : cs;
        else s += (neg ? " - " : " + ") + cs;
        first = false;
    }
    return s;
}

std::optional<LaurentPoly> divideExact(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.isZero()) throw std::domain_error("divideExact: zero divisor");
    if (f.isZero()) return LaurentPoly();
    if (g.isMonomial()) {
        auto [e, c] = g.leading();
        return f.shifted(-e).scaled(c.inverse());
    }
    // Exponents of the quotient are confined to a box.
    Exp fmin = f.minExp(), fmax = f.maxExp(), gmin = g.minExp(), gmax = g.maxExp();
    Exp lo = fmin - gmin, hi = fmax - gmax;
    for (int k = 0; k < 3; ++k)
        if (lo[k] > hi[k]) return std::nullopt;
    if (f.size() < 2) return std::nullopt;
    auto [ge, gc] = g.leading();
    GaussRat ginv = gc.inverse();
    LaurentPoly r = f, h;
    while (!r.isZero()) {
        auto [re, rc] = r.leading();
        Exp q = re - ge;
        for (int k = 0; k < 3; ++k)
            if (q[k] < lo[k] || q[k] > hi[k]) return std::nullopt;
        GaussRat qc = rc * ginv;
        h.addTerm(q, qc);
        for (auto& [e, c] : g.terms()) r.addTerm(e + q, -(c * qc));
    }
    return h;
}

}  // namespace edaha
