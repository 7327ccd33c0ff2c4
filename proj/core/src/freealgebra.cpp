#include "edaha/freealgebra.hpp"

#include <functional>

namespace edaha {

std::string Gen::str() const { return std::string(1, familyChar(family)) + "[" + label.str() + "]"; }

NCPoly::NCPoly(const RatFunc& c) {
    if (!c.isZero()) terms_[{}] = c;
}

NCPoly NCPoly::gen(Family f, const FreeWord& w) {
    NCPoly r;
    r.terms_[{Gen(f, w)}] = RatFunc(1);
    return r;
}

bool NCPoly::isScalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

RatFunc NCPoly::scalar() const {
    if (!isScalar()) throw std::logic_error("NCPoly::scalar: not a scalar");
    return terms_.empty() ? RatFunc() : terms_.begin()->second;
}

void NCPoly::addTerm(const Word& w, const RatFunc& c) {
    if (c.isZero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (auto& [w, c] : o.terms_) addTerm(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (auto& [w, c] : o.terms_) addTerm(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (auto& [u, x] : a.terms_)
        for (auto& [v, y] : b.terms_) {
            NCPoly::Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            r.addTerm(w, x * y);
        }
    return r;
}

NCPoly NCPoly::scaled(const RatFunc& c) const {
    if (c.isZero()) return {};
    NCPoly r = *this;
    for (auto& [w, x] : r.terms_) x = x * c;
    return r;
}

std::string NCPoly::str(size_t maxTerms) const {
    if (terms_.empty()) return "0";
    std::string s;
    size_t n = 0;
    for (auto& [w, c] : terms_) {
        if (maxTerms && n++ == maxTerms) {
            s += " + ... (" + std::to_string(terms_.size()) + " terms)";
            break;
        }
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        for (auto& g : w) s += " " + g.str();
    }
    return s;
}

RatFunc delta() { return deltaQ(); }
RatFunc kappa2() { return deltaQ() * deltaQ(); }

std::string RelatorInstance::str() const {
    std::string s = "R" + id + "[";
    for (size_t i = 0; i < words.size(); ++i) s += (i ? ", " : "") + words[i].str();
    return s + "]";
}

const std::vector<std::string>& relatorIds() {
    static const std::vector<std::string> ids{"0A", "0B", "1A", "1B", "2", "3", "4A", "4B",
                                              "5A", "5B", "6", "7", "8", "9", "10", "11"};
    return ids;
}

int relatorArity(const std::string& id) {
    if (id == "2" || id == "3") return 3;
    if (id == "8" || id == "9" || id == "10" || id == "11") return 2;
    for (auto& k : relatorIds())
        if (k == id) return 1;
    throw std::invalid_argument("unknown relator R" + id);
}

namespace {

NCPoly O(Family f, const FreeWord& w) { return NCPoly::gen(f, w); }
FreeWord W(const std::string& s) { return FreeWord::parse(s); }

}  // namespace

NCPoly relator(const std::string& id, const std::vector<FreeWord>& ws) {
    if (int(ws.size()) != relatorArity(id))
        throw ArityMismatch("R" + id + " takes " + std::to_string(relatorArity(id)) + " words");
    const Family A = Family::A, B = Family::B;
    const NCPoly k2(kappa2());
    const FreeWord one;
    auto X = [&](char c) { return c == 'A' ? A : B; };
    if (id == "0A") return O(A, W("a") * ws[0]) - O(A, ws[0]);
    if (id == "0B") return O(B, W("b") * ws[0]) - O(B, ws[0]);
    if (id == "1A" || id == "1B") {
        Family f = X(id[1]);
        return O(f, ws[0]) * O(f, ws[0]) - O(f, one) * O(f, one);
    }
    if (id == "2") return O(B, ws[0]) * O(A, ws[1]) * O(B, ws[2]);
    if (id == "3") return O(A, ws[0]) * O(B, ws[1]) * O(A, ws[2]);
    if (id == "4A" || id == "4B") {
        Family f = X(id[1]);
        return O(f, one) * O(f, one) * O(f, ws[0]) + k2 * O(f, ws[0]);
    }
    if (id == "5A" || id == "5B") {
        Family f = X(id[1]);
        return O(f, ws[0]) * O(f, one) * O(f, one) + k2 * O(f, ws[0]);
    }
    if (id == "6" || id == "7") {
        Family x = id == "6" ? A : B, y = other(x);
        return O(x, one) * O(x, one) * O(y, ws[0]) + k2 * O(y, ws[0]) + O(y, ws[0]) * O(x, one) * O(x, one);
    }
    const FreeWord& g1 = ws[0];
    const FreeWord& g2 = ws[1];
    if (id == "8" || id == "10") {
        FreeWord mid = id == "8" ? g1 * W("a b a") * g2 : g1 * W("a^-1 b^-1 a^-1") * g2;
        FreeWord side = (id == "8" ? W("a") : W("a^-1")) * g2;
        return O(A, g2) * O(A, mid) * O(B, side) + O(B, side) * O(A, mid) * O(A, g2) -
               O(B, g2) * O(B, sigma(g1) * g2) * O(B, g2);
    }
    FreeWord mid = id == "9" ? g1 * W("b a b") * g2 : g1 * W("b^-1 a^-1 b^-1") * g2;
    FreeWord side = (id == "9" ? W("b") : W("b^-1")) * g2;
    return O(B, g2) * O(B, mid) * O(A, side) + O(A, side) * O(B, mid) * O(B, g2) -
           O(A, g2) * O(A, sigma(g1) * g2) * O(A, g2);
}

namespace {

using GenMap = std::function<NCPoly(const Gen&)>;

NCPoly substitute(const NCPoly& x, const GenMap& img) {
    std::map<Gen, NCPoly> memo;
    NCPoly r;
    for (auto& [w, c] : x.terms()) {
        NCPoly t(c);
        for (auto& g : w) {
            auto it = memo.find(g);
            if (it == memo.end()) it = memo.emplace(g, img(g)).first;
            t = t * it->second;
        }
        r += t;
    }
    return r;
}

NCPoly autoA(const Gen& g, bool inverse) {
    const NCPoly A1 = NCPoly::A("1");
    const RatFunc d = delta();
    const FreeWord shiftW = FreeWord::letter("a", inverse ? 1 : -1);
    const FreeWord lab = g.label * shiftW;
    if (g.family == Family::A) return (A1 * O(Family::A, lab) * A1).scaled(-kappa2().inverse());
    const NCPoly Bg = O(Family::B, lab);
    const RatFunc q(LaurentPoly::Q(1)), qi(LaurentPoly::Q(-1));
    NCPoly r = inverse ? A1 * Bg * NCPoly(-qi) + Bg * A1 * NCPoly(q) : A1 * Bg * NCPoly(q) - Bg * A1 * NCPoly(qi);
    return r.scaled(d.inverse());
}

NCPoly autoS(const Gen& g) { return O(other(g.family), sigma(g.label)); }

}  // namespace

NCPoly applyAuto(const std::string& name, const NCPoly& x) {
    if (name == "s") return substitute(x, autoS);
    if (name == "a") return substitute(x, [](const Gen& g) { return autoA(g, false); });
    if (name == "a_inv" || name == "ai" || name == "at")
        return substitute(x, [](const Gen& g) { return autoA(g, true); });
    if (name == "b") return applyAuto("s", applyAuto("a", applyAuto("s", x)));
    if (name == "b_inv" || name == "bi") return applyAuto("s", applyAuto("a_inv", applyAuto("s", x)));
    throw std::invalid_argument("unknown automorphism: " + name);
}

NCPoly idempotentA() {
    const NCPoly A1 = NCPoly::A("1");
    return (A1 * A1).scaled(-kappa2().inverse());
}

NCPoly idempotentB() {
    const NCPoly B1 = NCPoly::B("1");
    return (B1 * B1).scaled(-kappa2().inverse());
}

NCPoly casimir() {
    const NCPoly eA = idempotentA(), eB = idempotentB();
    return eB * eA - eA - eB + NCPoly(1);
}

CertResult certificateCheck(const Certificate& c) {
    NCPoly r = c.lhs;
    for (auto& t : c.combination) r -= (t.left * relator(t.rel) * t.right).scaled(t.coeff);
    return {r.isZero(), r};
}

namespace {

NCPoly Bstring(const std::vector<FreeWord>& hs, size_t from, size_t to) {
    NCPoly r(1);
    for (size_t i = from; i < to; ++i) r = r * O(Family::B, hs[i]);
    return r;
}

void cancellationTerms(bool right, const FreeWord& g, const std::vector<FreeWord>& hs, std::vector<CertTerm>& out,
                       const RatFunc& sign, const NCPoly& L, const NCPoly& R) {
    const size_t n = hs.size();
    const NCPoly A1 = NCPoly::A("1");
    const FreeWord one;
    if (right) {
        if (n == 0) {
            out.push_back({sign, L, {"5A", {g}}, R});
        } else if (n == 1) {
            out.push_back({sign, L, {"3", {g, hs[0], one}}, A1 * R});
        } else {
            // L(n) = X' R6[h_n] - L(n-1) B[h_n]
            NCPoly X = O(Family::A, g) * Bstring(hs, 0, n - 1);
            out.push_back({sign, L * X, {"6", {hs[n - 1]}}, R});
            std::vector<FreeWord> shorter(hs.begin(), hs.end() - 1);
            cancellationTerms(right, g, shorter, out, -sign, L, O(Family::B, hs[n - 1]) * R);
        }
    } else {
        if (n == 0) {
            out.push_back({sign, L, {"4A", {g}}, R});
        } else if (n == 1) {
            out.push_back({sign, L * A1, {"3", {one, hs[0], g}}, R});
        } else {
            // M(n) = R6[h_1] Y - B[h_1] M(n-1)
            NCPoly Y = Bstring(hs, 1, n) * O(Family::A, g);
            out.push_back({sign, L, {"6", {hs[0]}}, Y * R});
            std::vector<FreeWord> shorter(hs.begin() + 1, hs.end());
            cancellationTerms(right, g, shorter, out, -sign, L * O(Family::B, hs[0]), R);
        }
    }
}

}  // namespace

NCPoly idempotentCancellation(bool right, const FreeWord& g, const std::vector<FreeWord>& hs) {
    const NCPoly A1 = NCPoly::A("1");
    const NCPoly Bs = Bstring(hs, 0, hs.size());
    const NCPoly Ag = O(Family::A, g);
    NCPoly main = right ? Ag * Bs * A1 * A1 : A1 * A1 * Bs * Ag;
    if (hs.size() % 2 == 0) main += (right ? Ag * Bs : Bs * Ag).scaled(kappa2());
    return main;
}

Certificate idempotentCancellationCertificate(bool right, const FreeWord& g, const std::vector<FreeWord>& hs) {
    Certificate c;
    c.id = std::string(right ? "idem-right" : "idem-left") + "/n=" + std::to_string(hs.size());
    c.lhs = idempotentCancellation(right, g, hs);
    cancellationTerms(right, g, hs, c.combination, RatFunc(1), NCPoly(1), NCPoly(1));
    return c;
}

}  // namespace edaha
