#include "edaha/freegroup.hpp"

#include <cctype>
#include <cstdlib>

namespace edaha {

namespace {

void pushReduced(std::vector<Letter>& out, const Letter& l) {
    if (l.exp == 0) return;
    if (!out.empty() && out.back().sym == l.sym) {
        out.back().exp += l.exp;
        if (out.back().exp == 0) out.pop_back();
        return;
    }
    out.push_back(l);
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> ls) {
    for (auto& l : ls) pushReduced(ls_, l);
}

FreeWord FreeWord::parse(const std::string& text) {
    std::vector<Letter> ls;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == '*' || text[i] == '.')) ++i;
    };
    skip();
    if (text.substr(i) == "1") return {};
    while (i < text.size()) {
        std::string sym;
        if (text[i] == '~') sym += text[i++];
        if (i >= text.size() || !std::isalpha((unsigned char)text[i]))
            throw std::invalid_argument("bad word: " + text);
        sym += text[i++];
        // a and b are single letters; formal symbols may carry digits.
        if (sym != "a" && sym != "b" && sym != "~a" && sym != "~b")
            while (i < text.size() && std::isdigit((unsigned char)text[i])) sym += text[i++];
        if (sym == "~a") sym = "b";
        else if (sym == "~b") sym = "a";
        int e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool paren = i < text.size() && text[i] == '(';
            if (paren) ++i;
            size_t used = 0;
            e = std::stoi(text.substr(i), &used);
            i += used;
            if (paren) {
                if (i >= text.size() || text[i] != ')') throw std::invalid_argument("bad word: " + text);
                ++i;
            }
        }
        ls.push_back({sym, e});
        skip();
    }
    return FreeWord(ls);
}

bool FreeWord::formalFree() const {
    for (auto& l : ls_)
        if (l.formal()) return false;
    return true;
}

int FreeWord::length() const {
    int n = 0;
    for (auto& l : ls_) n += std::abs(l.exp);
    return n;
}

FreeWord FreeWord::inverse() const {
    std::vector<Letter> r(ls_.rbegin(), ls_.rend());
    for (auto& l : r) l.exp = -l.exp;
    return FreeWord(r);
}

FreeWord operator*(const FreeWord& u, const FreeWord& v) {
    FreeWord r = u;
    for (auto& l : v.ls_) pushReduced(r.ls_, l);
    return r;
}

FreeWord FreeWord::pow(int k) const {
    FreeWord base = k < 0 ? inverse() : *this, r;
    for (int i = 0; i < std::abs(k); ++i) r = r * base;
    return r;
}

std::string FreeWord::str() const {
    if (ls_.empty()) return "1";
    std::string s;
    for (auto& l : ls_) {
        if (!s.empty()) s += " ";
        s += l.sym;
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

std::string sigmaSym(const std::string& sym) {
    if (sym == "a") return "b";
    if (sym == "b") return "a";
    if (!sym.empty() && sym[0] == '~') return sym.substr(1);
    return "~" + sym;
}

FreeWord sigma(const FreeWord& w) {
    std::vector<Letter> r;
    for (auto& l : w.letters()) r.push_back({sigmaSym(l.sym), l.exp});
    return FreeWord(r);
}

SL2Z phi(const FreeWord& w) {
    SL2Z m;
    for (auto& l : w.letters()) {
        if (l.formal()) throw FormalSymbolPresent("phi: formal letter " + l.sym);
        SL2Z g = l.sym == "a" ? SL2Z{1, -l.exp, 0, 1} : SL2Z{1, 0, l.exp, 1};
        m = m * g;
    }
    return m;
}

std::optional<std::vector<SpecialBlock>> decomposeSpecial(const FreeWord& w, char type) {
    if (!w.formalFree()) throw FormalSymbolPresent("decomposeSpecial: " + w.str());
    const std::string lead = type == 'B' ? "b" : "a";
    std::vector<SpecialBlock> out;
    const auto& ls = w.letters();
    size_t i = 0;
    if (!ls.empty() && ls[0].sym != lead) return std::nullopt;
    while (i < ls.size()) {
        // ls[i] is a lead letter with exponent e; split into |e| blocks.
        int e = ls[i].exp;
        int step = e > 0 ? 1 : -1;
        for (int j = 0; j < std::abs(e) - 1; ++j) out.push_back({step, 0});
        int k = 0;
        if (i + 1 < ls.size()) k = ls[i + 1].exp;
        out.push_back({step, k});
        i += k ? 2 : 1;
    }
    return out;
}

FreeWord recomposeSpecial(const std::vector<SpecialBlock>& blocks, char type) {
    const std::string lead = type == 'B' ? "b" : "a", tail = type == 'B' ? "a" : "b";
    std::vector<Letter> ls;
    for (auto& b : blocks) {
        ls.push_back({lead, b.eps});
        ls.push_back({tail, b.k});
    }
    return FreeWord(ls);
}

FreeWord canonicalLabel(Family f, const FreeWord& w) {
    const std::string lead = f == Family::A ? "a" : "b";
    const auto& ls = w.letters();
    if (!ls.empty() && ls[0].sym == lead) return FreeWord(std::vector<Letter>(ls.begin() + 1, ls.end()));
    return w;
}

std::vector<FreeWord> wordsUpTo(int n) {
    std::vector<FreeWord> out{FreeWord()};
    std::vector<FreeWord> frontier{FreeWord()};
    for (int len = 1; len <= n; ++len) {
        std::vector<FreeWord> next;
        for (auto& w : frontier)
            for (auto* s : {"a", "b"})
                for (int e : {1, -1}) {
                    auto& ls = w.letters();
                    if (!ls.empty() && ls.back().sym == s && ls.back().exp * e < 0) continue;
                    FreeWord v = w * FreeWord::letter(s, e);
                    next.push_back(v);
                }
        for (auto& v : next) out.push_back(v);
        frontier = std::move(next);
    }
    return out;
}

}  // namespace edaha
