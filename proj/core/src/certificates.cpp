#include "edaha/certificates.hpp"

#include <json.hpp>

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>

namespace edaha {

namespace {

class NCParser {
public:
    NCParser(const std::string& s, bool drop, const std::map<std::string, std::string>& defs,
             std::vector<LemmaUse>* lemmas)
        : s_(s), drop_(drop), defs_(defs), lemmas_(lemmas) {}

    NCPoly run() {
        NCPoly r = expr();
        ws();
        if (i_ != s_.size()) fail("unexpected input");
        return r;
    }

private:
    const std::string& s_;
    size_t i_ = 0;
    bool drop_;
    int autoDepth_ = 0;
    const std::map<std::string, std::string>& defs_;
    std::vector<LemmaUse>* lemmas_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ExprError(msg + " at offset " + std::to_string(i_) + " in: " + s_.substr(0, 120));
    }
    void ws() {
        while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
    }
    bool peek(char c) {
        ws();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool startsPrimary() {
        ws();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return std::isalnum((unsigned char)c) || c == '(' || c == '$';
    }

    NCPoly expr() {
        NCPoly r;
        bool first = true;
        while (true) {
            int sign = 1;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else if (!first) break;
            NCPoly t = term();
            if (sign < 0) r -= t;
            else r += t;
            first = false;
        }
        return r;
    }

    NCPoly term() {
        NCPoly r = unary();
        while (true) {
            if (eat('*')) {
                r = r * unary();
            } else if (eat('/')) {
                NCPoly d = unary();
                if (!d.isScalar() || d.isZero()) fail("division by a non-scalar");
                r = r.scaled(d.scalar().inverse());
            } else if (startsPrimary()) {
                r = r * unary();
            } else {
                break;
            }
        }
        return r;
    }

    NCPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        NCPoly b = primary();
        if (eat('^')) {
            long e = integer();
            if (e < 0) {
                if (!b.isScalar() || b.isZero()) fail("negative power of a non-scalar");
                return NCPoly(b.scalar().pow(e));
            }
            NCPoly r(1);
            for (long k = 0; k < e; ++k) r = r * b;
            return r;
        }
        return b;
    }

    long integer() {
        ws();
        bool paren = eat('(');
        ws();
        size_t used = 0;
        long v;
        try {
            v = std::stol(s_.substr(i_), &used);
        } catch (...) {
            fail("expected integer");
        }
        i_ += used;
        if (paren) expect(')');
        return v;
    }

    std::string ident() {
        ws();
        size_t j = i_;
        while (j < s_.size() && (std::isalnum((unsigned char)s_[j]) || s_[j] == '_')) ++j;
        std::string r = s_.substr(i_, j - i_);
        i_ = j;
        return r;
    }

    // Raw bracket content split at ',' and ';'.
    std::vector<std::string> bracketArgs(char* sepSeen = nullptr) {
        expect('[');
        std::vector<std::string> out(1);
        while (i_ < s_.size() && s_[i_] != ']') {
            char c = s_[i_++];
            if (c == ',' || c == ';') {
                if (c == ';' && sepSeen) *sepSeen = ';';
                out.emplace_back();
            } else {
                out.back() += c;
            }
        }
        expect(']');
        return out;
    }

    static FreeWord word(const std::string& w) {
        std::string t = w;
        t.erase(0, t.find_first_not_of(' '));
        return t.empty() ? FreeWord() : FreeWord::parse(t);
    }

    NCPoly primary() {
        ws();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (std::isdigit((unsigned char)c)) return NCPoly(RatFunc(integer()));
        if (eat('(')) {
            NCPoly r = expr();
            expect(')');
            return r;
        }
        if (eat('$')) {
            std::string name = ident();
            auto it = defs_.find(name);
            if (it == defs_.end()) fail("undefined name $" + name);
            NCParser sub(it->second, drop_ && autoDepth_ == 0, defs_, lemmas_);
            return sub.run();
        }
        std::string id = ident();
        if (id.empty()) fail("expected a term");
        if (id == "Q") return NCPoly(RatFunc(LaurentPoly::Q(1)));
        if (id == "eA") return idempotentA();
        if (id == "eB") return idempotentB();
        if (id == "C") return casimir();
        if ((id == "A" || id == "B") && peek('[')) {
            auto args = bracketArgs();
            if (args.size() != 1) fail("generator takes one word");
            return NCPoly::gen(id == "A" ? Family::A : Family::B, word(args[0]));
        }
        if (id == "IdemR" || id == "IdemL") {
            char sep = 0;
            auto args = bracketArgs(&sep);
            LemmaUse u{id == "IdemR", word(args[0]), {}};
            for (size_t k = 1; k < args.size(); ++k) u.hs.push_back(word(args[k]));
            if (lemmas_) lemmas_->push_back(u);
            if (drop_ && autoDepth_ == 0) return {};
            return idempotentCancellation(u.right, u.g, u.hs);
        }
        if (id.size() > 1 && id[0] == 'R' && peek('[')) {
            std::string rid = id.substr(1);
            auto args = bracketArgs();
            std::vector<FreeWord> ws;
            for (auto& a : args) ws.push_back(word(a));
            NCPoly val = relator(rid, ws);
            if (drop_ && autoDepth_ == 0) return {};
            return val;
        }
        if (peek('(')) {
            static const std::vector<std::string> autos{"a", "ai", "at", "a_inv", "b", "bi", "b_inv", "s"};
            if (std::find(autos.begin(), autos.end(), id) == autos.end()) fail("unknown function " + id);
            expect('(');
            ++autoDepth_;
            NCPoly arg = expr();
            --autoDepth_;
            expect(')');
            return applyAuto(id, arg);
        }
        fail("unknown identifier " + id);
    }
};

}  // namespace

NCPoly evalNCExpr(const std::string& text, bool dropIdeal, const std::map<std::string, std::string>& defs,
                  std::vector<LemmaUse>* lemmas) {
    NCParser p(text, dropIdeal, defs, lemmas);
    return p.run();
}

namespace {

ChainResult checkSteps(const Chain& c);

}  // namespace

Chain printedVariant(const Chain& c, const Correction& k) {
    Chain v = c;
    v.corrections.clear();
    if (k.step <= 0 || k.step >= int(v.steps.size())) throw ExprError("correction step out of range");
    v.steps[k.step].expr = k.printed;
    return v;
}

ChainResult checkChain(const Chain& c) {
    ChainResult res = checkSteps(c);
    for (auto& k : c.corrections) {
        res.corrections.push_back("step " + std::to_string(k.step) + ": " + k.note);
        if (checkSteps(printedVariant(c, k)).pass) res.printedFails = false;
    }
    return res;
}

namespace {

ChainResult checkSteps(const Chain& c) {
    auto t0 = std::chrono::steady_clock::now();
    ChainResult res{c.id, c.family};
    std::vector<LemmaUse> lemmas;
    try {
        if (c.steps.size() < 2) throw ExprError("chain needs at least two steps");
        NCPoly prevFull = evalNCExpr(c.steps[0].expr, false, c.defs, &lemmas);
        NCPoly prevMod = evalNCExpr(c.steps[0].expr, true, c.defs);
        res.pass = true;
        for (size_t k = 1; k < c.steps.size(); ++k) {
            const ChainStep& st = c.steps[k];
            NCPoly full = evalNCExpr(st.expr, false, c.defs, &lemmas);
            NCPoly mod = evalNCExpr(st.expr, true, c.defs);
            NCPoly diff;
            if (st.rel == "eq") diff = prevFull - full;
            else if (st.rel == "mod") diff = prevMod - mod;
            else throw ExprError("unknown step relation " + st.rel);
            if (!diff.isZero()) {
                res.pass = false;
                res.failedStep = int(k);
                res.message = "step " + std::to_string(k) + " (" + st.rel + ") residual: " + diff.str(6);
                break;
            }
            prevFull = std::move(full);
            prevMod = std::move(mod);
        }
        for (auto& u : lemmas) {
            auto r = certificateCheck(idempotentCancellationCertificate(u.right, u.g, u.hs));
            ++res.lemmasChecked;
            if (!r.pass) {
                res.pass = false;
                res.message += " cancellation lemma certificate failed";
            }
        }
    } catch (const std::exception& e) {
        res.pass = false;
        res.message = e.what();
    }
    res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace

std::string dataDir() {
    if (const char* env = std::getenv("EDAHA_DATA")) return env;
#ifdef EDAHA_DATA_DIR
    return EDAHA_DATA_DIR;
#else
    return "data";
#endif
}

std::vector<Chain> loadChains(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<Chain> out;
    for (auto& item : j.at("chains")) {
        Chain c;
        c.id = item.at("id").get<std::string>();
        c.family = item.value("family", c.id);
        if (item.contains("defs"))
            for (auto& [k, v] : item["defs"].items()) c.defs[k] = v.get<std::string>();
        for (auto& st : item.at("steps")) c.steps.push_back({st.at(0).get<std::string>(), st.at(1).get<std::string>()});
        if (item.contains("corrections"))
            for (auto& k : item["corrections"])
                c.corrections.push_back({k.at("step").get<int>(), k.at("printed").get<std::string>(),
                                         k.value("note", "")});
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

std::vector<ChainResult> runFile(const std::string& name, const std::string& family = "") {
    std::vector<ChainResult> out;
    for (auto& c : loadChains(dataDir() + "/certificates/" + name))
        if (family.empty() || c.family == family) out.push_back(checkChain(c));
    return out;
}

}  // namespace

std::vector<ChainResult> appendixSuite(const std::string& family) { return runFile("appendix.json", family); }

std::vector<ChainResult> casimirSuite() {
    auto out = runFile("casimir.json");
    return out;
}

std::vector<ChainResult> pslzSuite() { return runFile("pslz.json"); }

}  // namespace edaha
