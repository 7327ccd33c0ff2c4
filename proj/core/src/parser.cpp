#include "edaha/parser.hpp"

#include "edaha/representation.hpp"

#include <cctype>
#include <sstream>

namespace edaha {

namespace {

struct Value {
    bool mat = false;
    RingElement r;
    Mat3R m;
    bool pexpCall = false;
    FormalFraction frac;
};

Value scalarV(const RingElement& r) { return {false, r, {}, false, {}}; }
Value matrixV(const Mat3R& m) { return {true, {}, m, false, {}}; }

class Parser {
public:
    explicit Parser(const std::string& t) : text_(t) {}

    Value run() {
        Value v = expr();
        skipWs();
        if (pos_ != text_.size()) fail("unexpected '" + text_.substr(pos_, 1) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << msg << " at offset " << pos_ << " in \"" << text_ << "\"";
        throw ParseError(os.str());
    }

    void skipWs() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skipWs();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skipWs();
        size_t b = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(b, pos_ - b);
    }

    bool startsPrimary() {
        char c = peek();
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    Value expr() {
        Value v = term();
        for (;;) {
            if (eat('+')) v = add(v, term(), 1);
            else if (eat('-')) v = add(v, term(), -1);
            else return v;
        }
    }

    Value term() {
        Value v = unary();
        for (;;) {
            if (eat('*')) v = mul(v, unary());
            else if (eat('/')) v = div(v, unary());
            else if (startsPrimary()) v = mul(v, power());
            else return v;
        }
    }

    Value unary() {
        if (eat('-')) {
            Value v = unary();
            if (v.mat) return matrixV(v.m.scaled(RingElement(-1)));
            return scalarV(-v.r);
        }
        if (eat('+')) return unary();
        return power();
    }

    Value power() {
        Value base = primary();
        if (!eat('^')) return base;
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        skipWs();
        size_t b = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (b == pos_) fail("expected an integer exponent");
        long k = sign * std::stol(text_.substr(b, pos_ - b));
        return pow(base, k);
    }

    Value primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Value v = expr();
            expect(')');
            v.pexpCall = false;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t b = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return scalarV(RingElement(RatFunc(GaussRat(mpq_class(text_.substr(b, pos_ - b))))));
        }
        std::string id = ident();
        if (id.empty()) fail("expected an expression");
        if (id == "Q") return scalarV(RingElement(LaurentPoly::mono(1)));
        if (id == "p") return scalarV(RingElement(LaurentPoly::mono(0, 1)));
        if (id == "s") return scalarV(RingElement(LaurentPoly::mono(0, 0, 1)));
        if (id == "i") return scalarV(RingElement(GaussRat::i()));
        if (id == "pexp") return pexpCall();
        if (id == "DA") return matrixV(matrixDA());
        if (id == "DAinv") return matrixV(matrixDAinv());
        if (id == "DB") return matrixV(matrixDB());
        if (id == "S") return matrixV(matrixSmall());
        if (id == "I") return matrixV(Mat3R::identity());
        if (id == "OA" || id == "OB") {
            Family f = id == "OA" ? Family::A : Family::B;
            return matrixV(oMatrix(f, wordArg()));
        }
        fail("unknown name '" + id + "'");
    }

    FreeWord wordArg() {
        expect('(');
        size_t b = pos_;
        size_t close = text_.find(')', b);
        if (close == std::string::npos) fail("unterminated word");
        pos_ = close + 1;
        FreeWord w;
        try {
            w = FreeWord::parse(text_.substr(b, close - b));
        } catch (const std::exception& e) {
            fail(std::string("bad word: ") + e.what());
        }
        if (!w.formalFree()) fail("words may only use a and b");
        return w;
    }

    Value pexpCall() {
        expect('(');
        Value arg = expr();
        expect(')');
        if (arg.mat || !arg.r.isRational()) fail("pexp takes a rational function");
        RatFunc v = arg.r.rationalValue();
        Value out;
        try {
            out.frac = fromValue(v);
            out.r = RingElement::pexp(out.frac);
            out.pexpCall = true;
        } catch (const InvalidFraction&) {
            // Q-degree zero numerators fall outside the fraction domain.
            out.r = RingElement::pexpValue(v);
        }
        return out;
    }

    Value add(const Value& a, const Value& b, int sign) {
        if (a.mat != b.mat) fail("cannot add a matrix and a scalar");
        if (a.mat) return matrixV(sign > 0 ? a.m + b.m : a.m - b.m);
        return scalarV(sign > 0 ? a.r + b.r : a.r - b.r);
    }

    Value mul(const Value& a, const Value& b) {
        if (a.mat && b.mat) return matrixV(a.m * b.m);
        if (a.mat) return matrixV(a.m.scaled(b.r));
        if (b.mat) return matrixV(b.m.scaled(a.r));
        return scalarV(a.r * b.r);
    }

    RingElement invert(const RingElement& x) {
        if (x.isZero()) fail("division by zero");
        if (x.isRational()) {
            try {
                return RingElement(x.rationalValue().inverse());
            } catch (const std::exception& e) {
                fail(std::string("cannot invert: ") + e.what());
            }
        }
        if (!x.isUnit()) fail("divisor is not a unit");
        return x.inverseUnit();
    }

    Value div(const Value& a, const Value& b) {
        if (b.mat) fail("cannot divide by a matrix");
        RingElement inv = invert(b.r);
        if (a.mat) return matrixV(a.m.scaled(inv));
        return scalarV(a.r * inv);
    }

    Value pow(const Value& base, long k) {
        if (base.mat) {
            if (k < 0) fail("negative matrix powers are not supported");
            Mat3R out = Mat3R::identity();
            for (long n = 0; n < k; ++n) out = out * base.m;
            return matrixV(out);
        }
        RingElement b = k < 0 ? invert(base.r) : base.r;
        RingElement out(1);
        for (long n = 0; n < std::labs(k); ++n) out *= b;
        return scalarV(out);
    }

    std::string text_;
    size_t pos_ = 0;
};

}  // namespace

std::string EvalResult::str() const {
    if (isMatrix) return matrix.str();
    if (isPexp) return "pexp" + fraction.str();
    return scalar.str();
}

EvalResult evalExpression(const std::string& text) {
    Value v = Parser(text).run();
    EvalResult r;
    r.isMatrix = v.mat;
    if (v.mat) r.matrix = v.m;
    else r.scalar = v.r;
    r.isPexp = v.pexpCall;
    r.fraction = v.frac;
    return r;
}

}  // namespace edaha
