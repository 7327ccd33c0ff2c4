#pragma once
// Free algebra over Q(Q) on generators O_A^(g), O_B^(g); relators, the
// PSL(2,Z) automorphisms and ideal-membership certificates.

#include "edaha/freegroup.hpp"

#include <map>
#include <string>
#include <vector>

namespace edaha {

struct Gen {
    Family family;
    FreeWord label;  // canonical

    Gen(Family f, const FreeWord& w) : family(f), label(canonicalLabel(f, w)) {}
    friend auto operator<=>(const Gen&, const Gen&) = default;
    std::string str() const;
};

class NCPoly {
public:
    using Word = std::vector<Gen>;
    using Terms = std::map<Word, RatFunc>;

    NCPoly() = default;
    NCPoly(long c) : NCPoly(RatFunc(c)) {}
    NCPoly(const RatFunc& c);
    static NCPoly gen(Family f, const FreeWord& w);
    static NCPoly A(const std::string& w) { return gen(Family::A, FreeWord::parse(w)); }
    static NCPoly B(const std::string& w) { return gen(Family::B, FreeWord::parse(w)); }

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    // Constant polynomial (only the empty word).
    bool isScalar() const;
    RatFunc scalar() const;
    size_t size() const { return terms_.size(); }

    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly scaled(const RatFunc& c) const;

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return (a - b).isZero(); }
    std::string str(size_t maxTerms = 0) const;

    void addTerm(const Word& w, const RatFunc& c);

private:
    Terms terms_;
};

// Q^2 - Q^{-2} and its square.
RatFunc delta();
RatFunc kappa2();

// Relator ids: "0A","0B","1A","1B","2","3","4A","4B","5A","5B","6","7","8","9","10","11".
struct RelatorInstance {
    std::string id;
    std::vector<FreeWord> words;
    std::string str() const;
};

struct ArityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

int relatorArity(const std::string& id);
const std::vector<std::string>& relatorIds();
NCPoly relator(const std::string& id, const std::vector<FreeWord>& words);
inline NCPoly relator(const RelatorInstance& r) { return relator(r.id, r.words); }

// Names: a, a_inv, b, b_inv, s (ai/at/bi accepted as aliases).
NCPoly applyAuto(const std::string& name, const NCPoly& x);

NCPoly idempotentA();
NCPoly idempotentB();
NCPoly casimir();

// Sum of coeff * left * relator * right.
struct CertTerm {
    RatFunc coeff{1};
    NCPoly left{1};
    RelatorInstance rel;
    NCPoly right{1};
};

struct Certificate {
    std::string id;
    NCPoly lhs;
    std::vector<CertTerm> combination;
};

struct CertResult {
    bool pass = false;
    NCPoly residual;
};

CertResult certificateCheck(const Certificate& c);

// Idempotent cancellation: the element
//   O_A^(g) O_B^(h1)..O_B^(hn) O_A^(1) O_A^(1) + [n even] k^2 O_A^(g) O_B^(h1)..O_B^(hn)
// (right form) or its mirror O_A^(1) O_A^(1) O_B^(h1)..O_B^(hn) O_A^(g) + ... (left form)
// lies in the ideal; these return the element and its relator certificate.
NCPoly idempotentCancellation(bool right, const FreeWord& g, const std::vector<FreeWord>& hs);
Certificate idempotentCancellationCertificate(bool right, const FreeWord& g, const std::vector<FreeWord>& hs);

}  // namespace edaha
