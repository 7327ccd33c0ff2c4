#pragma once
// Reduced words in Free_2 = <a,b> with formal letters, sigma, phi, special forms.

#include "edaha/corering.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edaha {

enum class Family { A, B };

inline char familyChar(Family f) { return f == Family::A ? 'A' : 'B'; }
inline Family other(Family f) { return f == Family::A ? Family::B : Family::A; }

struct Letter {
    std::string sym;  // "a", "b", or a formal symbol; "~x" is sigma(x)
    int exp = 1;
    friend auto operator<=>(const Letter&, const Letter&) = default;
    bool formal() const { return sym != "a" && sym != "b"; }
};

struct FormalSymbolPresent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<Letter> ls);
    static FreeWord letter(const std::string& sym, int exp = 1) { return FreeWord({{sym, exp}}); }
    // "b a^-1 g", "ab^-1", "1" and "" all accepted.
    static FreeWord parse(const std::string& text);

    const std::vector<Letter>& letters() const { return ls_; }
    bool empty() const { return ls_.empty(); }
    bool formalFree() const;
    int length() const;

    FreeWord inverse() const;
    friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
    FreeWord pow(int k) const;

    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
    std::string str() const;

private:
    std::vector<Letter> ls_;
};

FreeWord sigma(const FreeWord& w);
std::string sigmaSym(const std::string& sym);

// phi(a) = [[1,-1],[0,1]], phi(b) = [[1,0],[1,1]].
SL2Z phi(const FreeWord& w);

// B-type: w = b^{e1} a^{k1} ... b^{en} a^{kn}; A-type is the swapped form.
// Family names the leading-stripped letter: B-type special words are the domain
// of the O_A recursion.
struct SpecialBlock { int eps; int k; };
std::optional<std::vector<SpecialBlock>> decomposeSpecial(const FreeWord& w, char type);
FreeWord recomposeSpecial(const std::vector<SpecialBlock>& blocks, char type);

// Strips the leading a-power (family A) or b-power (family B).
FreeWord canonicalLabel(Family f, const FreeWord& w);

// All reduced formal-free words of length <= n (length counts |exponents|).
std::vector<FreeWord> wordsUpTo(int n);

}  // namespace edaha
