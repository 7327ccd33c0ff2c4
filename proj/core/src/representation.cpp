#include "edaha/representation.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace edaha {

namespace {

using LP = LaurentPoly;
using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

RatFunc deltaSq() { return deltaQ() * deltaQ(); }

// Exponent pairs (p, s) of the three x's in the (1 + x) factors.
std::array<std::pair<int, int>, 3> auxFactors(int sign, const FreeWord& h, const FreeWord& g) {
    const SL2Z pg = phi(g), phg = phi(h * g);
    std::pair<int, int> x2 = sign > 0 ? std::pair<int, int>(int(phg.a), int(-phg.b))
                                      : std::pair<int, int>(int(-phg.a), int(phg.b));
    return {std::pair<int, int>(int(pg.c), int(-pg.d)), x2, std::pair<int, int>(int(-phg.c), int(phg.d))};
}

const SL2Z& pOverSP() {
    static const SL2Z m{1, -1, 1, 0};  // (p/s, p)
    return m;
}

}  // namespace

FormalFraction auxCFraction(int sign, const FreeWord& h, const FreeWord& g) {
    LP num = sign > 0 ? eightQ() : -eightQ();
    std::vector<Exp> den;
    for (auto [a, b] : auxFactors(sign, h, g)) {
        num = num * LP::oneMinus(ex(0, a, b));
        den.push_back(ex(0, 2 * a, 2 * b));
    }
    return FormalFraction(num, den);
}

RingElement auxC(int sign, const FreeWord& h, const FreeWord& g) { return RingElement::pexp(auxCFraction(sign, h, g)); }

RingElement auxCTilde(int sign, const FreeWord& h, const FreeWord& g) {
    return auxC(sign, sigma(h), sigma(g)).shift(shifts::sinvP);
}

Mat3R GeneratorCache::get(Family f, const FreeWord& w) {
    if (!w.formalFree()) throw FormalSymbolPresent("generator label " + w.str());
    const FreeWord label = canonicalLabel(f, w);
    std::lock_guard lock(mu_);
    auto it = memo_.find({f, label});
    if (it != memo_.end()) return it->second;
    Mat3R m = compute(f, label);
    memo_.emplace(std::pair{f, label}, m);
    return m;
}

size_t GeneratorCache::size() const {
    std::lock_guard lock(mu_);
    return memo_.size();
}

void GeneratorCache::clear() {
    std::lock_guard lock(mu_);
    memo_.clear();
}

Mat3R GeneratorCache::compute(Family f, const FreeWord& label) {
    if (label.empty()) return f == Family::A ? matrixOA1() : matrixOB1();
    // Peel the leftmost b^{+-1} a^k block (family A) or a^{+-1} b^k block (family B).
    const char type = f == Family::A ? 'B' : 'A';
    auto blocks = decomposeSpecial(label, type);
    if (!blocks) throw std::logic_error("label not in special form: " + label.str());
    const SpecialBlock first = blocks->front();
    const FreeWord rest = recomposeSpecial({blocks->begin() + 1, blocks->end()}, type);
    const std::string lead = f == Family::A ? "b" : "a", tail = f == Family::A ? "a" : "b";
    const FreeWord h({{lead, first.eps}, {tail, first.k}});
    const RingElement c = f == Family::A ? auxC(first.eps, h, rest) : auxCTilde(first.eps, h, rest);
    const Mat3R m = get(f, rest);
    const Mat3R base = f == Family::A ? get(Family::B, {}) : get(Family::A, {});
    const RingElement w = (c - c.inverseUnit()).scaled(deltaSq().inverse());
    return m.scaled(c) + (base * base * m).scaled(w);
}

GeneratorCache& defaultCache() {
    static GeneratorCache cache;
    return cache;
}

Mat3R oMatrix(Family f, const FreeWord& w, GeneratorCache& cache) { return cache.get(f, w); }

Mat3R psi(const NCPoly& x, GeneratorCache& cache) {
    Mat3R out;
    for (auto& [word, coeff] : x.terms()) {
        Mat3R m = Mat3R::identity();
        for (auto& g : word) m = m * cache.get(g.family, g.label);
        out += m.scaled(RingElement(coeff));
    }
    return out;
}

Tier MatrixCheck::tier() const {
    for (auto& e : entries)
        if (e.zero.tier == Tier::Numeric) return Tier::Numeric;
    return Tier::Symbolic;
}

double MatrixCheck::residual() const {
    double r = 0;
    for (auto& e : entries) r = std::max(r, e.zero.residual);
    return r;
}

MatrixCheck checkZeroMatrix(const std::string& label, const Mat3R& m, const NumericPolicy& policy,
                            std::uint64_t salt) {
    auto t0 = Clock::now();
    MatrixCheck c;
    c.label = label;
    c.entries = matZeroTest(m, policy, salt);
    c.pass = allZero(c.entries);
    c.ms = msSince(t0);
    return c;
}

std::vector<MatrixCheck> baseRelationChecks(const NumericPolicy& policy) {
    const Mat3R A = matrixOA1(), B = matrixOB1();
    const RingElement d2(deltaSq());
    std::vector<std::pair<std::string, Mat3R>> rel{
        {"A1 B1 A1", A * B * A},
        {"B1 A1 B1", B * A * B},
        {"A1^3 + D^2 A1", A * A * A + A.scaled(d2)},
        {"B1^3 + D^2 B1", B * B * B + B.scaled(d2)},
        {"A1^2 B1 + D^2 B1 + B1 A1^2", A * A * B + B.scaled(d2) + B * A * A},
        {"B1^2 A1 + D^2 A1 + A1 B1^2", B * B * A + A.scaled(d2) + A * B * B},
    };
    std::vector<MatrixCheck> out;
    for (size_t i = 0; i < rel.size(); ++i) out.push_back(checkZeroMatrix(rel[i].first, rel[i].second, policy, i));
    return out;
}

MatrixCheck verifyRelatorInstance(const RelatorInstance& r, const NumericPolicy& policy, GeneratorCache& cache) {
    auto t0 = Clock::now();
    MatrixCheck c = checkZeroMatrix(r.str(), psi(relator(r), cache), policy, std::hash<std::string>{}(r.str()));
    c.ms = msSince(t0);
    return c;
}

namespace {

void tuplesUpTo(const std::vector<FreeWord>& words, int arity, int budget, std::vector<FreeWord>& cur,
                std::vector<std::vector<FreeWord>>& out) {
    if (int(cur.size()) == arity) {
        out.push_back(cur);
        return;
    }
    for (auto& w : words) {
        if (w.length() > budget) continue;
        cur.push_back(w);
        tuplesUpTo(words, arity, budget - w.length(), cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<RelatorInstance> relatorInstances(int maxTotal, int randomCount, int randomMaxTotal, std::uint64_t seed,
                                              const std::string& only) {
    std::vector<RelatorInstance> out;
    const auto small = wordsUpTo(maxTotal);
    const auto big = wordsUpTo(randomMaxTotal);
    std::map<int, std::vector<FreeWord>> byLen;
    for (auto& w : big) byLen[w.length()].push_back(w);
    for (size_t idx = 0; idx < relatorIds().size(); ++idx) {
        const std::string& id = relatorIds()[idx];
        if (!only.empty() && id != only) continue;
        const int n = relatorArity(id);
        std::vector<std::vector<FreeWord>> tuples;
        std::vector<FreeWord> cur;
        tuplesUpTo(small, n, maxTotal, cur, tuples);
        for (auto& t : tuples) out.push_back({id, t});
        std::mt19937_64 rng(seed + 7919 * idx);
        for (int k = 0; k < randomCount; ++k) {
            std::vector<FreeWord> t;
            int budget = randomMaxTotal;
            for (int i = 0; i < n; ++i) {
                int len = std::uniform_int_distribution<int>(0, budget)(rng);
                auto& pool = byLen[len];
                t.push_back(pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)]);
                budget -= len;
            }
            std::shuffle(t.begin(), t.end(), rng);
            out.push_back({id, t});
        }
    }
    return out;
}

std::vector<MatrixCheck> relationSuite(const NumericPolicy& policy, int maxTotal, int randomCount,
                                       int randomMaxTotal, const std::string& only) {
    std::vector<MatrixCheck> out;
    for (auto& r : relatorInstances(maxTotal, randomCount, randomMaxTotal, policy.seed, only))
        out.push_back(verifyRelatorInstance(r, policy));
    return out;
}

MatrixCheck aShiftCheck(const FreeWord& g, const NumericPolicy& policy) {
    const FreeWord a = FreeWord::letter("a");
    const Mat3R diff = oMatrix(Family::A, g * a) - oMatrix(Family::A, g).shift(shifts::psS);
    return checkZeroMatrix("a-shift g=" + g.str(), diff, policy, 11);
}

MatrixCheck bIdentityCheck(const FreeWord& g, const NumericPolicy& policy) {
    const FreeWord b = FreeWord::letter("b");
    const Mat3R S = matrixSmall().shift(shifts::sinvP);
    const Mat3R diff = S * oMatrix(Family::A, g * b) - oMatrix(Family::B, sigma(g)).shift(pOverSP()) * S;
    return checkZeroMatrix("b-identity g=" + g.str(), diff, policy, 13);
}

std::vector<MatrixCheck> shiftSuite(const NumericPolicy& policy, int maxLenA, int maxLenB) {
    std::vector<MatrixCheck> out;
    for (auto& g : wordsUpTo(maxLenA)) out.push_back(aShiftCheck(g, policy));
    for (auto& g : wordsUpTo(maxLenB)) out.push_back(bIdentityCheck(g, policy));
    return out;
}

MatrixCheck equivarianceACheck(const FreeWord& g, const NumericPolicy& policy) {
    const FreeWord ga = g * FreeWord::letter("a", -1);
    const Mat3R A1 = matrixOA1();
    const Mat3R lhs = (A1 * oMatrix(Family::A, ga) * A1).scaled(RingElement(-deltaSq().inverse()));
    const Mat3R rhs = matrixDAinv() * oMatrix(Family::A, g).shift(shifts::pOverS) * matrixDA();
    return checkZeroMatrix("a-equivariance A g=" + g.str(), lhs - rhs, policy, 17);
}

MatrixCheck equivarianceBCheck(const FreeWord& g, const NumericPolicy& policy) {
    const FreeWord ga = g * FreeWord::letter("a", -1);
    const Mat3R A1 = matrixOA1(), B = oMatrix(Family::B, ga);
    const Mat3R lhs = ((A1 * B).scaled(RingElement(LP::Q(1))) - (B * A1).scaled(RingElement(LP::Q(-1))))
                          .scaled(RingElement(deltaQ().inverse()));
    const Mat3R rhs = matrixDAinv() * oMatrix(Family::B, g).shift(shifts::pOverS) * matrixDA();
    return checkZeroMatrix("a-equivariance B g=" + g.str(), lhs - rhs, policy, 19);
}

MatrixCheck sHatFlipCheck(const FreeWord& g, const NumericPolicy& policy) {
    // S-hat^{-1} X S-hat = S'^{-1} X(1/s,p) S' with S' = S(1/s,p).
    const Mat3R S = matrixSmall().shift(shifts::sinvP);
    const Mat3R diff = S * oMatrix(Family::B, sigma(g)) - oMatrix(Family::A, g).shift(shifts::sinvP) * S;
    return checkZeroMatrix("S-hat flip g=" + g.str(), diff, policy, 23);
}

std::vector<MatrixCheck> equivarianceSuite(const NumericPolicy& policy, int maxLen) {
    std::vector<MatrixCheck> out;
    for (auto& g : wordsUpTo(maxLen)) {
        out.push_back(equivarianceACheck(g, policy));
        out.push_back(equivarianceBCheck(g, policy));
        out.push_back(sHatFlipCheck(g, policy));
    }
    return out;
}

Mat3R psi0A() { return matrixOA1(); }

Mat3R psi0APrinted() {
    const RingElement d(deltaQ() * RatFunc(-GaussRat::i()));
    return Mat3R::diag(d, 0, d);
}

Mat3R psi0B() {
    const RingElement h(-deltaSq() * RatFunc(GaussRat(mpq_class(1, 2))));
    Mat3R m;
    m(0, 1) = 1;
    m(1, 0) = h;
    m(1, 2) = 1;
    m(2, 1) = h;
    return m;
}

RingElement limitPToZero(const RingElement& x) {
    RingElement out;
    for (auto& t : x.terms()) out += RingElement(t.pref);
    return out;
}

int spanningRank(const Mat3R& A, const Mat3R& B, const NumericPolicy& policy) {
    PrecisionScope scope(policy.precisionDigits);
    const Mat3R I = Mat3R::identity();
    const std::vector<Mat3R> span{I, A, B, A * A, A * B, B * A, B * B, A * A * B, A * B * B};
    const SamplePoint pt = samplePoints(policy, 1, 29).front();
    std::vector<std::vector<Cx>> rows;
    for (auto& m : span) {
        std::vector<Cx> r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.push_back(ringEval(m(i, j), pt, policy));
        rows.push_back(r);
    }
    // Gaussian elimination with partial pivoting.
    const size_t n = rows.size(), m = rows[0].size();
    int rank = 0;
    for (size_t col = 0; col < m && rank < int(n); ++col) {
        size_t piv = rank;
        for (size_t r = rank; r < n; ++r)
            if (absd(rows[r][col]) > absd(rows[piv][col])) piv = r;
        if (absd(rows[piv][col]) < 1e-20) continue;
        std::swap(rows[piv], rows[rank]);
        for (size_t r = rank + 1; r < n; ++r) {
            const Cx f = rows[r][col] / rows[rank][col];
            for (size_t c = col; c < m; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

Psi0Report psi0Checks(const NumericPolicy& policy) {
    Psi0Report rep;
    const Mat3R A = psi0A(), B = psi0B(), I = Mat3R::identity();
    const RingElement d2(deltaSq()), d4(deltaSq() * deltaSq());
    std::vector<std::pair<std::string, Mat3R>> rel{
        {"OA OB OA", A * B * A},
        {"OB OA OB", B * A * B},
        {"OA^3 + D^2 OA", A * A * A + A.scaled(d2)},
        {"OB^3 + D^2 OB", B * B * B + B.scaled(d2)},
        {"OA^2 OB + OB OA^2 + D^2 OB", A * A * B + B * A * A + B.scaled(d2)},
        {"OB^2 OA + OA OB^2 + D^2 OA", B * B * A + A * B * B + A.scaled(d2)},
        {"OB^2 OA^2 + D^2 (OA^2 + OB^2) + D^4", B * B * A * A + (A * A + B * B).scaled(d2) + I.scaled(d4)},
    };
    for (size_t i = 0; i < rel.size(); ++i) rep.relations.push_back(checkZeroMatrix(rel[i].first, rel[i].second, policy, i));
    rep.rank = spanningRank(A, B, policy);
    rep.printedRank = spanningRank(psi0APrinted(), B, policy);
    const Mat3R ob1 = matrixOB1();
    Mat3R lim;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) lim(i, j) = limitPToZero(ob1(i, j));
    rep.limit = checkZeroMatrix("lim p->0 O_B^(1) - Psi0(O_B)", lim - B, policy, 31);
    rep.pass = rep.rank == 9 && rep.limit.pass &&
               std::all_of(rep.relations.begin(), rep.relations.end(), [](auto& c) { return c.pass; });
    return rep;
}

}  // namespace edaha
