#include "edaha/laumon.hpp"

#include "edaha/operators.hpp"

#include <cmath>
#include <random>

namespace edaha {

namespace {

using LP = LaurentPoly;

CD toCD(const Cx& z) { return {toDouble(real(z)), toDouble(imag(z))}; }

CD gaussCD(const GaussRat& c) { return {c.re().get_d(), c.im().get_d()}; }

int mod(int a, int n) { return ((a % n) + n) % n; }

CD poch(CD x, CD q, int n) {
    CD r(1);
    for (int m = 0; m < n; ++m, x *= q) r *= 1.0 - x;
    return r;
}

void partitionsRec(int n, int maxPart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxPart); k >= 1; --k) {
        cur.push_back(k);
        partitionsRec(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

int partAt(const Partition& l, int i) { return i >= 1 && i <= int(l.size()) ? l[i - 1] : 0; }

int partSize(const Partition& l) {
    int s = 0;
    for (int x : l) s += x;
    return s;
}

std::vector<Partition> partitionsOf(int n) {
    std::vector<Partition> out;
    Partition cur;
    partitionsRec(n, n, cur, out);
    return out;
}

Mono operator*(const Mono& a, const Mono& b) {
    return {a.c * b.c, {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
}

Mono Mono::inverse() const { return {c.inverse(), {-e[0], -e[1], -e[2]}}; }

CD Mono::eval(const SamplePoint& pt) const { return gaussCD(c) * toCD(evalMono(e, pt)); }

CD nekFactor(const Partition& lam, const Partition& mu, int k, CD u, CD q, CD kappa, int N, NekReading reading,
             int bMax) {
    CD r(1);
    if (reading == NekReading::Pochhammer) {
        for (int b = 1; b <= int(lam.size()); ++b) {
            const int n = partAt(lam, b) - partAt(lam, b + 1);
            if (n == 0) continue;
            for (int a = 1; a <= b; ++a)
                if (mod(a - b - k, N) == 0)
                    r *= poch(u * std::pow(q, -partAt(mu, a) + partAt(lam, b + 1)) * std::pow(kappa, b - a), q, n);
        }
        for (int b = 1; b <= int(mu.size()); ++b) {
            const int n = partAt(mu, b) - partAt(mu, b + 1);
            if (n == 0) continue;
            for (int a = 1; a <= b; ++a)
                if (mod(a - b + k + 1, N) == 0)
                    r *= poch(u * std::pow(q, partAt(lam, a) - partAt(mu, b)) * std::pow(kappa, a - b - 1), q, n);
        }
        return r;
    }
    for (int b = 1; b <= bMax; ++b)
        for (int a = 1; a <= b; ++a) {
            if (mod(a - b - k, N) == 0)
                r *= 1.0 - u * std::pow(q, -partAt(mu, a) + partAt(lam, b + 1)) * std::pow(kappa, b - a);
            if (mod(a - b + k + 1, N) == 0)
                r *= 1.0 - u * std::pow(q, partAt(lam, a) - partAt(mu, b)) * std::pow(kappa, a - b - 1);
        }
    return r;
}

CD nekFactorLiteralMonitored(const Partition& lam, const Partition& mu, int k, CD u, CD q, CD kappa, int N, int bMax,
                             double tol) {
    const CD a = nekFactor(lam, mu, k, u, q, kappa, N, NekReading::Literal, bMax);
    const CD b = nekFactor(lam, mu, k, u, q, kappa, N, NekReading::Literal, bMax + N);
    const double drift = std::abs(a - b) / std::max(1.0, std::abs(b));
    if (!(drift <= tol))
        throw TruncationUnstable("literal Nekrasov product drifts by " + std::to_string(drift) + " from bMax " +
                                 std::to_string(bMax) + " to " + std::to_string(bMax + N));
    return b;
}

namespace {

struct Piece {
    Partition lam;
    int boxes = 0;
    int pHalf = 0;
    CD weight{1};
};

// Partitions for one slot whose row alpha costs rowHalf[alpha mod N] per box.
void slotPieces(const std::vector<int>& rowHalf, const std::vector<CD>& rowW, int N, int maxBoxes, int maxPHalf,
                Piece& cur, std::vector<Piece>& out) {
    out.push_back(cur);
    const int alpha = int(cur.lam.size()) + 1;
    const int cost = rowHalf[mod(alpha, N)];
    const int cap = cur.lam.empty() ? maxBoxes : cur.lam.back();
    for (int len = 1; len <= cap; ++len) {
        if (cur.boxes + len > maxBoxes || cur.pHalf + cost * len > maxPHalf) break;
        Piece next = cur;
        next.lam.push_back(len);
        next.boxes += len;
        next.pHalf += cost * len;
        next.weight *= std::pow(rowW[mod(alpha, N)], len);
        slotPieces(rowHalf, rowW, N, maxBoxes, maxPHalf, next, out);
    }
}

}  // namespace

LaumonValue laumonF(const LaumonParams& P, const SamplePoint& pt, double tol) {
    const int N = P.N;
    if (int(P.xs.size()) != N || int(P.ys.size()) != N) throw std::invalid_argument("laumonF: need N x- and y-values");
    const CD q = P.q.eval(pt), kappa = P.sSlot.eval(pt);
    const Mono qt = P.q * P.t.inverse();
    // Nekrasov arguments for the ordered pair (a, b) of slots.
    std::vector<CD> uNum(N * N), uDen(N * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            const Mono u = P.ys[b] * P.ys[a].inverse();
            uDen[a * N + b] = u.eval(pt);
            uNum[a * N + b] = (qt * u).eval(pt);
        }
    // Per slot beta, row alpha weight p t x_{alpha+beta} / (q x_{alpha+beta-1}), periodic in N.
    std::vector<std::vector<Piece>> slots(N);
    for (int beta = 1; beta <= N; ++beta) {
        std::vector<int> rowHalf(N);
        std::vector<CD> rowW(N);
        for (int r = 0; r < N; ++r) {
            const int alpha = r == 0 ? N : r;
            const Mono w = P.pSlot * P.t * P.xs[mod(alpha + beta - 1, N)] * (P.q * P.xs[mod(alpha + beta - 2, N)]).inverse();
            if (w.e[1] < 0) throw std::invalid_argument("laumonF: weight with negative p-degree");
            rowHalf[r] = w.e[1];
            rowW[r] = w.eval(pt);
        }
        Piece root;
        slotPieces(rowHalf, rowW, N, P.maxBoxes, P.maxPHalf, root, slots[beta - 1]);
    }

    LaumonValue out;
    std::map<std::pair<int, int>, CD> grid;
    std::vector<const Piece*> pick(N);
    auto visit = [&](auto&& self, int slot, int boxes, int pHalf) -> void {
        if (slot == N) {
            CD num(1), den(1), w(1);
            for (int a = 0; a < N; ++a) {
                w *= pick[a]->weight;
                for (int b = 0; b < N; ++b) {
                    num *= nekFactor(pick[a]->lam, pick[b]->lam, b - a, uNum[a * N + b], q, kappa, N);
                    den *= nekFactor(pick[a]->lam, pick[b]->lam, b - a, uDen[a * N + b], q, kappa, N);
                }
            }
            ++out.tuples;
            if (std::abs(num) == 0) return;
            if (std::abs(den) == 0) throw std::domain_error("laumonF: vanishing Nekrasov denominator");
            grid[{boxes, pHalf}] += num / den * w;
            return;
        }
        for (auto& pc : slots[slot]) {
            if (boxes + pc.boxes > P.maxBoxes || pHalf + pc.pHalf > P.maxPHalf) continue;
            pick[slot] = &pc;
            self(self, slot + 1, boxes + pc.boxes, pHalf + pc.pHalf);
        }
    };
    visit(visit, 0, 0, 0);

    CD smaller(0);
    for (auto& [key, v] : grid) {
        out.value += v;
        out.byPHalf[key.second] += v / Mono{GaussRat(1), {0, key.second, 0}}.eval(pt);
        if (key.first <= P.maxBoxes - N && key.second <= P.maxPHalf - 2) smaller += v;
    }
    out.drift = std::abs(out.value - smaller) / std::max(1.0, std::abs(out.value));
    out.stable = out.drift <= tol;
    return out;
}

Mono xValue(int k, XConvention conv) {
    const int scale = conv == XConvention::Printed ? 2 : 4;  // doubled Q exponent per step
    return {GaussRat::i(), {scale * (k - 2), 0, 0}};
}

LaumonParams specialization(int i, int j, XConvention conv) {
    const Mono Xi = xValue(i, conv), Xj = xValue(j, conv);
    LaumonParams P;
    P.N = 2;
    P.xs = {Xi * Mono{GaussRat(1), {0, -1, 0}}, Xi.inverse()};
    P.ys = {Xj * Mono{GaussRat(1), {0, 0, -1}}, Xj.inverse()};
    P.pSlot = {GaussRat(1), {0, 1, 0}};
    P.sSlot = {GaussRat(1), {0, 0, 1}};
    P.q = Mono::q(8);
    P.t = Mono::q(-8, GaussRat(-1));
    return P;
}

namespace {

RatFunc overOneMinus(const LP& num, std::initializer_list<Exp> den) {
    RatFunc r(num);
    for (auto& d : den) r *= RatFunc::oneMinusPow(d, -1);
    return r;
}

struct PsiPieces {
    RatFunc A, B, C, D, E;
};

const PsiPieces& psiPieces() {
    static const PsiPieces pc = [] {
        const LP q4 = LP::Q(4) - LP::Q(-4);
        const LP p = LP::mono(0, 1, 0), p2 = LP::mono(0, 2, 0), s = LP::mono(0, 0, 1), s2 = LP::mono(0, 0, 2);
        const Exp P2 = ex(0, 2, 0), S1 = ex(0, 0, 1), S2 = ex(0, 0, 2);
        PsiPieces r;
        r.A = overOneMinus(-(q4 * (LP::Q(4) + s2 * LP::Q(-4)) * p), {P2, S2});
        r.B = overOneMinus((-((s + LP(2)) * LP::Q(4)) + (LP(2) * s2 + s) * LP::Q(-4)) * p2, {S2});
        r.C = overOneMinus(-(q4 * (LP::Q(4) + s * LP::Q(-4)) * p), {P2, S1});
        r.D = overOneMinus(LP(-2) * (LP::Q(4) - s * LP::Q(-4)) * (s * LP::Q(4) + LP::Q(-4)) * p2, {S2});
        r.E = overOneMinus(-((LP::Q(8) - LP::Q(-8)) * s * p), {P2, S2});
        return r;
    }();
    return pc;
}

}  // namespace

RingElement psiClosed(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3) throw std::out_of_range("psiClosed: indices are 1..3");
    const auto& pc = psiPieces();
    const RatFunc d = deltaQ(), d2half = d * d * RatFunc(GaussRat(mpq_class(1, 2)));
    const RingElement ab = RingElement::pexpValue(pc.A) * RingElement::pexpValue(pc.B);
    const RingElement cd = RingElement::pexpValue(pc.C) * RingElement::pexpValue(pc.D);
    const RingElement eb = RingElement::pexpValue(pc.E) * RingElement::pexpValue(pc.B);
    const RatFunc iu(GaussRat::i());
    switch (i * 10 + j) {
        case 11: case 31: return ab;
        case 13: case 33: return ab.scaled(-d2half);
        case 12: return cd.scaled(-(iu * d));
        case 32: return cd.scaled(iu * d);
        case 21: return eb;
        case 23: return eb.scaled(d2half);
        default: return RingElement();
    }
}

namespace {

// Taylor coefficients in p by the trapezoid rule on |p| = r.
std::vector<CD> psiCoefficients(const RingElement& x, const SamplePoint& pt, double r, int maxOrder,
                                const NumericPolicy& policy) {
    const int M = 64;
    std::vector<CD> c(maxOrder + 1);
    for (int m = 0; m < M; ++m) {
        const CD pz = std::polar(r, 2 * M_PI * m / M);
        const SamplePoint ptm = SamplePoint::make(pt.Q, cx(pz.real(), pz.imag()), pt.s);
        const CD v = toCD(ringEval(x, ptm, policy));
        for (int k = 0; k <= maxOrder; ++k) c[k] += v * std::pow(pz, -k) / double(M);
    }
    return c;
}

std::vector<SamplePoint> laumonPoints(const LaumonOptions& o, const NumericPolicy& policy) {
    const std::complex<double> Q0 = std::polar(1.05, 0.37);
    std::vector<SamplePoint> pts{SamplePoint::make(cx(Q0.real(), Q0.imag()), cx(o.p), cx(o.s))};
    if (o.extraRandomPoint) {
        std::mt19937_64 rng(policy.seed ^ 0x5bd1e995ULL);
        std::uniform_real_distribution<double> arg(-M_PI, M_PI), rp(0.05, 0.15), rs(0.1, 0.2), rq(0.97, 1.03);
        const auto Q = std::polar(rq(rng), arg(rng));
        const auto p = std::polar(rp(rng), arg(rng));
        const auto s = std::polar(rs(rng), arg(rng));
        pts.push_back(SamplePoint::make(cx(Q.real(), Q.imag()), cx(p.real(), p.imag()), cx(s.real(), s.imag())));
    }
    return pts;
}

}  // namespace

ConjectureReport conjectureCheck(const std::vector<std::pair<int, int>>& pairs, const std::string& mode,
                                 const LaumonOptions& opts, const NumericPolicy& policy) {
    if (mode != "numeric" && mode != "series") throw std::invalid_argument("mode must be numeric or series");
    PrecisionScope scope(policy.precisionDigits);
    ConjectureReport rep;
    rep.mode = mode;
    rep.points = laumonPoints(opts, policy);
    if (mode == "series") rep.points.resize(1);
    rep.pass = true;
    for (auto [i, j] : pairs) {
        LaumonParams P = specialization(i, j, opts.conv);
        P.maxBoxes = opts.maxBoxes;
        P.maxPHalf = mode == "series" ? std::max(opts.maxPHalf, 2 * opts.pOrder + 2) : opts.maxPHalf;
        const RingElement psi = psiClosed(i, j);
        for (auto& pt : rep.points) {
            ConjectureEntry e;
            e.i = i;
            e.j = j;
            const LaumonValue f = laumonF(P, pt, opts.tol);
            e.f = f.value;
            e.stable = f.stable;
            e.psi = toCD(ringEval(psi, pt, policy));
            if (mode == "numeric") {
                e.residual = std::abs(e.f - e.psi);
                e.pass = e.stable && e.residual < opts.tol;
            } else {
                const double r = std::abs(toCD(pt.p));
                const auto c = psiCoefficients(psi, pt, r, opts.pOrder, policy);
                for (int h = 0; h <= 2 * opts.pOrder; ++h) {
                    const CD fc = f.byPHalf.count(h) ? f.byPHalf.at(h) : CD(0);
                    const CD pc = h % 2 == 0 ? c[h / 2] : CD(0);
                    e.coefficients[h] = {fc, pc};
                    const double d = std::abs(fc - pc) / std::max(1.0, std::abs(pc));
                    e.residual = std::max(e.residual, d);
                    if (d > opts.tol && e.firstMismatchPHalf < 0) e.firstMismatchPHalf = h;
                }
                e.pass = e.firstMismatchPHalf < 0;
            }
            rep.pass = rep.pass && e.pass;
            rep.entries.push_back(e);
        }
    }
    return rep;
}

namespace {

RingElement eigenDiff(int k, int i, XConvention conv) {
    const Mat3R ob = matrixOB1();
    RingElement lhs;
    for (int j = 1; j <= 3; ++j)
        if (!ob(i - 1, j - 1).isZero()) lhs += ob(i - 1, j - 1) * psiClosed(k, j);
    const Mono X = xValue(k, conv), Xi = X.inverse();
    const RatFunc ev(LP::monomial(X.e, X.c) + LP::monomial(Xi.e, Xi.c));
    return lhs - psiClosed(k, i).scaled(ev);
}

}  // namespace

EigenReport eigenRelationCheck(int k, const NumericPolicy& policy, XConvention conv) {
    EigenReport rep;
    rep.k = k;
    rep.conv = conv;
    rep.pass = true;
    for (int i = 1; i <= 3; ++i) {
        EigenEntry e{k, i, zeroTest(eigenDiff(k, i, conv), policy, 37 * k + i)};
        rep.pass = rep.pass && e.zero.zero;
        rep.entries.push_back(e);
    }
    return rep;
}

double eigenResidualAt(int k, const SamplePoint& pt, const NumericPolicy& policy, XConvention conv) {
    PrecisionScope scope(policy.precisionDigits);
    double worst = 0;
    for (int i = 1; i <= 3; ++i) worst = std::max(worst, absd(ringEval(eigenDiff(k, i, conv), pt, policy)));
    return worst;
}

}  // namespace edaha
