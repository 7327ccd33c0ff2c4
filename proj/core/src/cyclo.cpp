#include "edaha/corering.hpp"

#include <mutex>
#include <numeric>
#include <set>

namespace edaha {

namespace {

std::vector<long> polyDivExact(std::vector<long> num, const std::vector<long>& den) {
    // Both low-to-high, den monic with constant term +-1.
    std::vector<long> q(num.size() - den.size() + 1, 0);
    for (size_t i = q.size(); i-- > 0;) {
        long c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return q;
}

}  // namespace

const std::vector<long>& cyclotomicCoeffs(int n) {
    static std::recursive_mutex mu;
    static std::map<int, std::vector<long>> table;
    std::lock_guard lock(mu);
    if (auto it = table.find(n); it != table.end()) return it->second;
    // x^n - 1 divided by Phi_d for proper divisors d.
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        p = polyDivExact(p, cyclotomicCoeffs(d));
    }
    return table.emplace(n, p).first->second;
}

int eulerPhi(int n) {
    int r = n;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        r -= r / q;
    }
    if (n > 1) r -= r / n;
    return r;
}

Direction directionOf(const Exp& d) {
    if (isZeroExp(d)) throw std::domain_error("directionOf: zero vector");
    for (int k = 0; k < 3; ++k)
        if (d[k] % 2) throw std::domain_error("half-integer exponent in a denominator factor");
    int g = std::gcd(std::gcd(std::abs(d[0]), std::abs(d[1])), std::abs(d[2])) / 2;
    Exp v = {d[0] / g, d[1] / g, d[2] / g};
    int sign = 1;
    for (int k = 0; k < 3; ++k) {
        if (v[k] == 0) continue;
        if (v[k] < 0) {
            v = -v;
            sign = -1;
        }
        break;
    }
    return {v, g, sign};
}

LaurentPoly CycloFactor::poly() const {
    if (e == 1) return LaurentPoly(1) - LaurentPoly::monomial(v);
    LaurentPoly r;
    const auto& c = cyclotomicCoeffs(e);
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k]) r.addTerm(int(k) * v, GaussRat(c[k]));
    return r;
}

std::string CycloFactor::str() const {
    if (e == 1) return "(1 - " + expStr(v) + ")";
    return "C" + std::to_string(e) + "(" + expStr(v) + ")";
}

OneMinusSplit splitOneMinus(const Exp& d) {
    Direction dir = directionOf(d);
    OneMinusSplit r{LaurentPoly(1), {}};
    for (int e = 1; e <= dir.n; ++e)
        if (dir.n % e == 0) r.factors.push_back({dir.v, e});
    if (dir.sign < 0) r.unit = LaurentPoly::monomial(d, GaussRat(-1));
    return r;
}

std::pair<LaurentPoly, CycloFactor> orientFactor(const Exp& v, int e) {
    Direction dir = directionOf(v);
    if (dir.n != 1) throw std::domain_error("orientFactor: vector not primitive");
    if (dir.sign > 0) return {LaurentPoly(1), {v, e}};
    if (e == 1) return {LaurentPoly::monomial(v, GaussRat(-1)), {dir.v, 1}};
    return {LaurentPoly::monomial(eulerPhi(e) * v), {dir.v, e}};
}

std::pair<LaurentPoly, std::vector<Exp>> toOneMinusForm(LaurentPoly num, const CycloDen& den) {
    std::map<Exp, std::multiset<int>> byDir;
    for (auto& [f, m] : den)
        for (int k = 0; k < m; ++k) byDir[f.v].insert(f.e);
    std::vector<Exp> out;
    for (auto& [v, es] : byDir) {
        while (!es.empty()) {
            int e = *es.rbegin();
            for (int d = 1; d <= e; ++d) {
                if (e % d) continue;
                if (auto it = es.find(d); it != es.end()) es.erase(it);
                else num = num * CycloFactor{v, d}.poly();
            }
            out.push_back(e * v);
        }
    }
    return {num, out};
}

std::optional<std::pair<LaurentPoly, CycloDen>> factorCyclo(const LaurentPoly& f) {
    if (f.isZero()) return std::nullopt;
    LaurentPoly rem = f;
    CycloDen fac;
    while (!rem.isMonomial()) {
        auto [le, lc] = rem.leading();
        std::map<Exp, int> dirs;
        for (auto& [e, c] : rem.terms()) {
            Exp d = le - e;
            if (isZeroExp(d) || d[0] % 2 || d[1] % 2 || d[2] % 2) continue;
            Direction dir = directionOf(d);
            dirs[dir.v] = std::max(dirs[dir.v], dir.n);
        }
        bool progressed = false;
        for (auto& [v, n] : dirs) {
            for (int e = 1; e <= std::min(2 * n + 2, 64) && !progressed; ++e) {
                CycloFactor cf{v, e};
                if (auto q = divideExact(rem, cf.poly())) {
                    rem = *q;
                    ++fac[cf];
                    progressed = true;
                }
            }
            if (progressed) break;
        }
        if (!progressed) return std::nullopt;
    }
    return std::make_pair(rem, fac);
}

}  // namespace edaha
