#pragma once

// Factorisation in Z[x] (Zassenhaus): squarefree decomposition, factorisation
// modulo a good prime, quadratic Hensel lifting past twice the Landau-Mignotte
// bound, and subset recombination with exact trial division.

#include "fsel/factor_fq.hpp"
#include "fsel/int_poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fsel {

struct IntFactorization {
    BigInt unit;  // signed content
    std::vector<std::pair<IntPoly, int>> factors;

    IntPoly product() const {
        IntPoly r = IntPoly::constant(unit);
        for (const auto& [g, m] : factors) r = r * g.pow(static_cast<unsigned>(m));
        return r;
    }
};

struct IntFactorOptions {
    FactorOptions modular;
    std::uint64_t prime_search_bound = 100000;
    int primes_to_try = 8;
};

namespace zdetail {

using ZVec = std::vector<BigInt>;

inline void trim(ZVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZVec reduce(ZVec a, const BigInt& m) {
    for (auto& c : a) c = mod(c, m);
    trim(a);
    return a;
}

inline ZVec add(const ZVec& a, const ZVec& b, const BigInt& m) {
    ZVec r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return reduce(std::move(r), m);
}

inline ZVec sub(const ZVec& a, const ZVec& b, const BigInt& m) {
    ZVec r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return reduce(std::move(r), m);
}

inline ZVec mul(const ZVec& a, const ZVec& b, const BigInt& m) {
    if (a.empty() || b.empty()) return {};
    ZVec r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return reduce(std::move(r), m);
}

/// Division by a monic divisor modulo m.
inline std::pair<ZVec, ZVec> divmod_monic(const ZVec& a, const ZVec& b, const BigInt& m) {
    ZVec r = reduce(a, m);
    if (r.size() < b.size()) return {{}, r};
    ZVec q(r.size() - b.size() + 1, BigInt(0));
    const int db = static_cast<int>(b.size()) - 1;
    for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
        const BigInt c = mod(r[static_cast<std::size_t>(k)], m);
        if (c == 0) continue;
        const auto shift = static_cast<std::size_t>(k - db);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    }
    return {reduce(std::move(q), m), reduce(std::move(r), m)};
}

inline ZVec from_fp(const FieldPoly<PrimeField>& a) {
    ZVec r;
    for (auto v : a) r.emplace_back(static_cast<unsigned long>(v));
    return r;
}

/// Lifts f = g*h (mod l) to f = g'*h' (mod target) with h' monic.
inline std::pair<ZVec, ZVec> hensel_two(const ZVec& f, const FieldPoly<PrimeField>& g0,
                                        const FieldPoly<PrimeField>& h0, const PrimeField& F,
                                        const BigInt& target) {
    auto [gg, s0, t0] = fpoly::xgcd(F, g0, h0);
    if (gg.size() != 1) throw std::logic_error("hensel_two: factors not coprime");
    BigInt m = F.order();
    ZVec g = from_fp(g0), h = from_fp(h0), s = from_fp(s0), t = from_fp(t0);
    while (m < target) {
        BigInt m2 = m * m;
        if (m2 > target) m2 = target;
        const ZVec e = sub(reduce(f, m2), mul(g, h, m2), m2);
        auto [q, r] = divmod_monic(mul(s, e, m2), h, m2);
        ZVec g1 = add(add(g, mul(t, e, m2), m2), mul(q, g, m2), m2);
        ZVec h1 = add(h, r, m2);
        ZVec b = sub(add(mul(s, g1, m2), mul(t, h1, m2), m2), ZVec{BigInt(1)}, m2);
        auto [c, d] = divmod_monic(mul(s, b, m2), h1, m2);
        s = sub(s, d, m2);
        t = sub(sub(t, mul(t, b, m2), m2), mul(c, g1, m2), m2);
        g = std::move(g1);
        h = std::move(h1);
        m = m2;
    }
    return {g, h};
}

/// Lifts the monic modular factors of f (f = lc * prod u_i mod l) to modulus `target`.
inline std::vector<ZVec> hensel_multi(const IntPoly& f, const std::vector<FieldPoly<PrimeField>>& factors,
                                      const PrimeField& F, const BigInt& target) {
    std::vector<ZVec> lifted;
    ZVec cur = reduce(f.coeffs(), target);
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        FieldPoly<PrimeField> cur_mod;
        for (const auto& c : cur) cur_mod.push_back(F.from_int(c));
        fpoly::trim(F, cur_mod);
        auto [rest, rm] = fpoly::divmod(F, cur_mod, factors[i]);
        if (!rm.empty()) throw std::logic_error("hensel_multi: factor does not divide");
        auto [g, h] = hensel_two(cur, rest, factors[i], F, target);
        lifted.push_back(std::move(h));
        cur = std::move(g);
    }
    // the last factor carries the leading coefficient; normalise it to monic
    const BigInt inv = inverse_mod(cur.back(), target);
    for (auto& c : cur) c = mod(c * inv, target);
    lifted.push_back(std::move(cur));
    return lifted;
}

inline BigInt symmetric(const BigInt& a, const BigInt& m) {
    BigInt r = mod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

/// Landau-Mignotte style bound on coefficients of any factor of f.
inline BigInt factor_coefficient_bound(const IntPoly& f) {
    BigInt norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    return pow_int(BigInt(2), static_cast<unsigned long>(f.degree())) * root * abs(f.leading());
}

inline std::set<int> subset_degree_sums(const std::vector<int>& degs) {
    std::set<int> sums{0};
    for (int d : degs) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

inline bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto ca = a.coeff(i), cb = b.coeff(i);
        if (ca != cb) return ca < cb;
    }
    return false;
}

/// Factors a primitive squarefree polynomial of positive degree and positive
/// leading coefficient.
inline std::vector<IntPoly> factor_squarefree(const IntPoly& f, const IntFactorOptions& opts) {
    const int n = f.degree();
    if (n <= 1) return {f};

    struct Candidate {
        std::uint64_t prime;
        std::vector<FieldPoly<PrimeField>> factors;
    };
    std::vector<Candidate> candidates;
    std::set<int> feasible;
    for (std::uint64_t l = 3; l < opts.prime_search_bound && static_cast<int>(candidates.size()) < opts.primes_to_try; ++l) {
        if (!is_prime(l)) continue;
        const PrimeField F(l);
        if (F.from_int(f.leading()) == 0) continue;
        const auto fm = f.reduce(F);
        const auto g = fpoly::gcd(F, fm, fpoly::derivative(F, fm));
        if (fpoly::degree(g) != 0) continue;
        auto fac = factor_fq(F, fm, opts.modular);
        Candidate c{l, {}};
        std::vector<int> degs;
        for (auto& [u, mult] : fac.factors) {
            degs.push_back(fpoly::degree(u));
            c.factors.push_back(u);
        }
        const auto sums = subset_degree_sums(degs);
        if (feasible.empty()) {
            feasible = sums;
        } else {
            std::set<int> both;
            std::set_intersection(feasible.begin(), feasible.end(), sums.begin(), sums.end(),
                                  std::inserter(both, both.begin()));
            feasible = std::move(both);
        }
        candidates.push_back(std::move(c));
        if (feasible.size() == 2) return {f};  // only 0 and n are possible degrees
    }
    if (candidates.empty()) throw std::runtime_error("factor_int_poly: no good prime below the search bound");

    const auto best = std::min_element(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return a.factors.size() < b.factors.size();
    });
    const PrimeField F(best->prime);
    const BigInt bound = 2 * factor_coefficient_bound(f) + 1;
    BigInt modulus = F.order();
    while (modulus <= bound) modulus *= F.order();
    if (best->factors.size() == 1) return {f};

    const auto lifted = hensel_multi(f, best->factors, F, modulus);

    std::vector<IntPoly> found;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < lifted.size(); ++i) remaining[i] = i;
    IntPoly cur = f;
    std::size_t size = 1;
    while (2 * size <= remaining.size()) {
        bool hit = false;
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            int deg = 0;
            for (auto idx : pick) deg += static_cast<int>(lifted[remaining[idx]].size()) - 1;
            if (feasible.count(deg) && deg < cur.degree()) {
                ZVec prod{mod(cur.leading(), modulus)};
                for (auto idx : pick) prod = mul(prod, lifted[remaining[idx]], modulus);
                std::vector<BigInt> sym;
                for (const auto& c : prod) sym.push_back(symmetric(c, modulus));
                IntPoly cand = IntPoly(std::move(sym)).primitive_part();
                IntPoly quotient;
                const bool const_ok = cur.coeff(0) == 0 || (cand.coeff(0) != 0 && divides(cand.coeff(0), cur.coeff(0)));
                if (const_ok && divides_exactly(cur, cand, &quotient)) {
                    found.push_back(cand);
                    cur = quotient;
                    std::vector<std::size_t> rest;
                    for (std::size_t i = 0; i < remaining.size(); ++i)
                        if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(remaining[i]);
                    remaining = std::move(rest);
                    hit = true;
                    break;
                }
            }
            // next combination
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == remaining.size() - size + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!hit) ++size;
    }
    if (cur.degree() > 0) found.push_back(cur.primitive_part());
    return found;
}

}  // namespace zdetail

/// Squarefree decomposition over Z of a primitive polynomial with positive
/// leading coefficient.
inline std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    std::vector<std::pair<IntPoly, int>> out;
    if (f.degree() < 1) return out;
    IntPoly c = gcd(f, f.derivative());
    IntPoly w = exact_quotient(f, c);
    int i = 1;
    while (w.degree() > 0) {
        IntPoly y = gcd(w, c);
        IntPoly z = exact_quotient(w, y);
        if (z.degree() > 0) out.emplace_back(z.primitive_part(), i);
        ++i;
        w = y;
        c = exact_quotient(c, y);
    }
    return out;
}

/// Irreducible factorisation over Z. The product of the factors (with
/// multiplicity) times the unit reproduces f exactly; this is checked.
inline IntFactorization factor_int_poly(const IntPoly& f, const IntFactorOptions& opts = {}) {
    if (f.is_zero()) throw std::invalid_argument("factor_int_poly: zero polynomial");
    IntFactorization out;
    BigInt cont = f.content();
    if (f.leading() < 0) cont = -cont;
    out.unit = cont;
    const IntPoly prim = f.divexact(cont);
    if (prim.degree() == 0) return out;
    for (const auto& [s, m] : squarefree_decomposition(prim)) {
        for (auto& g : zdetail::factor_squarefree(s, opts)) out.factors.emplace_back(g, m);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (zdetail::poly_less(a.first, b.first)) return true;
        if (zdetail::poly_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    if (!(out.product() == f)) throw std::logic_error("factor_int_poly: product check failed");
    return out;
}

}  // namespace fsel
