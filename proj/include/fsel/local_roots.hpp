#pragma once

// Roots of integer polynomials in Z_p and in Z_p[zeta_p], by residue-field
// root finding, Newton lifting of simple roots and pi-adic splitting of
// repeated ones. Unresolved clusters are reported, never dropped.

#include "fsel/factor_fq.hpp"
#include "fsel/field_poly.hpp"
#include "fsel/int_poly.hpp"
#include "fsel/local_ring.hpp"
#include "fsel/padic.hpp"
#include "fsel/prime_field.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace fsel {

enum class RootCertainty { certified, inconclusive };

inline const char* to_string(RootCertainty c) { return c == RootCertainty::certified ? "certified" : "inconclusive"; }

struct LocalRootOptions {
    int initial_digits = 32;
    int max_digits = 256;
    int depth_budget = 16;
    /// Also look for roots of negative valuation, as reciprocals of roots of
    /// the reversed polynomial lying in the maximal ideal.
    bool include_nonintegral = false;
};

/// A root (or an unresolved cluster of roots) in a truncated local ring.
/// When `reciprocal` is set, the root of f is 1/value and value lies in the
/// maximal ideal. Precision is counted in powers of the uniformizer.
template <class Ring>
struct RingRoot {
    typename Ring::Elem value;
    int precision = 0;
    RootCertainty certainty = RootCertainty::certified;
    bool reciprocal = false;
};

template <class Ring>
struct RingRootSearch {
    std::vector<RingRoot<Ring>> roots;
    int working_digits = 0;
    bool complete() const {
        return std::all_of(roots.begin(), roots.end(),
                           [](const auto& r) { return r.certainty == RootCertainty::certified; });
    }
};

namespace localdetail {

template <class Ring>
using RPoly = std::vector<typename Ring::Elem>;

template <class Ring>
typename Ring::Elem eval(const Ring& R, const RPoly<Ring>& f, const typename Ring::Elem& x) {
    auto acc = R.zero();
    for (std::size_t i = f.size(); i-- > 0;) acc = R.add(R.mul(acc, x), f[i]);
    return acc;
}

template <class Ring>
RPoly<Ring> derivative(const Ring& R, const RPoly<Ring>& f) {
    RPoly<Ring> d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(R.mul(R.from_int(BigInt(static_cast<unsigned long>(i))), f[i]));
    if (d.empty()) d.push_back(R.zero());
    return d;
}

/// G(r + pi x).
template <class Ring>
RPoly<Ring> shift_scale(const Ring& R, RPoly<Ring> g, const typename Ring::Elem& r) {
    const std::size_t n = g.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) g[j] = R.add(g[j], R.mul(r, g[j + 1]));
    const auto P = R.pi_pow(1);
    auto pk = R.one();
    for (std::size_t j = 0; j < n; ++j) {
        g[j] = R.mul(g[j], pk);
        pk = R.mul(pk, P);
    }
    return g;
}

template <class Ring>
RPoly<Ring> from_intpoly(const Ring& R, const IntPoly& f) {
    RPoly<Ring> out;
    for (const auto& c : f.coeffs()) out.push_back(R.from_int(c));
    return out;
}

/// Roots of G, known modulo pi^M, in residue classes accepted by `only`.
template <class Ring>
std::vector<RingRoot<Ring>> search(const Ring& R, RPoly<Ring> G, int M, int depth, int budget,
                                   std::optional<std::uint64_t> only) {
    std::vector<RingRoot<Ring>> out;
    int k = M;
    for (const auto& c : G) k = std::min(k, R.val(c));
    if (k >= M) {
        // Everything visible is zero: the whole class is unresolved.
        out.push_back({R.zero(), 0, RootCertainty::inconclusive, false});
        return out;
    }
    for (auto& c : G) c = R.div_pi_pow(c, k);
    M -= k;

    const PrimeField F(R.prime().get_ui());
    FieldPoly<PrimeField> gbar;
    for (const auto& c : G) gbar.push_back(R.residue(c));
    fpoly::trim(F, gbar);
    if (fpoly::degree(gbar) < 1) return out;

    const auto dG = derivative(R, G);
    for (const auto r : roots_fq(F, gbar)) {
        if (only && r != *only) continue;
        const auto rr = R.from_residue(r);
        const int m = root_multiplicity(F, gbar, r);
        if (m == 1) {
            auto x = rr;
            bool ok = false;
            for (int it = 0; it < 80; ++it) {
                const auto fx = eval(R, G, x);
                if (R.val(fx) >= M) {
                    ok = true;
                    break;
                }
                x = R.sub(x, R.mul(fx, R.inv_unit(eval(R, dG, x))));
            }
            out.push_back({x, M, ok ? RootCertainty::certified : RootCertainty::inconclusive, false});
            continue;
        }
        if (depth >= budget) {
            out.push_back({rr, 1, RootCertainty::inconclusive, false});
            continue;
        }
        const auto H = shift_scale(R, G, rr);
        const auto P = R.pi_pow(1);
        for (auto& child : search(R, H, M, depth + 1, budget, std::nullopt)) {
            child.value = R.add(rr, R.mul(P, child.value));
            child.precision += 1;
            out.push_back(std::move(child));
        }
    }
    return out;
}

inline IntPoly squarefree_part(const IntPoly& f) {
    const IntPoly g = gcd(f, f.derivative());
    if (g.degree() <= 0) return f.primitive_part();
    return exact_quotient(f, g).primitive_part();
}

/// One search pass at a fixed working precision.
template <class Ring>
RingRootSearch<Ring> search_once(const Ring& R, const IntPoly& f, const LocalRootOptions& opts) {
    RingRootSearch<Ring> res;
    res.working_digits = R.digits();
    res.roots = search(R, from_intpoly(R, f), R.cap(), 0, opts.depth_budget, std::nullopt);
    if (opts.include_nonintegral && f.degree() >= 1) {
        for (auto& t : search(R, from_intpoly(R, f.reversed()), R.cap(), 0, opts.depth_budget, std::uint64_t{0})) {
            t.reciprocal = true;
            // 1/t is only meaningful once t is visibly nonzero.
            if (t.certainty == RootCertainty::certified && R.val(t.value) >= t.precision)
                t.certainty = RootCertainty::inconclusive;
            res.roots.push_back(std::move(t));
        }
    }
    return res;
}

}  // namespace localdetail

/// Root search in the ring family `Ring(p, W)`, doubling W until every root is
/// separated to at least `N` digits or the budget is exhausted.
template <class Ring>
RingRootSearch<Ring> local_root_search(const IntPoly& f, const BigInt& p, int N, const LocalRootOptions& opts = {}) {
    if (f.is_zero()) throw std::invalid_argument("local root search: zero polynomial");
    if (N < 1) throw std::invalid_argument("local root search: precision must be positive");
    const IntPoly g = localdetail::squarefree_part(f);
    int W = std::max(N, opts.initial_digits);
    RingRootSearch<Ring> res;
    for (;;) {
        const Ring R(p, W);
        res = localdetail::search_once(R, g, opts);
        const int need = N * R.ramification();
        bool retry = false;
        for (auto& r : res.roots) {
            if (r.certainty == RootCertainty::certified && r.precision < need) retry = true;
            if (r.certainty == RootCertainty::inconclusive) retry = true;
        }
        const int next = 2 * W;
        if (!retry || next > std::max(opts.max_digits, N)) {
            const IntPoly h = g.reversed();
            for (auto& r : res.roots) {
                if (r.certainty != RootCertainty::certified) continue;
                if (r.precision < need) {
                    r.certainty = RootCertainty::inconclusive;
                    continue;
                }
                const auto val = localdetail::eval(R, localdetail::from_intpoly(R, r.reciprocal ? h : g), r.value);
                if (R.val(val) < need) throw std::logic_error("local root search: certified root fails f(r) = 0");
            }
            return res;
        }
        W = next;
    }
}

struct PadicRoot {
    PadicNumber value;  // the root of f itself (negative valuation allowed)
    RootCertainty certainty;
};

struct PadicRootSet {
    std::vector<PadicRoot> roots;
    int working_digits = 0;
    bool complete() const {
        return std::all_of(roots.begin(), roots.end(),
                           [](const auto& r) { return r.certainty == RootCertainty::certified; });
    }
};

/// Roots of f in Z_p (and, with include_nonintegral, in Q_p).
inline PadicRootSet padic_roots(const IntPoly& f, const BigInt& p, int N, const LocalRootOptions& opts = {}) {
    const auto s = local_root_search<ZpRing>(f, p, N, opts);
    PadicRootSet out;
    out.working_digits = s.working_digits;
    for (const auto& r : s.roots) {
        PadicNumber v(p, BigRat(r.value), r.precision);
        if (r.reciprocal && r.certainty == RootCertainty::certified) v = PadicNumber(p, BigRat(1), r.precision) / v;
        out.roots.push_back({v, r.certainty});
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const PadicRoot& a, const PadicRoot& b) {
        if (a.value.valuation() != b.value.valuation()) return a.value.valuation() < b.value.valuation();
        return a.value.unit() < b.value.unit();
    });
    return out;
}

struct EisensteinRoot {
    EisensteinElement value;  // the root, or its reciprocal when `reciprocal`
    RootCertainty certainty;
    bool reciprocal = false;
};

struct EisensteinRootSet {
    std::vector<EisensteinRoot> roots;
    int working_digits = 0;
    bool complete() const {
        return std::all_of(roots.begin(), roots.end(),
                           [](const auto& r) { return r.certainty == RootCertainty::certified; });
    }
};

/// Roots of f in Z_p[zeta_p], with precision N counted in p-adic digits.
inline EisensteinRootSet eisenstein_roots(const IntPoly& f, const BigInt& p, int N, const LocalRootOptions& opts = {}) {
    const auto s = local_root_search<EisensteinRing>(f, p, N, opts);
    EisensteinRootSet out;
    out.working_digits = s.working_digits;
    for (const auto& r : s.roots) out.roots.push_back({EisensteinElement(p, r.value, r.precision), r.certainty, r.reciprocal});
    return out;
}

/// f evaluated at an element of Z_p[zeta_p], at that element's precision.
inline EisensteinElement eisenstein_eval(const IntPoly& f, const EisensteinElement& x) {
    const int e = x.ramification();
    const int W = std::max(1, (x.pi_precision() + e - 1) / e);
    const EisensteinRing R(x.prime(), W);
    std::vector<BigInt> xs = x.raw_coordinates();
    for (auto& c : xs) c = mod(c, pow_int(x.prime(), static_cast<unsigned long>(W)));
    const auto v = localdetail::eval(R, localdetail::from_intpoly(R, f), xs);
    return EisensteinElement(x.prime(), v, std::min(x.pi_precision(), R.cap()));
}

}  // namespace fsel
