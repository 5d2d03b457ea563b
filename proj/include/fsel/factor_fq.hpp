#pragma once

// Factorisation of univariate polynomials over finite fields: squarefree
// decomposition, distinct-degree and (randomised, seeded) equal-degree
// splitting. Generic over any field context exposing order(),
// characteristic(), random() and the usual element operations.

#include "fsel/field_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace fsel {

struct FactorOptions {
    std::uint64_t seed = 0x5eedf5e1c0ffee11ull;
};

template <class Field>
struct FqFactorization {
    typename Field::Elem unit;
    std::vector<std::pair<FieldPoly<Field>, int>> factors;  // monic irreducibles with multiplicity
};

namespace fqdetail {

template <class Field>
typename Field::Elem pth_root(const Field& F, const typename Field::Elem& a) {
    // a^(q/l) is the unique l-th root in F_q
    return F.pow(a, F.order() / BigInt(static_cast<unsigned long>(F.characteristic())));
}

template <class Field>
FieldPoly<Field> pth_root_poly(const Field& F, const FieldPoly<Field>& c) {
    const auto l = static_cast<std::size_t>(F.characteristic());
    FieldPoly<Field> r;
    for (std::size_t i = 0; i < c.size(); i += l) r.push_back(pth_root(F, c[i]));
    fpoly::trim(F, r);
    return r;
}

template <class Field>
bool is_one(const Field& F, const FieldPoly<Field>& a) {
    return a.size() == 1 && F.equal(a[0], F.one());
}

template <class Field>
FieldPoly<Field> exact_div(const Field& F, const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
    auto [q, r] = fpoly::divmod(F, a, b);
    if (!r.empty()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

template <class Field, class Rng>
FieldPoly<Field> random_poly(const Field& F, int deg_bound, Rng& rng) {
    FieldPoly<Field> a;
    for (int i = 0; i < deg_bound; ++i) a.push_back(F.random(rng));
    fpoly::trim(F, a);
    return a;
}

template <class Field>
bool poly_less(const Field& F, const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
        const auto ia = F.index(a[i]), ib = F.index(b[i]);
        if (ia != ib) return ia < ib;
    }
    return false;
}

}  // namespace fqdetail

/// Squarefree decomposition of a monic polynomial: pairs (s_i, i) with f = prod s_i^i.
template <class Field>
std::vector<std::pair<FieldPoly<Field>, int>> squarefree_decomposition(const Field& F, const FieldPoly<Field>& f) {
    using namespace fqdetail;
    std::vector<std::pair<FieldPoly<Field>, int>> out;
    if (fpoly::degree(f) < 1) return out;
    const auto df = fpoly::derivative(F, f);
    if (df.empty()) {
        const int l = static_cast<int>(F.characteristic());
        for (auto& [s, m] : squarefree_decomposition(F, pth_root_poly(F, f))) out.emplace_back(s, m * l);
        return out;
    }
    auto c = fpoly::gcd(F, f, df);
    auto w = exact_div(F, f, c);
    int i = 1;
    while (!is_one(F, w)) {
        auto y = fpoly::gcd(F, w, c);
        auto z = exact_div(F, w, y);
        if (!is_one(F, z)) out.emplace_back(z, i);
        ++i;
        w = y;
        c = exact_div(F, c, y);
    }
    if (!is_one(F, c)) {
        const int l = static_cast<int>(F.characteristic());
        for (auto& [s, m] : squarefree_decomposition(F, pth_root_poly(F, c))) out.emplace_back(s, m * l);
    }
    return out;
}

/// Distinct-degree factorisation of a squarefree monic polynomial: pairs (g_d, d)
/// where g_d is the product of all irreducible factors of degree d.
template <class Field>
std::vector<std::pair<FieldPoly<Field>, int>> distinct_degree_factorization(const Field& F, FieldPoly<Field> f) {
    std::vector<std::pair<FieldPoly<Field>, int>> out;
    const auto X = fpoly::x(F);
    auto h = fpoly::rem(F, X, f);
    const BigInt q = F.order();
    for (int d = 1; fpoly::degree(f) >= 2 * d; ++d) {
        h = fpoly::powmod(F, h, q, f);
        auto g = fpoly::gcd(F, fpoly::sub(F, h, X), f);
        if (fpoly::degree(g) > 0) {
            out.emplace_back(g, d);
            f = fqdetail::exact_div(F, f, g);
            h = fpoly::rem(F, h, f);
        }
    }
    if (fpoly::degree(f) > 0) out.emplace_back(f, fpoly::degree(f));
    return out;
}

/// Splits a monic product of distinct degree-d irreducibles into its factors.
template <class Field, class Rng>
std::vector<FieldPoly<Field>> equal_degree_factorization(const Field& F, const FieldPoly<Field>& g, int d,
                                                         Rng& rng) {
    using namespace fqdetail;
    const int n = fpoly::degree(g);
    if (n == d) return {g};
    const BigInt q = F.order();
    FieldPoly<Field> split;
    while (true) {
        auto a = random_poly(F, n, rng);
        if (fpoly::degree(a) < 1) continue;
        auto b = fpoly::gcd(F, a, g);
        if (fpoly::degree(b) > 0 && fpoly::degree(b) < n) {
            split = b;
            break;
        }
        FieldPoly<Field> c;
        if (F.characteristic() == 2) {
            // trace map a + a^2 + ... + a^(2^(k d - 1)), q = 2^k
            const long steps = static_cast<long>(F.degree()) * d;
            c = a;
            auto t = a;
            for (long i = 1; i < steps; ++i) {
                t = fpoly::mulmod(F, t, t, g);
                c = fpoly::add(F, c, t);
            }
        } else {
            BigInt e = (pow_int(q, static_cast<unsigned long>(d)) - 1) / 2;
            c = fpoly::sub(F, fpoly::powmod(F, a, e, g), fpoly::constant(F, F.one()));
        }
        b = fpoly::gcd(F, c, g);
        if (fpoly::degree(b) > 0 && fpoly::degree(b) < n) {
            split = b;
            break;
        }
    }
    auto rest = exact_div(F, g, split);
    auto left = equal_degree_factorization(F, split, d, rng);
    auto right = equal_degree_factorization(F, rest, d, rng);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

/// Complete factorisation. Factors are sorted by degree then coefficients, so the
/// output is deterministic given the seed.
template <class Field>
FqFactorization<Field> factor_fq(const Field& F, const FieldPoly<Field>& f, const FactorOptions& opts = {}) {
    if (f.empty()) throw std::invalid_argument("factor_fq: zero polynomial");
    std::mt19937_64 rng(opts.seed);
    FqFactorization<Field> out{f.back(), {}};
    const auto monic = fpoly::make_monic(F, f);
    for (const auto& [s, m] : squarefree_decomposition(F, monic)) {
        for (const auto& [g, d] : distinct_degree_factorization(F, s)) {
            for (auto& irr : equal_degree_factorization(F, g, d, rng)) out.factors.emplace_back(std::move(irr), m);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [&](const auto& a, const auto& b) {
        if (fqdetail::poly_less(F, a.first, b.first)) return true;
        if (fqdetail::poly_less(F, b.first, a.first)) return false;
        return a.second < b.second;
    });
    return out;
}

/// Distinct roots of f in the field, sorted by index.
template <class Field>
std::vector<typename Field::Elem> roots_fq(const Field& F, const FieldPoly<Field>& f,
                                           const FactorOptions& opts = {}) {
    if (f.empty()) throw std::invalid_argument("roots_fq: zero polynomial");
    std::vector<typename Field::Elem> out;
    if (fpoly::degree(f) < 1) return out;
    const auto monic = fpoly::make_monic(F, f);
    const auto X = fpoly::x(F);
    auto g = fpoly::gcd(F, fpoly::sub(F, fpoly::powmod(F, X, F.order(), monic), X), monic);
    if (fpoly::degree(g) < 1) return out;
    std::mt19937_64 rng(opts.seed);
    for (const auto& lin : equal_degree_factorization(F, g, 1, rng)) out.push_back(F.neg(lin[0]));
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return F.index(a) < F.index(b); });
    return out;
}

/// Multiplicity of r as a root of f (f nonzero).
template <class Field>
int root_multiplicity(const Field& F, FieldPoly<Field> f, const typename Field::Elem& r) {
    const FieldPoly<Field> lin = {F.neg(r), F.one()};
    int m = 0;
    while (!f.empty()) {
        auto [q, rm] = fpoly::divmod(F, f, lin);
        if (!rm.empty()) break;
        f = std::move(q);
        ++m;
    }
    return m;
}

/// Ben-Or irreducibility test.
template <class Field>
bool is_irreducible(const Field& F, const FieldPoly<Field>& f) {
    const int n = fpoly::degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const auto monic = fpoly::make_monic(F, f);
    const auto X = fpoly::x(F);
    auto h = fpoly::rem(F, X, monic);
    for (int i = 1; i <= n / 2; ++i) {
        h = fpoly::powmod(F, h, F.order(), monic);
        if (!fqdetail::is_one(F, fpoly::gcd(F, fpoly::sub(F, h, X), monic))) return false;
    }
    return true;
}

}  // namespace fsel
