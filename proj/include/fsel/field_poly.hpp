#pragma once

// Dense univariate polynomials over a finite field given as a context object
// (PrimeField or ExtensionField). A polynomial is a coefficient vector, lowest
// degree first, with no trailing zeros; the zero polynomial is empty.

#include "fsel/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace fsel {

template <class Field>
using FieldPoly = std::vector<typename Field::Elem>;

namespace fpoly {

template <class Field>
void trim(const Field& F, FieldPoly<Field>& a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

template <class E>
int degree(const std::vector<E>& a) {
    return static_cast<int>(a.size()) - 1;
}

template <class Field>
FieldPoly<Field> constant(const Field& F, const typename Field::Elem& c) {
    FieldPoly<Field> r;
    if (!F.is_zero(c)) r.push_back(c);
    return r;
}

/// x^n
template <class Field>
FieldPoly<Field> monomial(const Field& F, int n, const typename Field::Elem& c) {
    if (F.is_zero(c)) return {};
    FieldPoly<Field> r(static_cast<std::size_t>(n) + 1, F.zero());
    r[static_cast<std::size_t>(n)] = c;
    return r;
}

template <class Field>
FieldPoly<Field> x(const Field& F) {
    return monomial(F, 1, F.one());
}

template <class Field>
bool equal(const Field& F, const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!F.equal(a[i], b[i])) return false;
    return true;
}

template <class Field>
FieldPoly<Field> add(const Field& F, const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
    FieldPoly<Field> r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(F, r);
    return r;
}

template <class Field>
FieldPoly<Field> sub(const Field& F, const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
    FieldPoly<Field> r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(F, r);
    return r;
}

template <class Field>
FieldPoly<Field> scale(const Field& F, const FieldPoly<Field>& a, const typename Field::Elem& c) {
    FieldPoly<Field> r;
    r.reserve(a.size());
    for (const auto& ai : a) r.push_back(F.mul(ai, c));
    trim(F, r);
    return r;
}

template <class Field>
FieldPoly<Field> mul(const Field& F, const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
    if (a.empty() || b.empty()) return {};
    FieldPoly<Field> r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (F.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(F, r);
    return r;
}

/// Quotient and remainder; b must be nonzero.
template <class Field>
std::pair<FieldPoly<Field>, FieldPoly<Field>> divmod(const Field& F, const FieldPoly<Field>& a,
                                                     const FieldPoly<Field>& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    FieldPoly<Field> r = a;
    if (r.size() < b.size()) return {{}, r};
    FieldPoly<Field> q(r.size() - b.size() + 1, F.zero());
    const auto lead_inv = F.inv(b.back());
    const int db = static_cast<int>(b.size()) - 1;
    for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
        if (F.is_zero(r[static_cast<std::size_t>(k)])) continue;
        const auto c = F.mul(r[static_cast<std::size_t>(k)], lead_inv);
        const auto shift = static_cast<std::size_t>(k - db);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
    }
    trim(F, q);
    trim(F, r);
    return {q, r};
}

template <class Field>
FieldPoly<Field> rem(const Field& F, const FieldPoly<Field>& a, const FieldPoly<Field>& b) {
    return divmod(F, a, b).second;
}

template <class Field>
FieldPoly<Field> make_monic(const Field& F, const FieldPoly<Field>& a) {
    if (a.empty()) return a;
    return scale(F, a, F.inv(a.back()));
}

/// Monic gcd (zero if both inputs are zero).
template <class Field>
FieldPoly<Field> gcd(const Field& F, FieldPoly<Field> a, FieldPoly<Field> b) {
    while (!b.empty()) {
        auto r = rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class Field>
std::tuple<FieldPoly<Field>, FieldPoly<Field>, FieldPoly<Field>> xgcd(const Field& F, const FieldPoly<Field>& a,
                                                                       const FieldPoly<Field>& b) {
    FieldPoly<Field> r0 = a, r1 = b;
    FieldPoly<Field> s0 = constant(F, F.one()), s1 = {};
    FieldPoly<Field> t0 = {}, t1 = constant(F, F.one());
    while (!r1.empty()) {
        auto [q, r] = divmod(F, r0, r1);
        auto s2 = sub(F, s0, mul(F, q, s1));
        auto t2 = sub(F, t0, mul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {r0, s0, t0};
    const auto c = F.inv(r0.back());
    return {scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)};
}

template <class Field>
FieldPoly<Field> mulmod(const Field& F, const FieldPoly<Field>& a, const FieldPoly<Field>& b,
                        const FieldPoly<Field>& m) {
    return rem(F, mul(F, a, b), m);
}

/// a^e mod m for e >= 0.
template <class Field>
FieldPoly<Field> powmod(const Field& F, const FieldPoly<Field>& a, const BigInt& e, const FieldPoly<Field>& m) {
    FieldPoly<Field> result = rem(F, constant(F, F.one()), m);
    if (e == 0) return result;
    const FieldPoly<Field> base = rem(F, a, m);
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        result = mulmod(F, result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result = mulmod(F, result, base, m);
    }
    return result;
}

template <class Field>
FieldPoly<Field> derivative(const Field& F, const FieldPoly<Field>& a) {
    if (a.size() <= 1) return {};
    FieldPoly<Field> r(a.size() - 1, F.zero());
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), a[i]);
    trim(F, r);
    return r;
}

template <class Field>
typename Field::Elem eval(const Field& F, const FieldPoly<Field>& a, const typename Field::Elem& v) {
    auto acc = F.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, v), a[i]);
    return acc;
}

template <class Field>
FieldPoly<Field> pow(const Field& F, const FieldPoly<Field>& a, unsigned e) {
    FieldPoly<Field> r = constant(F, F.one());
    for (unsigned i = 0; i < e; ++i) r = mul(F, r, a);
    return r;
}

}  // namespace fpoly
}  // namespace fsel
