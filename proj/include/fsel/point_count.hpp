#pragma once

// Naive point counting over F_q and Frobenius traces.

#include "fsel/extension_field.hpp"
#include "fsel/group_law.hpp"
#include "fsel/prime_field.hpp"
#include "fsel/weierstrass.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fsel {

inline constexpr std::uint64_t kPointCountBound = 1000000;

/// #E(F_q), including the point at infinity. Odd characteristic uses the
/// quadratic character of the completed-square discriminant at each x;
/// characteristic 2 solves y^2 + b y = c with the absolute trace.
template <class Field>
BigInt count_points(const CurveOver<Field>& C) {
    const Field& F = C.field();
    if (F.order() > kPointCountBound) throw std::invalid_argument("count_points: field too large for enumeration");
    const std::uint64_t q = F.size();
    std::uint64_t count = 1;
    if (F.characteristic() != 2) {
        std::vector<char> square(q, 0);
        for (std::uint64_t i = 0; i < q; ++i) {
            const auto y = F.from_index(i);
            square[F.index(F.mul(y, y))] = 1;
        }
        for (std::uint64_t i = 0; i < q; ++i) {
            const auto d = C.two_torsion_cubic(F.from_index(i));
            if (F.is_zero(d))
                count += 1;
            else if (square[F.index(d)])
                count += 2;
        }
    } else {
        const long k = F.degree();
        for (std::uint64_t i = 0; i < q; ++i) {
            const auto x = F.from_index(i);
            const auto b = F.add(F.mul(C.a1(), x), C.a3());
            const auto c = F.add(F.mul(F.mul(x, x), F.add(x, C.a2())), F.add(F.mul(C.a4(), x), C.a6()));
            if (F.is_zero(b)) {
                count += 1;  // squaring is bijective
                continue;
            }
            auto z = F.div(c, F.mul(b, b));
            auto tr = z;
            for (long j = 1; j < k; ++j) {
                z = F.mul(z, z);
                tr = F.add(tr, z);
            }
            if (F.is_zero(tr)) count += 2;
        }
    }
    return BigInt(static_cast<unsigned long>(count));
}

/// a_l = l + 1 - #E(F_l) for a prime l at which the given model has good reduction.
inline BigInt trace_of_frobenius(const WeierstrassModel& E, std::uint64_t l) {
    if (!is_prime(l)) throw std::invalid_argument("trace_of_frobenius: l is not prime");
    const BigInt L(static_cast<unsigned long>(l));
    for (const auto& a : E.a_invariants())
        if (divides(L, BigInt(a.get_den())))
            throw std::invalid_argument("trace_of_frobenius: model not integral at " + std::to_string(l));
    if (divides(L, BigInt(E.discriminant().get_num())))
        throw std::invalid_argument("trace_of_frobenius: model has bad reduction at " + std::to_string(l));
    const PrimeField F(l);
    return L + 1 - count_points(CurveOver<PrimeField>(F, E));
}

}  // namespace fsel
