#pragma once

// Division polynomials of an integral long Weierstrass model, as polynomials in
// x alone. For odd n the result is psi_n; for even n it is psi_n / psi_2, where
// psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.

#include "fsel/int_poly.hpp"
#include "fsel/weierstrass.hpp"

#include <stdexcept>
#include <vector>

namespace fsel {

struct DivisionPoly {
    int n;
    IntPoly psi;
};

/// Reduced division polynomials f_0 .. f_n via the standard doubling recurrences.
inline std::vector<IntPoly> division_polynomial_sequence(const WeierstrassModel& E, int n) {
    if (n < 0) throw std::invalid_argument("division polynomial index must be >= 0");
    if (!E.is_integral()) throw std::invalid_argument("division polynomials need an integral model");
    const BigInt b2 = E.b2().get_num(), b4 = E.b4().get_num(), b6 = E.b6().get_num(), b8 = E.b8().get_num();
    const IntPoly F2 = IntPoly(std::vector<BigInt>{b6, 2 * b4, b2, BigInt(4)});
    const IntPoly F2sq = F2 * F2;

    std::vector<IntPoly> f(static_cast<std::size_t>(std::max(n, 4)) + 1);
    f[0] = IntPoly();
    f[1] = IntPoly::constant(1);
    f[2] = IntPoly::constant(1);
    f[3] = IntPoly(std::vector<BigInt>{b8, 3 * b6, 3 * b4, b2, BigInt(3)});
    f[4] = IntPoly(std::vector<BigInt>{b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, BigInt(2)});
    for (int k = 5; k <= n; ++k) {
        const int m = k / 2;
        const auto& fm = f[static_cast<std::size_t>(m)];
        const auto& fm1 = f[static_cast<std::size_t>(m + 1)];
        const auto& fm2 = f[static_cast<std::size_t>(m + 2)];
        const auto& fmm1 = f[static_cast<std::size_t>(m - 1)];
        if (k % 2 == 1) {
            // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
            if (m % 2 == 0)
                f[static_cast<std::size_t>(k)] = F2sq * fm2 * fm.pow(3) - fmm1 * fm1.pow(3);
            else
                f[static_cast<std::size_t>(k)] = fm2 * fm.pow(3) - F2sq * fmm1 * fm1.pow(3);
        } else {
            // psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / psi_2
            const auto& fmm2 = f[static_cast<std::size_t>(m - 2)];
            f[static_cast<std::size_t>(k)] = fm * (fm2 * fmm1.pow(2) - fmm2 * fm1.pow(2));
        }
    }
    f.resize(static_cast<std::size_t>(n) + 1);
    return f;
}

/// psi_n for odd n in [3, 13]; degree (n^2 - 1)/2, leading coefficient n.
inline DivisionPoly division_polynomial(const WeierstrassModel& E, int n) {
    if (n % 2 == 0) throw std::invalid_argument("division_polynomial: even n is not supported");
    if (n < 3 || n > 13) throw std::invalid_argument("division_polynomial: n must lie in [3, 13]");
    if (!E.is_integral()) throw std::invalid_argument("division_polynomial: model must be integral");
    auto seq = division_polynomial_sequence(E, n);
    DivisionPoly out{n, std::move(seq[static_cast<std::size_t>(n)])};
    if (out.psi.degree() != (n * n - 1) / 2 || out.psi.leading() != n)
        throw std::logic_error("division_polynomial: degree/leading coefficient invariant violated");
    return out;
}

}  // namespace fsel
