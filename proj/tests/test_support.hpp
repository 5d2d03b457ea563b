#pragma once

#include "fsel/int_poly.hpp"
#include "fsel/weierstrass.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fsel::testing {

struct CorpusCurve {
    std::string label;
    std::array<long, 5> a;
    long conductor;
};

/// Twenty minimal models with known conductors.
inline const std::vector<CorpusCurve>& corpus() {
    static const std::vector<CorpusCurve> c = {
        {"11a1", {0, -1, 1, -10, -20}, 11},    {"11a2", {0, -1, 1, -7820, -263580}, 11},
        {"11a3", {0, -1, 1, 0, 0}, 11},        {"14a1", {1, 0, 1, 4, -6}, 14},
        {"15a1", {1, 1, 1, -10, -10}, 15},     {"17a1", {1, -1, 1, -1, -14}, 17},
        {"19a1", {0, 1, 1, -9, -15}, 19},      {"20a1", {0, 1, 0, 4, 4}, 20},
        {"21a1", {1, 0, 0, -4, -1}, 21},       {"24a1", {0, -1, 0, -4, 4}, 24},
        {"26a1", {1, 0, 1, -5, -8}, 26},       {"27a1", {0, 0, 1, 0, -7}, 27},
        {"30a1", {1, 0, 1, 1, 2}, 30},         {"32a1", {0, 0, 0, 4, 0}, 32},
        {"36a1", {0, 0, 0, 0, 1}, 36},         {"37a1", {0, 0, 1, -1, 0}, 37},
        {"37b1", {0, 1, 1, -23, -50}, 37},     {"43a1", {0, 1, 1, 0, 0}, 43},
        {"49a1", {1, -1, 0, -2, -1}, 49},      {"54a1", {1, -1, 0, 12, 8}, 54},
    };
    return c;
}

inline WeierstrassModel model(const CorpusCurve& c) { return WeierstrassModel::from_ints(c.a); }

inline WeierstrassModel random_curve(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    for (;;) {
        try {
            return WeierstrassModel::from_ints({d(rng) % 2 == 0 ? 0L : 1L, d(rng) % 2, d(rng) % 2 == 0 ? 0L : 1L, d(rng), d(rng)});
        } catch (const std::invalid_argument&) {
        }
    }
}

inline long smod(long a, long m) { return ((a % m) + m) % m; }

/// Affine solutions of the Weierstrass equation over F_l by double enumeration.
inline long brute_affine_points(const std::array<long, 5>& a, long l) {
    long n = 0;
    for (long x = 0; x < l; ++x)
        for (long y = 0; y < l; ++y) {
            const long lhs = smod(y * y + a[0] * x % l * y + a[2] * y, l);
            const long rhs = smod(((x * x % l) * x + a[1] * (x * x % l) + a[3] * x + a[4]) % l, l);
            if (lhs == rhs) ++n;
        }
    return n;
}

/// Affine singular points over F_l by enumeration (equation and both partials vanish).
inline long brute_singular_points(const std::array<long, 5>& a, long l) {
    long n = 0;
    for (long x = 0; x < l; ++x)
        for (long y = 0; y < l; ++y) {
            const long f = smod(y * y + a[0] * x * y + a[2] * y - x * x * x - a[1] * x * x - a[3] * x - a[4], l);
            const long fx = smod(a[0] * y - 3 * x * x - 2 * a[1] * x - a[3], l);
            const long fy = smod(2 * y + a[0] * x + a[2], l);
            if (f == 0 && fx == 0 && fy == 0) ++n;
        }
    return n;
}

inline std::array<long, 5> small_a(const WeierstrassModel& E) {
    const auto a = E.integral_a();
    return {a[0].get_si(), a[1].get_si(), a[2].get_si(), a[3].get_si(), a[4].get_si()};
}

/// Multiplicative order of a modulo m by repeated multiplication.
inline long order_mod(long a, long m) {
    long k = 1, x = smod(a, m);
    while (x != 1) {
        x = x * smod(a, m) % m;
        ++k;
    }
    return k;
}

inline long p_part(long n, long p) {
    long r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

inline std::uint64_t eval_mod(const IntPoly& f, std::uint64_t x, std::uint64_t m) {
    unsigned __int128 acc = 0;
    for (int i = f.degree(); i >= 0; --i) acc = (acc * x + mod_u64(f.coeff(i), m)) % m;
    return static_cast<std::uint64_t>(acc);
}

inline int val_u64(std::uint64_t a, std::uint64_t p, int cap) {
    if (a == 0) return cap;
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return std::min(v, cap);
}

/// Dense random coefficients or a product of random linear factors, degree <= 6.
inline IntPoly random_poly(std::mt19937_64& rng) {
    std::vector<BigInt> c;
    if (rng() % 2 == 0) {
        const int d = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i <= d; ++i) c.push_back(BigInt(static_cast<long>(rng() % 2001) - 1000));
        if (c.back() == 0) c.back() = 1;
        return IntPoly(c);
    }
    IntPoly f = IntPoly::constant(1);
    const int d = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < d; ++i) f = f * IntPoly({-(static_cast<long>(rng() % 400) - 200), 1});
    return f;
}

}  // namespace fsel::testing
