#pragma once

// Tate's algorithm: local minimal model, Kodaira symbol, conductor exponent
// and Tamagawa number of an elliptic curve over Q at a prime l.

#include "fsel/arith.hpp"
#include "fsel/weierstrass.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>
#include <array>

namespace fsel {

enum class ReductionType { good, split_multiplicative, nonsplit_multiplicative, additive };

inline const char* to_string(ReductionType t) {
    switch (t) {
        case ReductionType::good: return "good";
        case ReductionType::split_multiplicative: return "split-multiplicative";
        case ReductionType::nonsplit_multiplicative: return "nonsplit-multiplicative";
        case ReductionType::additive: return "additive";
    }
    return "?";
}

inline bool is_bad(ReductionType t) { return t != ReductionType::good; }
inline bool is_multiplicative(ReductionType t) {
    return t == ReductionType::split_multiplicative || t == ReductionType::nonsplit_multiplicative;
}

struct ReductionData {
    BigInt prime;
    WeierstrassModel minimal_model;  // minimal at `prime`, integral
    ReductionType type;
    std::string kodaira;  // informational
    int disc_valuation;   // v(Delta_min)
    int conductor_exponent;
    int tamagawa;
};

namespace tatedetail {

inline BigInt preduce(const BigInt& a, const BigInt& p) { return mod(a, p); }
inline BigInt pinv(const BigInt& a, const BigInt& p) { return inverse_mod(mod(a, p), p); }
inline int ord(const BigInt& a, const BigInt& p) { return a == 0 ? 1 << 20 : valuation(a, p); }

/// Does a x^2 + b x + c have a root mod p?
inline bool quadroots(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& p) {
    const BigInt A = mod(a, p), B = mod(b, p), C = mod(c, p);
    if (A == 0) return B != 0 || C == 0;
    if (p == 2) {
        // x = 0 or x = 1
        return C == 0 || mod(A + B + C, p) == 0;
    }
    const BigInt d = mod(B * B - 4 * A * C, p);
    return d == 0 || legendre(d, p) == 1;
}

/// Number of roots of x^3 + b x^2 + c x + d mod p (assumed squarefree mod p).
inline int cubic_root_count(const BigInt& b, const BigInt& c, const BigInt& d, const BigInt& p) {
    if (p > 1000) {
        // A squarefree cubic has 1 root iff its discriminant is a nonsquare,
        // otherwise 0 or 3, told apart by x^p mod the cubic.
        const BigInt disc = mod(b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d, p);
        const bool square_disc = legendre(disc, p) == 1;
        if (!square_disc) return 1;
        auto mulmod = [&](const std::array<BigInt, 3>& u, const std::array<BigInt, 3>& v) {
            std::array<BigInt, 5> w{0, 0, 0, 0, 0};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) w[static_cast<std::size_t>(i + j)] += u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
            for (int k = 4; k >= 3; --k) {
                const BigInt t = w[static_cast<std::size_t>(k)];
                w[static_cast<std::size_t>(k)] = 0;
                w[static_cast<std::size_t>(k - 1)] -= t * b;
                w[static_cast<std::size_t>(k - 2)] -= t * c;
                w[static_cast<std::size_t>(k - 3)] -= t * d;
            }
            return std::array<BigInt, 3>{mod(w[0], p), mod(w[1], p), mod(w[2], p)};
        };
        std::array<BigInt, 3> result{1, 0, 0}, base{0, 1, 0};
        BigInt e = p;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) result = mulmod(result, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return (result[0] == 0 && result[1] == 1 && result[2] == 0) ? 3 : 0;
    }
    int n = 0;
    const unsigned long pu = p.get_ui();
    for (unsigned long x = 0; x < pu; ++x) {
        const BigInt X(x);
        if (mod(X * X * X + b * X * X + c * X + d, p) == 0) ++n;
    }
    return n;
}

/// The repeated root mod p of x^3 + b x^2 + c x + d, for p in {2, 3}.
inline BigInt repeated_root(const BigInt& b, const BigInt& c, const BigInt& d, const BigInt& p) {
    for (long x = 0; x < p.get_si(); ++x) {
        const BigInt X(x);
        if (mod(X * X * X + b * X * X + c * X + d, p) == 0 && mod(3 * X * X + 2 * b * X + c, p) == 0) return X;
    }
    throw std::logic_error("tate_reduction: expected a repeated root of the cubic");
}

inline BigInt ai(const WeierstrassModel& E, int i) {
    switch (i) {
        case 1: return E.a1().get_num();
        case 2: return E.a2().get_num();
        case 3: return E.a3().get_num();
        case 4: return E.a4().get_num();
        default: return E.a6().get_num();
    }
}

inline WeierstrassModel rst(const WeierstrassModel& E, const BigInt& r, const BigInt& s, const BigInt& t) {
    return E.transform(BigRat(r), BigRat(s), BigRat(t));
}

}  // namespace tatedetail

/// Runs Tate's algorithm at the prime l on a model with integral coefficients
/// (a rational model is first scaled to an integral one).
inline ReductionData tate_reduction(const WeierstrassModel& E0, const BigInt& p) {
    using namespace tatedetail;
    if (!is_prime(p)) throw std::invalid_argument("tate_reduction: " + p.get_str() + " is not prime");
    WeierstrassModel C = E0.integral_model();
    for (int guard = 0; guard < 64; ++guard) {
        const BigInt disc = C.discriminant().get_num();
        const int vd = ord(disc, p);
        if (vd == 0) return {p, C, ReductionType::good, "I0", 0, 0, 1};

        BigInt a1 = ai(C, 1), a2 = ai(C, 2), a3 = ai(C, 3), a4 = ai(C, 4), a6 = ai(C, 6);
        const BigInt b2 = C.b2().get_num(), b4 = C.b4().get_num(), b6 = C.b6().get_num();
        const BigInt c4 = C.c4().get_num(), c6 = C.c6().get_num();

        // Move the singular point of the reduction to (0, 0).
        BigInt r, t;
        if (p == 2) {
            if (mod(b2, p) == 0) {
                r = preduce(a4, p);
                t = preduce(r * (1 + a2 + a4) + a6, p);
            } else {
                const BigInt inv = pinv(a1, p);
                r = preduce(inv * a3, p);
                t = preduce(inv * (a4 + r * r), p);
            }
        } else if (p == 3) {
            r = mod(b2, p) == 0 ? preduce(-b6, p) : preduce(-pinv(b2, p) * b4, p);
            t = preduce(a1 * r + a3, p);
        } else {
            if (mod(c4, p) == 0)
                r = -pinv(12, p) * b2;
            else
                r = -pinv(12 * c4, p) * (c6 + b2 * c4);
            t = -pinv(2, p) * (a1 * r + a3);
            r = preduce(r, p);
            t = preduce(t, p);
        }
        C = rst(C, r, 0, t);
        a1 = ai(C, 1), a2 = ai(C, 2), a3 = ai(C, 3), a4 = ai(C, 4), a6 = ai(C, 6);

        // Multiplicative reduction: split iff the tangents at the node are rational.
        if (mod(c4, p) != 0) {
            const bool split = quadroots(1, a1, -a2, p);
            const int cp = split ? vd : (vd % 2 == 0 ? 2 : 1);
            return {p, C, split ? ReductionType::split_multiplicative : ReductionType::nonsplit_multiplicative,
                    "I" + std::to_string(vd), vd, 1, cp};
        }

        if (ord(a6, p) < 2) return {p, C, ReductionType::additive, "II", vd, vd, 1};
        const BigInt b8 = C.b8().get_num();
        if (ord(b8, p) < 3) return {p, C, ReductionType::additive, "III", vd, vd - 1, 2};
        const BigInt b6n = C.b6().get_num();
        if (ord(b6n, p) < 3) {
            const int cp = quadroots(1, a3 / p, -a6 / (p * p), p) ? 3 : 1;
            return {p, C, ReductionType::additive, "IV", vd, vd - 2, cp};
        }

        // Now p | a1, a2; p^2 | a3, a4; p^3 | a6.
        BigInt s;
        if (p == 2) {
            s = preduce(a2, p);
            t = p * preduce(a6 / (p * p), p);
        } else if (p == 3) {
            s = a1;
            t = a3;
        } else {
            s = -a1 * pinv(2, p);
            t = -a3 * pinv(2, p);
        }
        C = rst(C, 0, s, t);
        a1 = ai(C, 1), a2 = ai(C, 2), a3 = ai(C, 3), a4 = ai(C, 4), a6 = ai(C, 6);

        const BigInt p2 = p * p, p3 = p2 * p;
        const BigInt b = a2 / p, c = a4 / p2, d = a6 / p3;
        const BigInt w = 27 * d * d - b * b * c * c + 4 * b * b * b * d - 18 * b * c * d + 4 * c * c * c;
        const BigInt x = 3 * c - b * b;
        const int sw = mod(w, p) != 0 ? 1 : (mod(x, p) != 0 ? 2 : 3);

        if (sw == 1) {
            const int cp = 1 + cubic_root_count(b, c, d, p);
            return {p, C, ReductionType::additive, "I0*", vd, vd - 4, cp};
        }

        if (sw == 2) {
            // Double root of the cubic: move it to 0, then peel off I_m*.
            r = p < 5 ? repeated_root(b, c, d, p) : BigInt((b * c - 9 * d) * pinv(2 * x, p));
            r = p * preduce(r, p);
            C = rst(C, r, 0, 0);
            int ix = 3, iy = 3;
            BigInt mx = p2, my = p2;
            int cp = 0;
            for (;;) {
                a2 = ai(C, 2), a3 = ai(C, 3), a4 = ai(C, 4), a6 = ai(C, 6);
                BigInt a2t = a2 / p, a3t = a3 / my, a4t = a4 / (p * mx), a6t = a6 / (mx * my);
                if (mod(a3t * a3t + 4 * a6t, p) != 0) {
                    cp = quadroots(1, a3t, -a6t, p) ? 4 : 2;
                    break;
                }
                t = (p == 2) ? my * preduce(a6t, p) : my * preduce(-a3t * pinv(2, p), p);
                C = rst(C, 0, 0, t);
                my *= p;
                ++iy;
                a2 = ai(C, 2), a3 = ai(C, 3), a4 = ai(C, 4), a6 = ai(C, 6);
                a2t = a2 / p, a3t = a3 / my, a4t = a4 / (p * mx), a6t = a6 / (mx * my);
                if (mod(a4t * a4t - 4 * a6t * a2t, p) != 0) {
                    cp = quadroots(a2t, a4t, a6t, p) ? 4 : 2;
                    break;
                }
                r = (p == 2) ? mx * preduce(a6t * a2t, p) : mx * preduce(-a4t * pinv(2 * a2t, p), p);
                C = rst(C, r, 0, 0);
                mx *= p;
                ++ix;
                if (ix + iy > 4000) throw std::logic_error("tate_reduction: I_m* loop did not terminate");
            }
            const int m = ix + iy - 5;
            return {p, C, ReductionType::additive, "I" + std::to_string(m) + "*", vd, vd - m - 4, cp};
        }

        // Triple root: move it to 0.
        r = p < 5 ? repeated_root(b, c, d, p) : BigInt(-b * pinv(3, p));
        r = p * preduce(r, p);
        C = rst(C, r, 0, 0);
        a3 = ai(C, 3), a6 = ai(C, 6);
        const BigInt a3t = a3 / p2, a6t = a6 / (p2 * p2);
        if (mod(a3t * a3t + 4 * a6t, p) != 0) {
            const int cp = quadroots(1, a3t, -a6t, p) ? 3 : 1;
            return {p, C, ReductionType::additive, "IV*", vd, vd - 6, cp};
        }
        t = (p == 2) ? BigInt(-p2 * preduce(a6t, p)) : BigInt(p2 * preduce(-a3t * pinv(2, p), p));
        C = rst(C, 0, 0, t);
        a4 = ai(C, 4), a6 = ai(C, 6);
        if (ord(a4, p) < 4) return {p, C, ReductionType::additive, "III*", vd, vd - 7, 2};
        if (ord(a6, p) < 6) return {p, C, ReductionType::additive, "II*", vd, vd - 8, 1};

        // Not minimal: divide out p and start again.
        C = C.transform(0, 0, 0, BigRat(p));
    }
    throw std::logic_error("tate_reduction: too many non-minimal reductions");
}

inline ReductionData tate_reduction(const WeierstrassModel& E, std::uint64_t l) {
    return tate_reduction(E, BigInt(static_cast<unsigned long>(l)));
}

/// Makes an integral model minimal at each listed prime. Tate's transforms
/// use integral r, s, t and u a power of the prime, so earlier primes stay
/// minimal and the model stays integral.
inline WeierstrassModel minimal_model_at(const WeierstrassModel& E0, const std::vector<BigInt>& primes) {
    WeierstrassModel E = E0.integral_model();
    for (const auto& q : primes) E = tate_reduction(E, q).minimal_model;
    return E;
}

}  // namespace fsel
