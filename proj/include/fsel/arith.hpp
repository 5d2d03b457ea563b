#pragma once

// Integer and rational arithmetic, modular exponentiation and orders.
// BigInt/BigRat are thin aliases over GMP's C++ classes; everything here is
// exact.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fsel {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big(long v) { return BigInt(v); }

inline BigInt parse_bigint(const std::string& s) {
    BigInt r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("not an integer: '" + s + "'");
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(10); }
inline std::string to_string(const BigRat& v) { return v.get_str(10); }

/// Least nonnegative residue of a modulo m (m > 0).
inline BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::uint64_t mod_u64(const BigInt& a, std::uint64_t m) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), m);
    return r.get_ui();
}

inline BigInt pow_mod(const BigInt& a, const BigInt& e, const BigInt& m) {
    if (m < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
    if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
    BigInt base = mod(a, m);
    BigInt result = 1;
    // square-and-multiply, high bit first
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        result = mod(result * result, m);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) result = mod(result * base, m);
    }
    return mod(result, m);
}

inline BigInt pow_int(const BigInt& a, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt inverse_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("inverse_mod: " + to_string(a) + " not invertible mod " + to_string(m));
    return r;
}

/// v_p(a); a must be nonzero.
inline int valuation(const BigInt& a, const BigInt& p) {
    if (a == 0) throw std::domain_error("valuation of zero");
    BigInt t = a;
    int v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

/// v_p of a nonzero rational.
inline int valuation(const BigRat& a, const BigInt& p) {
    return valuation(BigInt(a.get_num()), p) - valuation(BigInt(a.get_den()), p);
}

inline bool divides(const BigInt& d, const BigInt& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    // deterministic for 64-bit inputs, probabilistic with 40 rounds above
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline bool is_prime(std::uint64_t n) { return is_prime(BigInt(static_cast<unsigned long>(n))); }

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

/// Prime factorisation by trial division; fine for the desk-scale moduli used here.
inline std::vector<std::pair<BigInt, int>> factor_trial(BigInt n) {
    if (n < 1) throw std::invalid_argument("factor_trial: n must be positive");
    std::vector<std::pair<BigInt, int>> out;
    for (BigInt d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        int e = 0;
        while (divides(d, n)) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline BigInt euler_phi(const BigInt& m) {
    BigInt phi = m;
    for (const auto& [q, e] : factor_trial(m)) phi = phi / q * (q - 1);
    return phi;
}

/// Least n >= 1 with a^n = 1 mod m.
inline BigInt multiplicative_order(const BigInt& a, const BigInt& m) {
    if (m < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
    if (gcd(a, m) != 1) throw std::invalid_argument("multiplicative_order: gcd(a, m) != 1");
    BigInt order = euler_phi(m);
    for (const auto& [q, e] : factor_trial(order)) {
        for (int i = 0; i < e; ++i) {
            if (pow_mod(a, order / q, m) == 1)
                order /= q;
            else
                break;
        }
    }
    return order;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Jacobi/Legendre symbol (a/p) for odd prime p.
inline int legendre(const BigInt& a, const BigInt& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

}  // namespace fsel
