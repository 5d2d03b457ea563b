#pragma once

// Bernoulli numbers, Kummer's regularity criterion, prime decomposition in
// Q(mu_p), and ramification of the cyclotomic Z_p-extension.

#include "fsel/arith.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsel {

inline constexpr long kBernoulliPrimeBound = 10000;

/// B_0 .. B_n (B_1 = -1/2) from sum_{j=0}^{m} C(m+1, j) B_j = 0.
inline std::vector<BigRat> bernoulli_numbers(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli_numbers: negative index");
    std::vector<BigRat> B(static_cast<std::size_t>(n) + 1);
    B[0] = 1;
    // Binomial row C(m+1, j), updated in place.
    std::vector<BigInt> row{1, 1};
    for (int m = 1; m <= n; ++m) {
        std::vector<BigInt> next(row.size() + 1, BigInt(1));
        for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);  // row = C(m+1, .)
        if (m >= 3 && m % 2 == 1) {
            B[static_cast<std::size_t>(m)] = 0;
            continue;
        }
        BigRat s = 0;
        for (int j = 0; j < m; ++j) {
            if (j >= 3 && j % 2 == 1) continue;
            s += BigRat(row[static_cast<std::size_t>(j)]) * B[static_cast<std::size_t>(j)];
        }
        B[static_cast<std::size_t>(m)] = -s / BigRat(m + 1);
        B[static_cast<std::size_t>(m)].canonicalize();
    }
    return B;
}

/// Product of primes q with (q - 1) | k, for even k >= 2.
inline BigInt von_staudt_clausen_denominator(int k) {
    BigInt d = 1;
    for (int q = 2; q <= k + 1; ++q)
        if (k % (q - 1) == 0 && is_prime(static_cast<std::uint64_t>(q))) d *= q;
    return d;
}

struct BernoulliTable {
    long p = 0;
    std::vector<BigRat> even;  // B_0, B_2, ..., B_{p-3}
    const BigRat& at(int k) const {
        if (k % 2 != 0 || k < 0 || k / 2 >= static_cast<int>(even.size()))
            throw std::out_of_range("BernoulliTable: index " + std::to_string(k));
        return even[static_cast<std::size_t>(k / 2)];
    }
};

/// Exact B_k for even k <= p - 3, with the von Staudt-Clausen denominator
/// check enforced on each entry.
inline BernoulliTable bernoulli_table(long p) {
    if (p < 3 || p > kBernoulliPrimeBound || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("bernoulli_table: p must be an odd prime <= " + std::to_string(kBernoulliPrimeBound));
    const auto all = bernoulli_numbers(static_cast<int>(std::max(p - 3, 0L)));
    BernoulliTable t;
    t.p = p;
    for (long k = 0; k <= p - 3; k += 2) {
        const BigRat& b = all[static_cast<std::size_t>(k)];
        if (k >= 2 && b.get_den() != von_staudt_clausen_denominator(static_cast<int>(k)))
            throw std::logic_error("bernoulli_table: von Staudt-Clausen check failed at B_" + std::to_string(k));
        t.even.push_back(b);
    }
    return t;
}

/// B_k mod p for even k <= p - 3, by the same recurrence over F_p. All these
/// B_k are p-integral, and m + 1 <= p - 2 is invertible.
inline std::vector<std::uint64_t> bernoulli_mod_p(std::uint64_t p) {
    const std::uint64_t n = p >= 3 ? p - 3 : 0;
    std::vector<std::uint64_t> B(n + 1, 0), row{1, 1}, inv(p, 0);
    inv[1] = 1;
    for (std::uint64_t i = 2; i < p; ++i) inv[i] = (p - (p / i) * inv[p % i] % p) % p;
    B[0] = 1;
    for (std::uint64_t m = 1; m <= n; ++m) {
        std::vector<std::uint64_t> next(row.size() + 1, 1);
        for (std::size_t j = 1; j < row.size(); ++j) next[j] = (row[j - 1] + row[j]) % p;
        row = std::move(next);
        if (m >= 3 && m % 2 == 1) continue;
        std::uint64_t s = 0;
        for (std::uint64_t j = 0; j < m; ++j) {
            if (j >= 3 && j % 2 == 1) continue;
            s = (s + row[j] * B[j]) % p;
        }
        B[m] = (p - s) % p * inv[m + 1] % p;
    }
    return B;
}

/// Kummer: p is regular iff p divides no numerator of B_2, ..., B_{p-3}.
/// Exact rationals below 500, modular arithmetic beyond.
inline bool is_regular(long p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("is_regular: p must be an odd prime");
    if (p < 500) {
        const auto t = bernoulli_table(p);
        for (std::size_t i = 1; i < t.even.size(); ++i)
            if (divides(BigInt(p), BigInt(t.even[i].get_num()))) return false;
        return true;
    }
    const auto B = bernoulli_mod_p(static_cast<std::uint64_t>(p));
    for (std::size_t k = 2; k < B.size(); k += 2)
        if (B[k] == 0) return false;
    return true;
}

struct Decomposition {
    long e = 1, f = 1, g = 1;
};

/// Splitting of the rational prime l in Q(mu_p).
inline Decomposition decomposition_in_Qmup(long l, long p) {
    if (!is_prime(static_cast<std::uint64_t>(l)) || !is_prime(static_cast<std::uint64_t>(p)) || p < 3)
        throw std::invalid_argument("decomposition_in_Qmup: need primes l and odd p");
    if (l == p) return {p - 1, 1, 1};
    const long f = multiplicative_order(BigInt(l), BigInt(p)).get_si();
    return {1, f, (p - 1) / f};
}

enum class CertMode { certified, asserted };

inline const char* to_string(CertMode m) { return m == CertMode::certified ? "certified" : "asserted"; }

struct RamificationCertificate {
    std::string base;  // descriptor of K
    bool unique_ramified_place = false;
    bool totally_ramified = false;
    CertMode mode = CertMode::asserted;
};

/// Built-in cases: K = Q or Q(mu_p) with K_inf cyclotomic, where the unique
/// prime above p is totally ramified. Anything else copies the declaration.
inline RamificationCertificate kinf_ramification(const std::string& K, long p, bool cyclotomic = true,
                                                 bool declared_unique = false, bool declared_total = false) {
    const std::string qmup = "Q(mu_" + std::to_string(p) + ")";
    if (cyclotomic && (K == "Q" || K == qmup || K == "Q(mu_p)")) return {K, true, true, CertMode::certified};
    return {K, declared_unique, declared_total, CertMode::asserted};
}

}  // namespace fsel
