#include "fsel/arith.hpp"
#include "fsel/extension_field.hpp"
#include "fsel/factor_fq.hpp"
#include "fsel/factor_int.hpp"
#include "fsel/field_poly.hpp"
#include "fsel/int_poly.hpp"
#include "fsel/prime_field.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace fsel;

TEST(Arith, PowModMatchesRepeatedMultiplication) {
    std::mt19937_64 rng(1);
    for (int it = 0; it < 300; ++it) {
        const long m = 2 + static_cast<long>(rng() % 500);
        const long a = static_cast<long>(rng() % 2000) - 1000;
        const long e = static_cast<long>(rng() % 60);
        long r = 1 % m;
        for (long i = 0; i < e; ++i) r = ((r * (((a % m) + m) % m)) % m);
        EXPECT_EQ(pow_mod(BigInt(a), BigInt(e), BigInt(m)), r) << a << "^" << e << " mod " << m;
    }
}

TEST(Arith, InverseAndGcd) {
    for (long m = 2; m < 60; ++m)
        for (long a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) {
                EXPECT_THROW(inverse_mod(BigInt(a), BigInt(m)), std::exception);
                continue;
            }
            EXPECT_EQ(mod(inverse_mod(BigInt(a), BigInt(m)) * a, BigInt(m)), 1);
        }
    EXPECT_EQ(gcd(BigInt(84), BigInt(-36)), 12);
    EXPECT_EQ(lcm(BigInt(4), BigInt(6)), 12);
}

TEST(Arith, PrimalityAgreesWithSieve) {
    std::vector<bool> comp(5000, false);
    for (int i = 2; i < 5000; ++i)
        for (int j = 2 * i; j < 5000; j += i) comp[j] = true;
    for (int n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(static_cast<std::uint64_t>(n)), n >= 2 && !comp[n]) << n;
    const auto ps = primes_up_to(200);
    EXPECT_EQ(ps.size(), 46u);
    EXPECT_EQ(ps.back(), 199u);
}

TEST(Arith, FactorTrialReconstructs) {
    for (long n = 1; n < 3000; ++n) {
        BigInt prod = 1;
        for (const auto& [q, e] : factor_trial(BigInt(n))) {
            EXPECT_TRUE(is_prime(q));
            prod *= pow_int(q, static_cast<unsigned long>(e));
        }
        EXPECT_EQ(prod, n);
    }
}

TEST(Arith, MultiplicativeOrderBruteForce) {
    for (long m = 2; m < 200; ++m)
        for (long a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            long k = 1, x = a % m;
            while (x != 1 % m) {
                x = x * a % m;
                ++k;
            }
            EXPECT_EQ(multiplicative_order(BigInt(a), BigInt(m)), k);
        }
}

TEST(Arith, ValuationOfRationals) {
    EXPECT_EQ(valuation(BigInt(250), BigInt(5)), 3);
    EXPECT_EQ(valuation(BigRat(3, 50), BigInt(5)), -2);
    EXPECT_EQ(valuation(BigRat(7, 3), BigInt(5)), 0);
}

TEST(Arith, LegendreBruteForce) {
    for (long p : {3L, 5L, 7L, 11L, 13L, 101L}) {
        std::set<long> squares;
        for (long x = 1; x < p; ++x) squares.insert(x * x % p);
        for (long a = 1; a < p; ++a) EXPECT_EQ(legendre(BigInt(a), BigInt(p)), squares.count(a) ? 1 : -1);
    }
}

TEST(FiniteFields, PrimeFieldAxioms) {
    const PrimeField F(101);
    for (std::uint64_t a = 1; a < 101; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
    EXPECT_EQ(F.from_int(-1), 100u);
    EXPECT_EQ(F.pow(3, std::uint64_t{100}), 1u);
}

TEST(FiniteFields, ExtensionFieldIsSquareBruteForce) {
    for (auto [l, f] : {std::pair{3ul, 2}, std::pair{5ul, 2}, std::pair{7ul, 3}, std::pair{3ul, 3}}) {
        const ExtensionField F(l, f);
        std::set<std::uint64_t> squares;
        for (std::uint64_t i = 0; i < F.size(); ++i) {
            const auto x = F.from_index(i);
            squares.insert(F.index(F.mul(x, x)));
        }
        EXPECT_EQ(squares.size(), (F.size() + 1) / 2);
        for (std::uint64_t i = 0; i < F.size(); ++i) EXPECT_EQ(is_square(F, F.from_index(i)), squares.count(i) > 0);
        // multiplicative group of order q - 1
        for (std::uint64_t i = 1; i < F.size(); ++i)
            EXPECT_TRUE(F.equal(F.pow(F.from_index(i), F.order() - 1), F.one()));
    }
}

TEST(Polynomials, DivmodIdentityOverFp) {
    const PrimeField F(13);
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        FieldPoly<PrimeField> a, b;
        for (int i = 0; i < 1 + static_cast<int>(rng() % 9); ++i) a.push_back(rng() % 13);
        for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) b.push_back(rng() % 13);
        b.push_back(1 + rng() % 12);
        fpoly::trim(F, a);
        auto [q, r] = fpoly::divmod(F, a, b);
        EXPECT_LT(fpoly::degree(r), fpoly::degree(b));
        auto back = fpoly::add(F, fpoly::mul(F, q, b), r);
        fpoly::trim(F, back);
        EXPECT_TRUE(fpoly::equal(F, back, a));
    }
}

TEST(Polynomials, RootsOverFpMatchEnumeration) {
    std::mt19937_64 rng(11);
    for (std::uint64_t l : {3ul, 7ul, 31ul, 101ul}) {
        const PrimeField F(l);
        for (int it = 0; it < 40; ++it) {
            FieldPoly<PrimeField> f;
            const int d = 1 + static_cast<int>(rng() % 7);
            for (int i = 0; i < d; ++i) f.push_back(rng() % l);
            f.push_back(1 + rng() % (l - 1));
            std::vector<std::uint64_t> expect;
            for (std::uint64_t x = 0; x < l; ++x)
                if (fpoly::eval(F, f, x) == 0) expect.push_back(x);
            EXPECT_EQ(roots_fq(F, f), expect);
        }
    }
}

TEST(Polynomials, IntegerFactorisationReconstructsAndFactorsAreIrreducible) {
    const std::vector<IntPoly> cases = {
        IntPoly({-1, 0, 0, 0, 0, 0, 1}),               // x^6 - 1
        IntPoly({6, -5, 1}) * IntPoly({1, 0, 1}),       // (x-2)(x-3)(x^2+1)
        IntPoly({4, 0, -5, 0, 1}),                       // (x^2-1)(x^2-4)
        IntPoly({1, 1, 1, 1, 1}),                        // Phi_5
        IntPoly({-2, 0, 0, 0, 1}) * IntPoly({3, 2}),     // (x^4-2)(2x+3)
        IntPoly({12751, 505, 5}) * IntPoly({1, 0, 0, 1}),
    };
    for (const auto& f : cases) {
        const auto fac = factor_int_poly(f);
        EXPECT_EQ(fac.product().coeffs(), f.coeffs()) << f.str();
        for (const auto& [g, m] : fac.factors) {
            const auto again = factor_int_poly(g);
            ASSERT_EQ(again.factors.size(), 1u) << g.str();
            EXPECT_EQ(again.factors[0].second, 1);
        }
    }
    EXPECT_EQ(factor_int_poly(IntPoly({-1, 0, 0, 0, 0, 0, 1})).factors.size(), 4u);
    EXPECT_EQ(factor_int_poly(IntPoly({1, 1, 1, 1, 1})).factors.size(), 1u);
}

TEST(Polynomials, ExactDivisionAndGcd) {
    const IntPoly a = IntPoly({6, -5, 1}) * IntPoly({1, 0, 1});
    EXPECT_TRUE(divides_exactly(a, IntPoly({-2, 1})));
    EXPECT_FALSE(divides_exactly(a, IntPoly({-4, 1})));
    EXPECT_EQ(gcd(a, IntPoly({-2, 1}) * IntPoly({5, 1})).primitive_part().coeffs(), IntPoly({-2, 1}).coeffs());
}
