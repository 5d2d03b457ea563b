#include "fsel/local_roots.hpp"
#include "fsel/padic.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace fsel;
using namespace fsel::testing;

TEST(PadicNumber, PrecisionIsPessimistic) {
    const BigInt p = 5;
    const PadicNumber a(p, BigRat(3), 10), b(p, BigRat(10), 4), c(p, BigRat(1, 5), 6);
    EXPECT_EQ((a + b).precision(), 4);
    EXPECT_EQ((a - a).is_zero(), true);
    EXPECT_EQ((a * b).precision(), 4);   // min(10 + 1, 4 + 0)
    EXPECT_EQ(b.valuation(), 1);
    EXPECT_EQ(c.valuation(), -1);
    EXPECT_EQ((b * c).valuation(), 0);
    EXPECT_EQ((b * c).precision(), 3);   // min(4 - 1, 6 + 1)
    const auto q = a / b;
    EXPECT_EQ(q.valuation(), -1);
    EXPECT_EQ(q.relative_precision(), 3);
    EXPECT_TRUE((q * b).agrees_with(a));
    EXPECT_EQ(PadicNumber(p, BigRat(3), 10).lift(), 3);
}

TEST(PadicNumber, HenselLiftOfSquareRoot) {
    const IntPoly f({-6, 0, 1});  // x^2 - 6
    const auto r = hensel_lift(f, 1, 5, 20);
    ASSERT_TRUE(r.has_value());
    EXPECT_GE(r->precision(), 20);
    EXPECT_GE(valuation_or_inf(mod(f.eval(r->lift()), pow_int(BigInt(5), 20)), BigInt(5)), 20);
    EXPECT_FALSE(hensel_lift(IntPoly({-2, 0, 1}), 1, 5, 10).has_value());  // 1 is not a root of x^2 - 2 mod 5
    EXPECT_FALSE(hensel_lift(IntPoly({-25, 0, 1}), 0, 5, 10).has_value()); // f'(0) = 0
}

TEST(PadicRoots, SimpleExamples) {
    const auto r1 = padic_roots(IntPoly({-1, 0, 1}), 7, 20);
    ASSERT_EQ(r1.roots.size(), 2u);
    EXPECT_TRUE(r1.complete());
    const auto r2 = padic_roots(IntPoly({-1, 0, 25}), 5, 20, {.include_nonintegral = true});
    ASSERT_EQ(r2.roots.size(), 2u);
    for (const auto& r : r2.roots) EXPECT_EQ(r.value.valuation(), -1);
    EXPECT_TRUE(padic_roots(IntPoly({-2, 0, 1}), 5, 20).roots.empty());
}

TEST(PadicRoots, CertifiedRootsAnnihilateToPrecisionN) {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 60; ++it) {
        const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11, 13}[it % 5];
        const IntPoly f = random_poly(rng);
        for (int N : {8, 20}) {
            const auto rs = padic_roots(f, BigInt(static_cast<unsigned long>(p)), N);
            for (const auto& r : rs.roots) {
                if (r.certainty != RootCertainty::certified) continue;
                EXPECT_GE(r.value.precision(), N);
                const BigInt fx = f.eval(r.value.lift());
                EXPECT_GE(valuation_or_inf(fx, BigInt(static_cast<unsigned long>(p))), N) << f.str() << " p=" << p;
            }
        }
    }
}

TEST(PadicRoots, StableUnderPrecisionDoubling) {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 60; ++it) {
        const BigInt p = std::vector<long>{3, 5, 7}[it % 3];
        const IntPoly f = random_poly(rng);
        const auto lo = padic_roots(f, p, 10, {.include_nonintegral = true});
        const auto hi = padic_roots(f, p, 20, {.include_nonintegral = true});
        ASSERT_EQ(lo.roots.size(), hi.roots.size()) << f.str();
        for (const auto& r : lo.roots) {
            if (r.certainty != RootCertainty::certified) continue;
            const bool found = std::any_of(hi.roots.begin(), hi.roots.end(),
                                           [&](const PadicRoot& s) { return s.value.agrees_with(r.value); });
            EXPECT_TRUE(found) << f.str() << " root " << r.value.str();
        }
    }
}

TEST(PadicRoots, MatchesExhaustiveEnumerationModP6) {
    std::mt19937_64 rng(2024);
    int nontrivial = 0;
    for (int it = 0; it < 100; ++it) {
        const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7}[it % 3];
        const BigInt P(static_cast<unsigned long>(p));
        std::uint64_t m = 1;
        for (int i = 0; i < 6; ++i) m *= p;
        const IntPoly f = localdetail::squarefree_part(random_poly(rng));
        const IntPoly df = f.derivative();

        // Hensel-valid classes x mod p^(6-k), k = v(f'(x)) < 3, with v(f(x)) >= 6.
        std::set<std::pair<int, std::uint64_t>> brute;
        for (std::uint64_t x = 0; x < m; ++x) {
            if (eval_mod(f, x, m) != 0) continue;
            const int k = val_u64(eval_mod(df, x, m), p, 6);
            if (k >= 3) continue;
            std::uint64_t mk = 1;
            for (int i = 0; i < 6 - k; ++i) mk *= p;
            brute.insert({k, x % mk});
        }

        const auto rs = padic_roots(f, P, 12);
        ASSERT_TRUE(rs.complete()) << f.str();
        std::set<std::pair<int, std::uint64_t>> found;
        for (const auto& r : rs.roots) {
            const BigInt x = r.value.lift();
            EXPECT_EQ(eval_mod(f, mod_u64(x, m), m), 0u);  // every root is visible mod p^6
            const int k = valuation_or_inf(df.eval(x), P);
            if (k >= 3) continue;
            std::uint64_t mk = 1;
            for (int i = 0; i < 6 - k; ++i) mk *= p;
            found.insert({k, mod_u64(x, mk)});
        }
        EXPECT_EQ(found, brute) << f.str() << " p=" << p;
        if (!brute.empty()) ++nontrivial;
    }
    EXPECT_GT(nontrivial, 30);
}

TEST(EisensteinRoots, UniformizerPolynomialSplitsCompletely) {
    // ((1+x)^5 - 1)/x has the four roots zeta - 1, each of valuation 1/4
    const IntPoly g({5, 10, 10, 5, 1});
    const auto rs = eisenstein_roots(g, 5, 10);
    ASSERT_EQ(rs.roots.size(), 4u);
    for (const auto& r : rs.roots) {
        EXPECT_EQ(r.certainty, RootCertainty::certified);
        EXPECT_EQ(r.value.pi_valuation(), 1);
        EXPECT_GE(eisenstein_eval(g, r.value).pi_valuation(), 40);
    }
}

TEST(EisensteinRoots, SquareRootsInQ5Mu5) {
    // sqrt(5) lies in Q(mu_5); sqrt(2) does not lie in Q_5(mu_5) (residue field F_5)
    const auto r5 = eisenstein_roots(IntPoly({-5, 0, 1}), 5, 12);
    ASSERT_EQ(r5.roots.size(), 2u);
    for (const auto& r : r5.roots) EXPECT_EQ(r.value.valuation(), BigRat(1, 2));
    EXPECT_TRUE(eisenstein_roots(IntPoly({-2, 0, 1}), 5, 12).roots.empty());
    // three cube roots of unity would need 3 | 4; only x = 1 is a root of x^3 - 1 over Q_5(mu_5)
    EXPECT_EQ(eisenstein_roots(IntPoly({-1, 0, 0, 1}), 5, 12).roots.size(), 1u);
}
