#include "fsel/division_poly.hpp"
#include "fsel/factor_fq.hpp"
#include "fsel/group_law.hpp"
#include "fsel/point_count.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fsel;
using namespace fsel::testing;

TEST(Weierstrass, InvariantsOf11a2) {
    const auto E = WeierstrassModel::from_ints({0, -1, 1, -7820, -263580});
    EXPECT_EQ(E.discriminant(), BigRat(-11));
    EXPECT_EQ(E.c4(), BigRat(375376));
    EXPECT_EQ(E.j_invariant(), BigRat(BigInt(-52893159101157376), BigInt(11)));
}

TEST(Weierstrass, TransformPreservesJAndScalesDiscriminant) {
    std::mt19937_64 rng(3);
    for (const auto& c : corpus()) {
        const auto E = model(c);
        const BigRat r(static_cast<long>(rng() % 11) - 5), s(static_cast<long>(rng() % 5) - 2),
            t(static_cast<long>(rng() % 11) - 5), u(static_cast<long>(rng() % 3) + 1, 2);
        const auto E2 = E.transform(r, s, t, u);
        EXPECT_EQ(E2.j_invariant(), E.j_invariant());
        EXPECT_EQ(E2.discriminant() * u * u * u * u * u * u * u * u * u * u * u * u, E.discriminant());
    }
}

TEST(Weierstrass, ReducedModelNormalisesA1A2A3) {
    std::mt19937_64 rng(5);
    for (const auto& c : corpus()) {
        const auto E = model(c).transform(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 7) - 3,
                                          static_cast<long>(rng() % 21) - 10);
        const auto R = reduced_model(E);
        EXPECT_TRUE(R.a1() == 0 || R.a1() == 1);
        EXPECT_TRUE(R.a3() == 0 || R.a3() == 1);
        EXPECT_TRUE(R.a2() >= -1 && R.a2() <= 1);
        EXPECT_EQ(R, model(c)) << c.label;  // minimal reduced models are unique
    }
}

TEST(DivisionPolynomials, DegreeAndLeadingCoefficient) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        const auto E = random_curve(rng, 50);
        for (int p : {3, 5, 7, 11, 13}) {
            const auto psi = division_polynomial(E, p).psi;
            EXPECT_EQ(psi.degree(), (p * p - 1) / 2) << E.str() << " p=" << p;
            EXPECT_EQ(psi.leading(), p);
        }
    }
}

TEST(DivisionPolynomials, TorsionCountMatchesEnumeration) {
    // #E(F_l)[p] from the roots of psi_p mod l equals a brute-force count of
    // points killed by p.
    std::mt19937_64 rng(19);
    std::vector<WeierstrassModel> curves = {model(corpus()[0]), model(corpus()[2]), model(corpus()[15])};
    for (int i = 0; i < 3; ++i) curves.push_back(random_curve(rng, 30));
    int checks = 0;
    for (const auto& E : curves) {
        for (int p : {3, 5}) {
            const auto psi = division_polynomial(E, p).psi;
            for (const auto l : primes_up_to(200)) {
                if (l == 2 || l == static_cast<std::uint64_t>(p)) continue;
                if (divides(BigInt(static_cast<unsigned long>(l)), BigInt(E.discriminant().get_num()))) continue;
                const PrimeField F(l);
                const CurveOver<PrimeField> C(F, E);
                long from_psi = 1;
                auto pb = psi.reduce(F);
                fpoly::trim(F, pb);
                for (const auto x : roots_fq(F, pb))
                    for (std::uint64_t y = 0; y < l; ++y)
                        if (C.on_curve(Point<PrimeField>{x, y, false})) ++from_psi;
                long brute = 1;
                for (std::uint64_t x = 0; x < l; ++x)
                    for (std::uint64_t y = 0; y < l; ++y) {
                        const Point<PrimeField> P{x, y, false};
                        if (!C.on_curve(P)) continue;
                        if (C.scalar_mul(P, BigInt(p)).infinity) ++brute;
                    }
                EXPECT_EQ(from_psi, brute) << E.str() << " p=" << p << " l=" << l;
                ++checks;
            }
        }
    }
    EXPECT_GT(checks, 400);
}

TEST(PointCounting, MatchesDoubleEnumerationAndHasse) {
    for (const auto& c : corpus()) {
        const auto E = model(c);
        for (const auto l : primes_up_to(150)) {
            if (divides(BigInt(static_cast<unsigned long>(l)), BigInt(c.conductor))) continue;
            const BigInt a = trace_of_frobenius(E, l);
            const long brute = brute_affine_points(c.a, static_cast<long>(l)) + 1;
            EXPECT_EQ(BigInt(static_cast<long>(l) + 1 - brute), a) << c.label << " l=" << l;
            EXPECT_LE(a * a, 4 * BigInt(static_cast<unsigned long>(l)));
        }
    }
}

TEST(PointCounting, ExtensionFieldCountsSatisfyFrobeniusRecurrence) {
    // #E(F_{l^2}) = l^2 + 1 - (a^2 - 2l)
    for (const auto& c : {corpus()[0], corpus()[15]}) {
        const auto E = model(c);
        for (std::uint64_t l : {3ul, 5ul, 7ul, 13ul}) {
            if (divides(BigInt(static_cast<unsigned long>(l)), BigInt(c.conductor))) continue;
            const BigInt a = trace_of_frobenius(E, l);
            const ExtensionField F2(l, 2);
            const BigInt n2 = count_points(CurveOver<ExtensionField>(F2, E));
            const BigInt L(static_cast<unsigned long>(l));
            EXPECT_EQ(n2, L * L + 1 - (a * a - 2 * L)) << c.label << " l=" << l;
        }
    }
}

TEST(GroupLaw, RationalPointsOf37a1) {
    const RationalField Q;
    const CurveOver<RationalField> C(Q, model(corpus()[15]));
    const auto P = C.point(0, 0);
    const auto P2 = C.add(P, P);
    EXPECT_EQ(P2.x, BigRat(1));
    EXPECT_EQ(P2.y, BigRat(0));
    EXPECT_TRUE(C.on_curve(C.scalar_mul(P, 7)));
    EXPECT_TRUE(C.add(P, C.neg(P)).infinity);
}
