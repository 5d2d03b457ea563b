#include "fsel/point_count.hpp"
#include "fsel/tate.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fsel;
using namespace fsel::testing;

namespace {

BigInt conductor_of(const WeierstrassModel& E) {
    BigInt N = 1;
    for (const auto& [q, e] : factor_trial(abs(BigInt(E.discriminant().get_num())))) {
        (void)e;
        N *= pow_int(q, static_cast<unsigned long>(tate_reduction(E, q).conductor_exponent));
    }
    return N;
}

}  // namespace

TEST(Tate, CorpusConductors) {
    for (const auto& c : corpus()) EXPECT_EQ(conductor_of(model(c)), c.conductor) << c.label;
}

TEST(Tate, ConductorElevenClass) {
    const auto r2 = tate_reduction(model(corpus()[1]), 11ul);
    EXPECT_EQ(r2.type, ReductionType::split_multiplicative);
    EXPECT_EQ(r2.disc_valuation, 1);
    EXPECT_EQ(r2.tamagawa, 1);
    const auto r1 = tate_reduction(model(corpus()[0]), 11ul);
    EXPECT_EQ(r1.disc_valuation, 5);
    EXPECT_EQ(r1.kodaira, "I5");
    EXPECT_EQ(r1.tamagawa, 5);
    EXPECT_EQ(tate_reduction(model(corpus()[0]), 5ul).type, ReductionType::good);
}

TEST(Tate, InvariantUnderChangeOfCoordinates) {
    std::mt19937_64 rng(77);
    for (const auto& c : corpus()) {
        const auto E = model(c);
        std::vector<ReductionData> base;
        std::vector<BigInt> primes;
        for (const auto& [q, e] : factor_trial(BigInt(c.conductor))) {
            (void)e;
            primes.push_back(q);
            base.push_back(tate_reduction(E, q));
        }
        for (int it = 0; it < 50; ++it) {
            const auto r = [&](int b) { return BigRat(static_cast<long>(rng() % (2 * b + 1)) - b); };
            // u = 1/k with k in {1,2,3} gives a non-minimal integral model
            const BigRat u(1, static_cast<long>(1 + rng() % 3));
            const auto E2 = E.transform(r(20), r(5), r(20), u).integral_model();
            for (std::size_t i = 0; i < primes.size(); ++i) {
                const auto d = tate_reduction(E2, primes[i]);
                EXPECT_EQ(d.type, base[i].type) << c.label;
                EXPECT_EQ(d.disc_valuation, base[i].disc_valuation) << c.label;
                EXPECT_EQ(d.conductor_exponent, base[i].conductor_exponent) << c.label;
                EXPECT_EQ(d.kodaira, base[i].kodaira) << c.label;
                EXPECT_EQ(d.tamagawa, base[i].tamagawa) << c.label;
            }
        }
    }
}

TEST(Tate, ReductionTypeMatchesPointCountOnMinimalModel) {
    // On a minimal model the reduction has one singular point at a bad prime
    // and a_l = l - #affine points is 1, -1, 0 for split, nonsplit, additive.
    for (const auto& c : corpus()) {
        for (const auto& [q, e] : factor_trial(BigInt(c.conductor))) {
            (void)e;
            const long l = q.get_si();
            const auto d = tate_reduction(model(c), q);
            const auto a = small_a(d.minimal_model);
            EXPECT_EQ(brute_singular_points(a, l), 1) << c.label << " at " << l;
            const long al = l - brute_affine_points(a, l);
            const long expect = d.type == ReductionType::split_multiplicative      ? 1
                                : d.type == ReductionType::nonsplit_multiplicative ? -1
                                                                                   : 0;
            EXPECT_EQ(al, expect) << c.label << " at " << l;
        }
    }
}

TEST(Tate, MultiplicativeSplitRuleForOddPrimes) {
    // split iff -c6 is a square mod l
    for (const auto& c : corpus()) {
        for (const auto& [q, e] : factor_trial(BigInt(c.conductor))) {
            if (q == 2 || e != 1) continue;
            const auto d = tate_reduction(model(c), q);
            ASSERT_TRUE(is_multiplicative(d.type));
            const BigInt c6 = d.minimal_model.c6().get_num();
            EXPECT_EQ(d.type == ReductionType::split_multiplicative, legendre(-c6, q) == 1) << c.label;
        }
    }
}

TEST(Tate, GoodPrimesHaveNoSingularPoints) {
    for (const auto& c : {corpus()[0], corpus()[15], corpus()[17]})
        for (const auto l : primes_up_to(60)) {
            if (divides(BigInt(static_cast<unsigned long>(l)), BigInt(c.conductor))) continue;
            EXPECT_EQ(tate_reduction(model(c), l).type, ReductionType::good);
            if (l > 3) {
                EXPECT_EQ(brute_singular_points(c.a, static_cast<long>(l)), 0) << c.label << " " << l;
            }
        }
}

TEST(Tate, MinimalModelAtRemovesScaling) {
    const auto E = model(corpus()[15]);
    const auto big = E.transform(3, -1, 2, BigRat(1, 6)).integral_model();
    EXPECT_NE(big.discriminant(), E.discriminant());
    const auto m = reduced_model(minimal_model_at(big, {BigInt(2), BigInt(3), BigInt(37)}));
    EXPECT_EQ(m, E);
}
