#include "fsel/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>

using namespace fsel;

namespace {

/// Akiyama-Tanigawa: B_n with the B_1 = +1/2 convention.
BigRat akiyama_tanigawa(int n) {
    std::vector<BigRat> a(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        a[static_cast<std::size_t>(m)] = BigRat(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
            a[static_cast<std::size_t>(j - 1)].canonicalize();
        }
    }
    return a[0];
}

std::set<long> irregular_from_file() {
    std::ifstream in(FSEL_TEST_DATA_DIR "/data/irregular_primes.txt");
    std::set<long> s;
    long v;
    while (in >> v) s.insert(v);
    return s;
}

}  // namespace

TEST(Bernoulli, KnownValues) {
    const auto B = bernoulli_numbers(12);
    EXPECT_EQ(B[1], BigRat(-1, 2));
    EXPECT_EQ(B[2], BigRat(1, 6));
    EXPECT_EQ(B[4], BigRat(-1, 30));
    EXPECT_EQ(B[3], 0);
    EXPECT_EQ(B[12].get_num(), -691);
    EXPECT_EQ(B[12].get_den(), 2730);
}

TEST(Bernoulli, AgreesWithAkiyamaTanigawa) {
    const auto B = bernoulli_numbers(60);
    for (int n = 2; n <= 60; ++n) EXPECT_EQ(B[static_cast<std::size_t>(n)], akiyama_tanigawa(n)) << n;
}

TEST(Bernoulli, ModularTableAgreesWithExactValues) {
    for (long p : {37L, 59L, 101L, 103L, 113L}) {
        const auto t = bernoulli_table(p);
        const auto m = bernoulli_mod_p(static_cast<std::uint64_t>(p));
        for (int k = 2; k <= p - 3; k += 2) {
            const BigRat& b = t.at(k);
            const BigInt expect = mod(BigInt(b.get_num()) * inverse_mod(BigInt(b.get_den()), BigInt(p)), BigInt(p));
            EXPECT_EQ(BigInt(static_cast<unsigned long>(m[static_cast<std::size_t>(k)])), expect) << p << " " << k;
        }
    }
}

TEST(Regularity, IrregularPrimesBelow500) {
    const auto irregular = irregular_from_file();
    ASSERT_EQ(irregular.size(), 28u);
    for (const auto p : primes_up_to(500)) {
        if (p < 3) continue;
        EXPECT_EQ(is_regular(static_cast<long>(p)), irregular.count(static_cast<long>(p)) == 0) << p;
    }
}

TEST(Regularity, ModularBranchAbove500) {
    for (long p : {523L, 541L, 547L, 557L, 577L, 587L, 593L, 607L, 613L}) EXPECT_FALSE(is_regular(p)) << p;
    for (long p : {503L, 509L, 521L, 563L, 569L, 571L, 599L, 601L}) EXPECT_TRUE(is_regular(p)) << p;
    EXPECT_THROW(is_regular(9), std::invalid_argument);
}

TEST(Cyclotomic, DecompositionCountsResidueDegrees) {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        for (const auto lu : primes_up_to(200)) {
            const long l = static_cast<long>(lu);
            const auto d = decomposition_in_Qmup(l, p);
            EXPECT_EQ(d.e * d.f * d.g, p - 1);
            if (l == p) {
                EXPECT_EQ(d.e, p - 1);
                continue;
            }
            long f = 1, x = l % p;
            while (x != 1) {
                x = x * l % p;
                ++f;
            }
            EXPECT_EQ(d.f, f);
        }
    }
}

TEST(Cyclotomic, RamificationOfCyclotomicTower) {
    const auto q = kinf_ramification("Q", 5);
    EXPECT_EQ(q.mode, CertMode::certified);
    EXPECT_TRUE(q.unique_ramified_place && q.totally_ramified);
    EXPECT_EQ(kinf_ramification("Q(mu_5)", 5).mode, CertMode::certified);
    const auto other = kinf_ramification("Q(sqrt(-1))", 5, true, true, false);
    EXPECT_EQ(other.mode, CertMode::asserted);
    EXPECT_FALSE(other.totally_ramified);
    EXPECT_EQ(kinf_ramification("Q", 5, false).mode, CertMode::asserted);
}
