#include <gtest/gtest.h>

#include <fstream>
#include <vector>

#include "circprime/pseudoprime.hpp"
#include "oracles.hpp"

using namespace circprime;

TEST(FermatCongruence, Examples)
{
    EXPECT_TRUE(fermat_congruence_holds(2, 341));
    EXPECT_TRUE(fermat_congruence_holds(2, 7));
    EXPECT_FALSE(fermat_congruence_holds(3, 341));
}

TEST(FermatCongruence, EquivalentToDivisibilityOfKToTheNMinusK)
{
    for (u64 n = 9; n <= 10'000; n += 2) {
        if (is_prime(n))
            continue;
        for (u64 k = 2; k <= 20; ++k) {
            if (gcd(k, n) != 1)
                continue;
            const bool divides = (mod_pow(k, n, n) + n - k % n) % n == 0;
            ASSERT_EQ(fermat_congruence_holds(k, n), divides) << k << ' ' << n;
        }
    }
}

TEST(IsPseudoprime, Examples)
{
    EXPECT_TRUE(is_pseudoprime(2, 341));
    EXPECT_FALSE(is_pseudoprime(2, 31));
    EXPECT_TRUE(is_pseudoprime(2, 561));
    EXPECT_FALSE(is_pseudoprime(3, 341));
    EXPECT_FALSE(is_pseudoprime(3, 561)); // gcd(3, 561) = 3
}

TEST(IsPseudoprime, BaseIsReducedModN)
{
    EXPECT_EQ(is_pseudoprime(2 + 341, 341), is_pseudoprime(2, 341));
    for (u64 n = 9; n < 2000; n += 2)
        for (u64 k = 2; k < 12; ++k)
            ASSERT_EQ(is_pseudoprime(k, n), is_pseudoprime(k + 5 * n, n));
}

TEST(IsPseudoprime, EvenCompositesNeedTheFlag)
{
    EXPECT_FALSE(is_pseudoprime(5, 4));
    EXPECT_TRUE(is_pseudoprime(5, 4, {.allow_even = true})); // 5^3 = 125 == 1 (mod 4)
    EXPECT_FALSE(is_pseudoprime(7, 6));
    EXPECT_TRUE(is_pseudoprime(7, 6, {.allow_even = true}));
}

TEST(IsPseudoprime, NoPrimeQualifies)
{
    for (u64 p = 2; p <= 10'000; ++p) {
        if (!is_prime(p))
            continue;
        for (u64 k = 2; k <= 30; ++k)
            ASSERT_FALSE(is_pseudoprime(k, p)) << k << ' ' << p;
    }
}

TEST(IsPseudoprime, AgreesWithNaiveDefinition)
{
    for (u64 k = 2; k <= 6; ++k)
        for (u64 n = 2; n <= 3000; ++n)
            ASSERT_EQ(is_pseudoprime(k, n), oracle::pseudoprime_naive(k, n)) << k << ' ' << n;
}

TEST(EnumeratePseudoprimes, Examples)
{
    EXPECT_EQ(enumerate_pseudoprimes(2, 400), (std::vector<u64>{341}));
    EXPECT_EQ(enumerate_pseudoprimes(2, 700), (std::vector<u64>{341, 561, 645}));
    EXPECT_TRUE(enumerate_pseudoprimes(2, 100).empty());
    EXPECT_TRUE(enumerate_pseudoprimes(2, 2).empty());
}

TEST(EnumeratePseudoprimes, GoldenBase2ToFiveThousand)
{
    std::ifstream in(CIRCPRIME_GOLDEN_DIR "/base2_pseudoprimes_to_5000.txt");
    ASSERT_TRUE(in) << "golden file missing";
    std::vector<u64> golden;
    for (u64 v; in >> v;)
        golden.push_back(v);
    EXPECT_EQ(golden, (std::vector<u64>{341, 561, 645, 1105, 1387, 1729, 1905, 2047, 2465, 2701, 2821, 3277, 4033,
                                        4369, 4371, 4681}));
    EXPECT_EQ(enumerate_pseudoprimes(2, 5000), golden);
}

TEST(EnumeratePseudoprimes, ThreadCountDoesNotChangeOutput)
{
    const auto serial = enumerate_pseudoprimes(3, 20'000);
    for (unsigned t : {2u, 3u, 7u})
        EXPECT_EQ(enumerate_pseudoprimes(3, 20'000, {}, t), serial);
}

TEST(IsCarmichael, Examples)
{
    EXPECT_TRUE(is_carmichael(561));
    EXPECT_FALSE(is_carmichael(341));
    EXPECT_FALSE(is_carmichael(9));
    EXPECT_FALSE(is_carmichael(2));
    EXPECT_FALSE(is_carmichael(17));
}

TEST(IsCarmichael, KorseltMatchesAllBasesOnSmallRange)
{
    for (u64 n = 4; n <= 3000; ++n) {
        if (is_prime(n))
            continue;
        ASSERT_EQ(is_carmichael(n), oracle::carmichael_by_all_bases(n)) << n;
    }
}

TEST(Record, CarriesFactorization)
{
    const auto r = make_pseudoprime_record(2, 561);
    EXPECT_EQ(r.n, 561u);
    EXPECT_EQ(r.base, 2u);
    EXPECT_TRUE(r.carmichael);
    EXPECT_EQ(r.factorization.to_string(), "3*11*17");
    EXPECT_FALSE(make_pseudoprime_record(2, 341).carmichael);
}

TEST(EulerTheorem, Examples)
{
    EXPECT_TRUE(euler_theorem_check(2, 341));
    EXPECT_TRUE(euler_theorem_check(7, 1));
    EXPECT_TRUE(euler_theorem_check(5, 7));
    EXPECT_THROW(euler_theorem_check(3, 561), PreconditionError);
}

TEST(EulerTheorem, HoldsOnRange)
{
    for (u64 n = 1; n <= 2000; ++n)
        for (u64 k = 1; k <= 50; ++k)
            if (gcd(k, n) == 1)
                ASSERT_TRUE(euler_theorem_check(k, n)) << k << ' ' << n;
}
