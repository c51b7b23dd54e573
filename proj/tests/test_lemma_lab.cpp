#include <gtest/gtest.h>

#include "thetacol/lemma_lab.hpp"

using namespace thetacol;

// Reference values below were computed with an independent script using
// exact integer binomials.

TEST(Binom, ZeroExtended)
{
    EXPECT_EQ(binom(5, 2), 10);
    EXPECT_EQ(binom(2, 5), 0);
    EXPECT_EQ(binom(3, -1), 0);
    EXPECT_EQ(binom(0, 0), 1);
    EXPECT_EQ(binom<BigInt>(70, 35), BigInt("112186277816662845432"));
}

TEST(FValue, Examples)
{
    EXPECT_EQ(F_value({4, 1, 2, 0}), 2);
    EXPECT_EQ(2 * F_value({4, 1, 2, 0}), binom(4, 1));
    EXPECT_EQ(F_value({5, 2, 2, 1}), 3);
    EXPECT_LT(2 * F_value({5, 2, 2, 1}), binom(5, 2));
    EXPECT_EQ(F_value({6, 3, 0, 0}), 0);
    EXPECT_EQ(F_value({40, 13, 10, 5}), 235078480);
    EXPECT_EQ(F_value({9, 4, 3, 1}), 21);
    EXPECT_EQ(F_value({12, 5, 6, 0}), 396);
    EXPECT_EQ(F_value({7, 3, 2, 2}, Floor::k_plus_2), 2);
    EXPECT_EQ(F_value<BigInt>({70, 35, 20, 10}), BigInt("232602847745838732"));
}

TEST(FValue, RejectsBadParameters)
{
    EXPECT_THROW(F_value({4, 0, 1, 1}), InputError);
    EXPECT_THROW(F_value({3, 3, 1, 1}), InputError);
    EXPECT_THROW(F_value({4, 1, 3, 2}), InputError);
    EXPECT_THROW(F_value({4, 1, -1, 0}), InputError);
}

TEST(CValue, Examples)
{
    EXPECT_EQ(C_value(0, 1, 4, 1), 1);
    EXPECT_EQ(C_value(1, 2, 6, 2), 4);
    EXPECT_EQ(C_value(3, 2, 6, 2), 4);
    // ell = 2x with k odd vanishes at t = k
    EXPECT_EQ(C_value(1, 2, 4, 1), 0);
    EXPECT_EQ(C_value(3, 3, 6, 3), 0);
    EXPECT_EQ(C_value<BigInt>(35, 20, 70, 35), BigInt("13963726734876717912"));
    EXPECT_EQ(C_value<BigInt>(30, 20, 70, 35), BigInt("4148148072235873728"));
    EXPECT_THROW(C_value(5, 1, 4, 2), InputError);
    EXPECT_THROW(C_value(0, 3, 4, 1), InputError);
}

TEST(FValue, PrintedCentralBinomialFailsAtFirstCell)
{
    // ell=4, k=1, x=2: 2F = binom(4,1) - C(1,2) holds, binom(4,2) - C(1,2) does not
    const auto f = F_value({4, 1, 2, 0});
    EXPECT_EQ(2 * f, binom(4, 1) - C_value(1, 2, 4, 1));
    EXPECT_NE(2 * f, binom(4, 2) - C_value(1, 2, 4, 1));
}

TEST(MainSweep, SmallestGrid)
{
    const auto r = verify_main_lemma(2);
    EXPECT_TRUE(r.violations.empty());
    ASSERT_EQ(r.equality_cases.size(), 1u);
    const auto& e = r.equality_cases[0];
    EXPECT_EQ(std::tie(e.ell, e.k, e.x, e.y), std::make_tuple(2, 1, 1, 0));
    EXPECT_TRUE(r.all_hold());
}

TEST(MainSweep, UpToEight)
{
    const auto r = verify_main_lemma(8);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_TRUE(r.equality_set_exact);
    EXPECT_EQ(r.equality_cases.size(), 10u);
    EXPECT_TRUE(r.all_hold());

    const auto strict = verify_main_lemma(8, Floor::k_plus_2);
    EXPECT_TRUE(strict.violations.empty());
    EXPECT_TRUE(strict.equality_cases.empty());
}

TEST(IdentitySweep, UpToEight)
{
    const auto r = verify_section5_identities(8);
    EXPECT_TRUE(r.all_hold());
    EXPECT_GE(r.identities.size(), 7u);
    for (const auto& id : r.identities) {
        EXPECT_GT(id.checked, 0u) << id.name;
        EXPECT_EQ(id.exceptions, 0u) << id.name;
    }
    EXPECT_EQ(r.printed_variant_refutations, 74u);
    ASSERT_TRUE(r.printed_variant_first);
    EXPECT_EQ(std::tie(r.printed_variant_first->ell, r.printed_variant_first->k, r.printed_variant_first->x),
              std::make_tuple(2, 1, 1));
}

TEST(MainSweep, BigIntPathAgrees)
{
    // sweeps past ell = 30 run on BigInt
    const auto r = verify_main_lemma(32);
    EXPECT_TRUE(r.all_hold());
    EXPECT_EQ(r.equality_cases.size(), 136u);
}
