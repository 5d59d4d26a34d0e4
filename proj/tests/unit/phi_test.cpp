#include <gtest/gtest.h>

#include <random>

#include "gaussphi/expansion.hpp"
#include "gaussphi/phi.hpp"
#include "gaussphi/random.hpp"

namespace gaussphi {
namespace {

TEST(WSequence, FirstTerms) {
    const int expected[] = {3, 4, 6, 8, 12, 16, 24, 32, 48, 64};
    for (std::uint64_t m = 0; m < 10; ++m) EXPECT_EQ(w(m), expected[m]) << m;
    Integer big = 3;
    mpz_mul_2exp(big.get_mpz_t(), big.get_mpz_t(), 500);
    EXPECT_EQ(w(1000), big);
}

TEST(WSequence, LeastIndexMatchesLinearScan) {
    for (int t = 1; t <= 5000; ++t) {
        std::uint64_t m = 0;
        while (w(m) < t) ++m;
        ASSERT_EQ(least_w_index(Integer(t)), m) << t;
    }
}

TEST(WSequence, LeastIndexAroundLargeThresholds) {
    for (std::uint64_t m = 20; m < 400; m += 7) {
        const Integer wm = w(m);
        EXPECT_EQ(least_w_index(wm), m);
        EXPECT_EQ(least_w_index(wm + 1), m + 1);
        EXPECT_EQ(least_w_index(wm - 1), wm - 1 > w(m - 1) ? m : m - 1);
    }
}

TEST(Phi, Fixtures) {
    EXPECT_EQ(phi(GInt(4, 1)), 2u);
    EXPECT_EQ(phi(GInt(0, 2)), 2u);
    EXPECT_EQ(phi(GInt(2)), 2u);
    EXPECT_EQ(phi(GInt(3, 2)), 2u);
    EXPECT_EQ(phi(GInt(1)), 0u);
    EXPECT_EQ(phi(GInt(0, -1)), 0u);
    EXPECT_EQ(phi(GInt(1, 1)), 1u);
    EXPECT_EQ(phi(GInt(2, 1)), 1u);
    EXPECT_EQ(phi(GInt(1, -2)), 1u);
    EXPECT_EQ(phi(GInt(9)), 4u);
    EXPECT_THROW(phi(GInt()), DomainError);
}

TEST(Phi, BreakdownOfFourPlusI) {
    const PhiBreakdown b = phi_breakdown(GInt(4, 1));
    EXPECT_EQ(b.j, 0u);
    EXPECT_EQ(b.n, 2u);
    EXPECT_TRUE(b.l1_within);
    EXPECT_EQ(b.value, 2u);
}

TEST(Phi, MatchesBreadthFirstSearch) {
    for (int x = -24; x <= 24; ++x) {
        for (int y = -24; y <= 24; ++y) {
            if (x == 0 && y == 0) continue;
            const GInt z(x, y);
            ASSERT_EQ(phi(z), min_degree_bfs(z)) << z;
        }
    }
}

TEST(Phi, SparseFarPointsMatchBreadthFirstSearch) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coord(-3000, 3000);
    for (int k = 0; k < 60; ++k) {
        const GInt z(coord(rng), coord(rng));
        if (z.is_zero()) continue;
        ASSERT_EQ(phi(z), min_degree_bfs(z)) << z;
    }
}

TEST(Phi, LeMatchesValue) {
    for (int x = -30; x <= 30; ++x) {
        for (int y = -30; y <= 30; ++y) {
            if (x == 0 && y == 0) continue;
            const GInt z(x, y);
            const auto value = phi(z);
            for (std::uint64_t n = 0; n <= value + 3; ++n) ASSERT_EQ(phi_le(z, n), value <= n) << z << " n=" << n;
        }
    }
    EXPECT_TRUE(phi_le(GInt(5, 5), 1'000'000'000));
}

TEST(Phi, ShiftLawsOnLargeOperands) {
    std::mt19937_64 rng(9);
    const GInt two(2);
    const GInt one_plus_i(1, 1);
    for (std::uint64_t bits : {64u, 512u, 4096u, 30000u}) {
        for (int k = 0; k < 8; ++k) {
            const GInt z = random_gint(bits, rng);
            const auto p = phi(z);
            ASSERT_EQ(phi(two * z), p + 2);
            ASSERT_EQ(phi(one_plus_i * z), p + 1);
            for (Unit u : Unit::all()) {
                ASSERT_EQ(phi(u * z), p);
                ASSERT_EQ(phi(u * conj(z)), p);
            }
            ASSERT_TRUE(phi_le(z, p));
            if (p > 0) {
                ASSERT_FALSE(phi_le(z, p - 1));
            }
        }
    }
}

TEST(Phi, BoundedByBitLengths) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 200; ++k) {
        const GInt z = random_gint(8 + rng() % 2000, rng);
        const std::uint64_t top = mpz_sizeinbase(linf(z).get_mpz_t(), 2);
        const auto p = phi(z);
        ASSERT_GE(p + 2, 2 * (top - 1) - 1);
        ASSERT_LE(p, 2 * top + 1);
    }
}

TEST(PhiInt, FloorLog2) {
    EXPECT_EQ(phi_int(Integer(1)), 0u);
    EXPECT_EQ(phi_int(Integer(-1)), 0u);
    EXPECT_EQ(phi_int(Integer(2)), 1u);
    EXPECT_EQ(phi_int(Integer(7)), 2u);
    EXPECT_EQ(phi_int(Integer(-8)), 3u);
    EXPECT_THROW(phi_int(Integer(0)), DomainError);
}

}  // namespace
}  // namespace gaussphi
