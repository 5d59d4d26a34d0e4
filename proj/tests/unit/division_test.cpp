#include <gtest/gtest.h>

#include <random>

#include "gaussphi/division.hpp"
#include "gaussphi/phi.hpp"
#include "gaussphi/random.hpp"

namespace gaussphi {
namespace {

// Nearest integer by exhaustive search, exact halves toward the floor.
long brute_nint(long t, long d) {
    long best = 0;
    bool have = false;
    for (long q = -200; q <= 200; ++q) {
        const long dist = std::abs(2 * (t - q * d));
        const long best_dist = std::abs(2 * (t - best * d));
        if (!have || dist < best_dist) {
            best = q;
            have = true;
        }
    }
    return best;
}

TEST(NintRatio, MatchesBruteForce) {
    for (long d = 1; d <= 12; ++d) {
        for (long t = -60; t <= 60; ++t) {
            ASSERT_EQ(nint_ratio(Integer(t), Integer(d)), brute_nint(t, d)) << t << "/" << d;
        }
    }
}

TEST(NintRatio, HalvesGoDown) {
    EXPECT_EQ(nint_ratio(Integer(1), Integer(2)), 0);
    EXPECT_EQ(nint_ratio(Integer(-1), Integer(2)), -1);
    EXPECT_EQ(nint_ratio(Integer(5), Integer(2)), 2);
    EXPECT_THROW(nint_ratio(Integer(1), Integer(0)), DomainError);
    EXPECT_THROW(nint_ratio(Integer(1), Integer(-3)), DomainError);
}

TEST(GaussDivide, Fixtures) {
    const auto qr = gauss_divide(GInt(9), GInt(4, 1));
    EXPECT_EQ(qr.quotient, GInt(2, -1));
    EXPECT_EQ(qr.remainder, GInt(0, 2));
    EXPECT_EQ(phi(qr.remainder), 2u);
    EXPECT_THROW(gauss_divide(GInt(1), GInt()), DivisionByZero);
}

TEST(GaussDivide, NormBoundOnBox) {
    for (int a0 = -9; a0 <= 9; ++a0) {
        for (int a1 = -9; a1 <= 9; ++a1) {
            for (int b0 = -6; b0 <= 6; ++b0) {
                for (int b1 = -6; b1 <= 6; ++b1) {
                    const GInt a(a0, a1), b(b0, b1);
                    if (b.is_zero()) continue;
                    const auto qr = gauss_divide(a, b);
                    ASSERT_EQ(qr.quotient * b + qr.remainder, a);
                    ASSERT_LE(2 * norm(qr.remainder), norm(b)) << a << " / " << b;
                }
            }
        }
    }
}

TEST(MinimalDivide, NineByFourPlusI) {
    const auto out = minimal_divide(GInt(9), GInt(4, 1));
    EXPECT_EQ(out.gauss_quotient, GInt(2, -1));
    EXPECT_EQ(out.gauss_remainder, GInt(0, 2));
    EXPECT_EQ(out.gauss_phi_r, 2u);
    EXPECT_EQ(out.strategy, Strategy::SubtractU);
    EXPECT_EQ(out.condition, Condition::Cond1);
    EXPECT_EQ(out.quotient, GInt(2));
    EXPECT_EQ(out.remainder, GInt(1, -2));
    EXPECT_EQ(out.phi_b, 2u);
    EXPECT_EQ(out.phi_r, 1u);
}

TEST(MinimalDivide, ElseBranchFixtures) {
    auto out = minimal_divide(GInt(-10, -10), GInt(-10, 4));
    EXPECT_EQ(out.strategy, Strategy::SubtractIU);
    EXPECT_EQ(out.condition, Condition::ElseBranch);
    EXPECT_EQ(out.quotient, GInt(0, 1));
    EXPECT_EQ(out.remainder, GInt(-6));

    out = minimal_divide(GInt(-25, -25), GInt(-25, 8));
    EXPECT_EQ(out.condition, Condition::ElseBranch);
    EXPECT_EQ(out.quotient, GInt(0, 1));
    EXPECT_EQ(out.remainder, GInt(-17));
}

TEST(MinimalDivide, ZeroCases) {
    const auto out = minimal_divide(GInt(), GInt(3, 1));
    EXPECT_TRUE(out.quotient.is_zero());
    EXPECT_TRUE(out.remainder.is_zero());
    EXPECT_FALSE(out.phi_r.has_value());
    EXPECT_EQ(out.strategy, Strategy::Gauss);

    const auto exact = minimal_divide(GInt(5), GInt(2, 1));
    EXPECT_EQ(exact.quotient, GInt(2, -1));
    EXPECT_TRUE(exact.remainder.is_zero());

    EXPECT_THROW(minimal_divide(GInt(1), GInt()), DivisionByZero);
}

TEST(MinimalDivide, UnitDivisorLeavesNoRemainder) {
    for (Unit u : Unit::all()) {
        const auto out = minimal_divide(GInt(7, -3), GInt(u));
        EXPECT_TRUE(out.remainder.is_zero());
        EXPECT_EQ(out.quotient * GInt(u), GInt(7, -3));
    }
}

TEST(MinimalDivide, RandomWideOperands) {
    std::mt19937_64 rng(21);
    int adjusted = 0;
    for (int k = 0; k < 3000; ++k) {
        const std::uint64_t bits_b = 1 + rng() % 400;
        const GInt a = random_gint(bits_b + rng() % 400, rng);
        const GInt b = random_gint(bits_b, rng);
        const auto out = minimal_divide(a, b);
        ASSERT_EQ(out.quotient * b + out.remainder, a);
        if (!out.remainder.is_zero()) {
            ASSERT_LT(phi(out.remainder), phi(b)) << a << " / " << b;
            ASSERT_EQ(out.phi_r, phi(out.remainder));
        }
        if (out.strategy != Strategy::Gauss) ++adjusted;
    }
    EXPECT_GT(adjusted, 0);
}

TEST(MinimalDivide, StructuredDivisors) {
    GInt b(1);
    for (int k = 0; k < 120; ++k) {
        b = b * GInt(1, 1);
        const GInt shifted = b + GInt(1);
        for (int x = -5; x <= 5; ++x) {
            for (int y = -5; y <= 5; ++y) {
                const GInt a = shifted * GInt(x, y) + GInt(k, -3 * k + x) * b;
                const auto out = minimal_divide(a, shifted);
                ASSERT_EQ(out.quotient * shifted + out.remainder, a);
                if (!out.remainder.is_zero()) ASSERT_LT(phi(out.remainder), phi(shifted));
            }
        }
    }
}

TEST(AdjustmentUnnecessary, LiteralPredicate) {
    EXPECT_TRUE(adjustment_unnecessary(GInt(9), GInt(4, 1)));
    EXPECT_FALSE(adjustment_unnecessary(GInt(2), GInt(1, 1)));
    EXPECT_TRUE(adjustment_unnecessary(GInt(3), GInt(7)));
    EXPECT_TRUE(adjustment_unnecessary(GInt(4), GInt(0, 8)));
    EXPECT_THROW(adjustment_unnecessary(GInt(), GInt(1)), DomainError);
}

TEST(AdjustmentUnnecessary, LiteralReadingHasCounterexample) {
    // v2(9) = v2(4+i) = 0, yet the Gauss remainder 2i does not descend.
    ASSERT_TRUE(adjustment_unnecessary(GInt(9), GInt(4, 1)));
    const auto qr = gauss_divide(GInt(9), GInt(4, 1));
    EXPECT_EQ(phi(qr.remainder), phi(GInt(4, 1)));
}

TEST(Names, Stable) {
    EXPECT_EQ(to_string(Strategy::Gauss), "gauss");
    EXPECT_EQ(to_string(Strategy::SubtractU), "subtract_u");
    EXPECT_EQ(to_string(Strategy::SubtractIU), "subtract_iu");
    EXPECT_EQ(to_string(Condition::Cond1), "cond1");
    EXPECT_EQ(to_string(Condition::Cond2), "cond2");
    EXPECT_EQ(to_string(Condition::Cond3), "cond3");
    EXPECT_EQ(to_string(Condition::ElseBranch), "else_branch");
}

}  // namespace
}  // namespace gaussphi
