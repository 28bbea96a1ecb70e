#include <cohann/invariants.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <numeric>

using namespace cohann;

TEST(Semigroup, GapsMatchBruteForce) {
    EXPECT_EQ(semigroup_gaps(SemigroupCurve(2, 3)), (std::vector<unsigned>{1}));
    EXPECT_EQ(semigroup_gaps(SemigroupCurve(3, 5)), (std::vector<unsigned>{1, 2, 4, 7}));
    EXPECT_EQ(semigroup_gaps(SemigroupCurve(2, 5)), (std::vector<unsigned>{1, 3}));
}

TEST(Semigroup, FrobeniusAndDelta) {
    EXPECT_EQ(frobenius_number(SemigroupCurve(2, 3)), 1u);
    EXPECT_EQ(frobenius_number(SemigroupCurve(3, 5)), 7u);
    EXPECT_EQ(frobenius_number(SemigroupCurve(3, 4)), 5u);
    EXPECT_EQ(delta_invariant(SemigroupCurve(2, 3)), 1u);
    EXPECT_EQ(delta_invariant(SemigroupCurve(3, 4)), 3u);
    EXPECT_EQ(delta_invariant(SemigroupCurve(3, 5)), 4u);
    EXPECT_TRUE(is_symmetric(SemigroupCurve(2, 3)));
    EXPECT_TRUE(is_symmetric(SemigroupCurve(3, 5)));
    EXPECT_TRUE(is_symmetric(SemigroupCurve(2, 7)));
}

TEST(Semigroup, InvalidGenerators) {
    EXPECT_THROW(SemigroupCurve(2, 4), std::invalid_argument);
    EXPECT_THROW(SemigroupCurve(1, 5), std::invalid_argument);
    EXPECT_THROW(SemigroupCurve(6, 9), std::invalid_argument);
}

TEST(Semigroup, BatteryAgainstOracle) {
    for (unsigned a = 2; a <= 12; ++a) {
        for (unsigned b = a + 1; b <= 12; ++b) {
            if (std::gcd(a, b) != 1) continue;
            SemigroupCurve c(a, b);
            auto gaps = oracle::semigroup_gaps(a, b);
            ASSERT_EQ(semigroup_gaps(c), gaps) << a << "," << b;
            ASSERT_EQ(frobenius_number(c), gaps.back());
            ASSERT_EQ(frobenius_number(c), (a - 1) * (b - 1) - 1);
            ASSERT_EQ(2 * gaps.size(), (a - 1) * (b - 1));
            ASSERT_TRUE(is_symmetric(c));
        }
    }
}

TEST(Jacobian, Examples) {
    Variables xy{"x", "y"};
    EXPECT_EQ(jacobian_ideal(parse_polynomial("x^2+y^3", xy)),
              (std::vector<Polynomial>{parse_polynomial("2x", xy), parse_polynomial("3y^2", xy)}));
    Variables t{"x", "y", "z", "w"};
    EXPECT_EQ(jacobian_ideal(parse_polynomial("x*w^2-y*z", t)),
              (std::vector<Polynomial>{parse_polynomial("w^2", t), parse_polynomial("-z", t),
                                       parse_polynomial("-y", t), parse_polynomial("2x*w", t)}));
    Variables d{"x11", "x12", "x21", "x22"};
    EXPECT_EQ(jacobian_ideal(parse_polynomial("x11*x22-x12*x21", d)),
              (std::vector<Polynomial>{parse_polynomial("x22", d), parse_polynomial("-x21", d),
                                       parse_polynomial("-x12", d), parse_polynomial("x11", d)}));
}

TEST(Milnor, Examples) {
    Variables xy{"x", "y"};
    auto mu = [&](const char* f) {
        Polynomial p = parse_polynomial(f, xy);
        return milnor_number(p, milnor_truncation(p));
    };
    EXPECT_EQ(mu("x^2+y^3"), 2u);
    EXPECT_EQ(mu("x^3+y^5"), 8u);
    EXPECT_EQ(mu("x"), 0u);
    EXPECT_EQ(mu("x^2-y^2"), 1u);
    // Non-isolated: the Milnor algebra grows with N.
    EXPECT_FALSE(mu("x^2"));
    EXPECT_THROW(milnor_number(parse_polynomial("x^2", xy), 2), std::invalid_argument);
}

TEST(Milnor, BatteryEqualsTwiceDelta) {
    for (unsigned a = 2; a <= 7; ++a) {
        for (unsigned b = a + 1; b <= 8; ++b) {
            if (std::gcd(a, b) != 1) continue;
            SemigroupCurve c(a, b);
            Polynomial f = c.polynomial();
            auto mu = milnor_number(f, milnor_truncation(f));
            ASSERT_TRUE(mu);
            ASSERT_EQ(*mu, (a - 1) * (b - 1));
            ASSERT_EQ(*mu, 2 * delta_invariant(c));
        }
    }
}

TEST(Milnor, StableUnderAddingASquare) {
    Variables xy{"x", "y"};
    Variables xyz{"x", "y", "z"};
    for (const char* f : {"x^2+y^3", "x^3+y^4", "x^2+y^5"}) {
        Polynomial p = parse_polynomial(f, xy);
        Polynomial q = p.embedded(xyz) + parse_polynomial("z^2", xyz);
        EXPECT_EQ(milnor_number(p, milnor_truncation(p)), milnor_number(q, milnor_truncation(q))) << f;
    }
}

TEST(MilnorJung, Arithmetic) {
    EXPECT_TRUE(milnor_jung_check(2, 1, 1));
    EXPECT_TRUE(milnor_jung_check(1, 1, 2));
    EXPECT_FALSE(milnor_jung_check(2, 1, 2));
}

TEST(Suspension, Reports) {
    auto r = suspension_report(SemigroupCurve(2, 3), 1, 10);
    EXPECT_EQ(r.mu, 2);
    EXPECT_EQ(r.delta, 1);
    EXPECT_EQ(r.branches, 1);
    EXPECT_TRUE(r.mj_holds);
    EXPECT_EQ(r.polynomial, "y^3+x^2+z1^2");

    auto s = suspension_report(SemigroupCurve(3, 4), 1, 12);
    EXPECT_EQ(s.mu, 6);
    EXPECT_EQ(s.delta, 3);
    EXPECT_TRUE(s.mj_holds);

    auto curve = suspension_report(SemigroupCurve(2, 3), 0, 10);
    EXPECT_EQ(curve.mu, 2);
    EXPECT_TRUE(curve.mj_holds);

    auto two = suspension_report(SemigroupCurve(3, 5), 2, 14);
    EXPECT_EQ(two.mu, 8);
    EXPECT_TRUE(two.mj_holds);
}
