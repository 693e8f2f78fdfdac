#include "gen.hpp"
#include "qm/text.hpp"

#include <gtest/gtest.h>

using namespace qm;
using L = LaurentInt;

TEST(Laurent, AdditionExamples) {
    EXPECT_TRUE((L::q(1) + (-L::q(1))).is_zero());
    const L a = L(1) + L::q(-1);
    ASSERT_EQ(a.term_count(), 2u);
    EXPECT_EQ(a.terms()[0].first, -1);
    EXPECT_EQ(a.terms()[1].first, 0);
    EXPECT_EQ(L::qhat() + L::q(-1), L::q(1));
}

TEST(Laurent, MultiplicationExamples) {
    EXPECT_EQ(L::qhat() * L::q(1), L::q(2) - L(1));
    EXPECT_TRUE((L::q(3) * L::q(-3)).is_one());
    EXPECT_TRUE((L(0) * L::q(5)).is_zero());
}

TEST(Laurent, SignedPower) {
    EXPECT_EQ(L::signed_power(-1, 2), L::q(2));
    EXPECT_EQ(L::signed_power(-1, -1), -L::q(-1));
    EXPECT_TRUE(L::signed_power(1, 0).is_one());
}

TEST(Laurent, TextForm) {
    EXPECT_EQ((L::q(2) - L(1)).to_string(), "q^2 - 1");
    EXPECT_EQ((-L::q(-1)).to_string(), "-q^-1");
    EXPECT_EQ((L(3) * L::q(1) - L(2)).to_string(), "3*q - 2");
    EXPECT_EQ(L().to_string(), "0");
}

TEST(Laurent, CanonicalForm) {
    const L a = L::from_terms({{2, 3}, {0, 1}, {2, -3}, {-1, 0}});
    ASSERT_EQ(a.term_count(), 1u);
    EXPECT_EQ(a, L(1));
    EXPECT_TRUE(L::from_terms({}).is_zero());
}

TEST(Laurent, UnitsAndDivision) {
    EXPECT_EQ((-L::q(3)).unit_inverse(), -L::q(-3));
    EXPECT_THROW((void)L::qhat().unit_inverse(), std::domain_error);
    EXPECT_EQ((L::q(2) - L(1)).divexact(L::q(1) - L(1)), L::q(1) + L(1));
    EXPECT_THROW((void)(L::q(2) + L(1)).divexact(L::q(1) - L(1)), std::domain_error);
    EXPECT_EQ(gcd(L::q(2) - L(1), L::q(1) - L(1)), L::q(1) - L(1));
}

TEST(LaurentProperty, RingAxioms) {
    for (int trial = 0; trial < 400; ++trial) {
        const L a = testgen::laurent(), b = testgen::laurent(), c = testgen::laurent();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * L(1), a);
    }
}

TEST(LaurentProperty, IntegralDomain) {
    for (int trial = 0; trial < 400; ++trial) {
        const L a = testgen::laurent(), b = testgen::laurent();
        EXPECT_EQ((a * b).is_zero(), a.is_zero() || b.is_zero());
    }
}

TEST(LaurentProperty, CanonicalIdempotentAndTextRoundTrip) {
    for (int trial = 0; trial < 300; ++trial) {
        const L a = testgen::laurent();
        EXPECT_EQ(L::from_terms(a.terms()), a);
        for (const auto& [e, c] : a.terms()) EXPECT_NE(c, 0);
        EXPECT_EQ(parse_laurent(a.to_string()), a);
    }
}

TEST(LaurentProperty, DivexactInvertsMultiplication) {
    for (int trial = 0; trial < 200; ++trial) {
        const L a = testgen::laurent(), b = testgen::laurent();
        if (b.is_zero()) continue;
        EXPECT_EQ((a * b).divexact(b), a);
    }
}

TEST(LaurentProperty, GcdDividesBoth) {
    for (int trial = 0; trial < 150; ++trial) {
        const L c = testgen::laurent(2);
        const L a = testgen::laurent(3) * c, b = testgen::laurent(3) * c;
        if (a.is_zero() || b.is_zero()) continue;
        const L g = gcd(a, b);
        EXPECT_NO_THROW((void)a.divexact(g));
        EXPECT_NO_THROW((void)b.divexact(g));
        if (!c.is_zero()) {
            EXPECT_NO_THROW((void)g.divexact(gcd(c, c)));
        }
    }
}

TEST(LaurentProperty, ModularEvaluationIsRingMap) {
    const std::uint64_t q0 = 982451653;
    for (int trial = 0; trial < 300; ++trial) {
        const L a = testgen::laurent(), b = testgen::laurent();
        EXPECT_EQ(eval_mod(a * b, q0), mulmod(eval_mod(a, q0), eval_mod(b, q0)));
        EXPECT_EQ(eval_mod(a + b, q0), (eval_mod(a, q0) + eval_mod(b, q0)) % kModPrime);
    }
}
