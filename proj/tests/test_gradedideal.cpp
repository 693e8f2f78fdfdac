#include "expect_error.hpp"
#include "gen.hpp"
#include "qm/graded_ideal.hpp"
#include "qm/linalg.hpp"
#include "qm/qmatrix.hpp"
#include "qm/strata.hpp"
#include "qm/text.hpp"

#include <gtest/gtest.h>

using namespace qm;
using L = LaurentInt;

namespace {
Element X(int n, int i, int j) { return oqm_presentation(n).gen(xgen(n, i, j)); }
}  // namespace

TEST(ComponentBasis, Examples) {
    const Presentation A = oqm_presentation(2);
    const auto b = homogeneous_component_basis(A, {1, 1, 1, 1});
    ASSERT_EQ(b.size(), 2u);
    std::set<std::string> got;
    for (const auto& m : b) got.insert(format_monomial(A, m));
    EXPECT_EQ(got, (std::set<std::string>{"X[1,1]*X[2,2]", "X[1,2]*X[2,1]"}));
    const auto one = homogeneous_component_basis(A, {1, 0, 0, 1});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(format_monomial(A, one[0]), "X[1,2]");
    const auto zero = homogeneous_component_basis(A, {0, 0, 0, 0});
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].is_one());
}

TEST(ComponentBasis, CountsMatchContingencyTables) {
    // monomials of degree (rows a; cols b) in commuting-size count = 2x2 tables with those margins
    const Presentation A = oqm_presentation(2);
    EXPECT_EQ(homogeneous_component_basis(A, {2, 2, 2, 2}).size(), 3u);
    EXPECT_EQ(homogeneous_component_basis(A, {3, 1, 2, 2}).size(), 2u);
    EXPECT_EQ(homogeneous_component_basis(oqm_presentation(3), {1, 1, 1, 1, 1, 1}).size(), 6u);
}

TEST(Membership, Examples) {
    const Presentation A = oqm_presentation(2);
    const GradedIdeal a(A, {X(2, 2, 1), X(2, 2, 2)});
    const Element det = quantum_minor(2, {1, 2}, {1, 2});
    const auto r = a.contains(det, true);
    ASSERT_TRUE(r.member);
    ASSERT_TRUE(r.certificate);
    EXPECT_TRUE(verify_certificate(a, det, *r.certificate));

    EXPECT_FALSE(GradedIdeal(A, {X(2, 1, 2)}).contains(X(2, 1, 1)).member);

    const GradedIdeal l(A, {X(2, 1, 1), X(2, 1, 2), X(2, 2, 1)});
    const Element f = A.multiply(X(2, 2, 2), X(2, 1, 1)) - L::q(2) * A.multiply(X(2, 1, 1), X(2, 2, 2));
    const auto r2 = l.contains(f, true);
    ASSERT_TRUE(r2.member);
    EXPECT_TRUE(verify_certificate(l, f, *r2.certificate));
    EXPECT_EQ(f, (L(1) - L::q(2)) * A.multiply(X(2, 1, 1), X(2, 2, 2)) -
                     L::qhat() * A.multiply(X(2, 1, 2), X(2, 2, 1)));
}

TEST(Membership, Errors) {
    const Presentation A = oqm_presentation(2);
    const GradedIdeal l(A, {X(2, 1, 1)});
    EXPECT_QM_ERROR((void)l.contains(X(2, 1, 1) + X(2, 1, 2)), ErrorCode::NotHomogeneous);
    EXPECT_QM_ERROR(GradedIdeal(A, {X(2, 1, 1) + X(2, 2, 2)}), ErrorCode::NotHomogeneous);
    const Presentation R = step_algebra_plus(2, {1}, true);
    EXPECT_QM_ERROR(GradedIdeal(R, {R.gen("Y", 2, 1)}), ErrorCode::LocalizedAmbient);
}

TEST(Membership, ZeroAndEmpty) {
    const Presentation A = oqm_presentation(2);
    const GradedIdeal none(A, {});
    EXPECT_TRUE(none.contains(Element()).member);
    EXPECT_FALSE(none.contains(X(2, 1, 1)).member);
    const GradedIdeal dropped(A, {Element(), X(2, 1, 1)});
    EXPECT_EQ(dropped.generators().size(), 1u);
}

TEST(MembershipProperty, RandomCombinationsAreMembers) {
    const Presentation A = oqm_presentation(3);
    const std::vector<Element> gens = {quantum_minor(3, {1, 2}, {1, 2}), X(3, 3, 1), quantum_minor(3, {2, 3}, {2, 3})};
    const GradedIdeal I(A, gens);
    for (int trial = 0; trial < 25; ++trial) {
        // f = sum x * g * y with monomials x, y chosen so f is homogeneous
        const Word wx = testgen::word(A, 1), wy = testgen::word(A, 1);
        const int k = testgen::uniform(0, 2);
        Element f;
        for (int s = 0; s < 3; ++s) {
            Word a = wx, b = wy;
            std::shuffle(a.begin(), a.end(), testgen::rng());
            f += testgen::laurent(2) * A.multiply({A.normal_form(a), gens[k], A.normal_form(b)});
        }
        if (f.is_zero()) continue;
        const auto r = I.contains(f, true);
        ASSERT_TRUE(r.member) << format_element(A, f);
        EXPECT_TRUE(verify_certificate(I, f, *r.certificate));
    }
}

TEST(MembershipProperty, TwoSidedMonotonicity) {
    const Presentation A = oqm_presentation(3);
    const GradedIdeal I(A, {quantum_minor(3, {1, 2}, {2, 3})});
    const Element f = quantum_minor(3, {1, 2}, {2, 3});
    for (int trial = 0; trial < 20; ++trial) {
        const Element x = A.normal_form(testgen::word(A, 2)), y = A.normal_form(testgen::word(A, 1));
        EXPECT_TRUE(I.contains(A.multiply({x, f, y})).member);
    }
}

TEST(MembershipProperty, NonMembersStayOut) {
    // X[1,1]^k never lies in the ideal generated by the other generators
    const Presentation A = oqm_presentation(2);
    const GradedIdeal I(A, {X(2, 1, 2), X(2, 2, 1)});
    for (int k = 1; k <= 4; ++k) EXPECT_FALSE(I.contains(A.power(X(2, 1, 1), k)).member);
    // and X11 X22 is not in <X12> although X22 X11 has an X12 X21 term
    EXPECT_FALSE(GradedIdeal(A, {X(2, 1, 2)}).contains(A.multiply(X(2, 1, 1), X(2, 2, 2))).member);
}

TEST(ComponentDimension, ModularBoundAndExact) {
    const Presentation A = oqm_presentation(3);
    const GradedIdeal K = krc_generators(3, {{1}, {2}});
    for (const auto& d : multidegrees(3, 2)) {
        const std::size_t exact = K.component_dimension(d);
        EXPECT_LE(K.modular_component_dimension(d), exact);
        EXPECT_LE(exact, homogeneous_component_basis(A, d).size());
    }
}

TEST(Linalg, RankAndNullspace) {
    using linalg::Row;
    const L q = L::q(1);
    const std::vector<Row> rows = {{L(1), q}, {q, q * q}, {L(0), L(1)}};
    EXPECT_EQ(linalg::exact_rank(rows), 2u);
    const auto ns = linalg::left_nullspace(rows);
    ASSERT_EQ(ns.size(), 1u);
    for (std::size_t c = 0; c < 2; ++c) {
        L s;
        for (std::size_t r = 0; r < rows.size(); ++r) s += ns[0][r] * rows[r][c];
        EXPECT_TRUE(s.is_zero());
    }
    const auto span = linalg::exact_span(rows, {L(2), q + q}, true);
    ASSERT_TRUE(span.member);
    for (std::size_t c = 0; c < 2; ++c) {
        L s;
        for (std::size_t r = 0; r < rows.size(); ++r) s += span.combination[r] * rows[r][c];
        EXPECT_EQ(s, span.scale * (c == 0 ? L(2) : q + q));
    }
    EXPECT_FALSE(linalg::exact_span({{L(1), q}}, {L(1), L(1)}, false).member);
}

TEST(LinalgProperty, ModularRankNeverExceedsExact) {
    for (int trial = 0; trial < 60; ++trial) {
        const int r = testgen::uniform(1, 4), c = testgen::uniform(1, 4);
        std::vector<linalg::Row> rows(r, linalg::Row(c));
        for (auto& row : rows)
            for (auto& x : row) x = testgen::laurent(2);
        // force a dependency sometimes
        if (r > 1 && testgen::uniform(0, 1)) {
            const L k = testgen::laurent(2);
            for (int j = 0; j < c; ++j) rows[r - 1][j] = rows[0][j] * k;
        }
        const std::size_t exact = linalg::exact_rank(rows);
        EXPECT_LE(linalg::modular_select(rows).independent.size(), exact);
        EXPECT_EQ(linalg::left_nullspace(rows).size(), rows.size() - exact);
    }
}
