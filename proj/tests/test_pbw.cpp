#include "expect_error.hpp"
#include "gen.hpp"
#include "qm/qmatrix.hpp"
#include "qm/strata.hpp"
#include "qm/text.hpp"
#include "qm/word_rewrite.hpp"

#include <gtest/gtest.h>

using namespace qm;
using L = LaurentInt;

namespace {

Presentation A2() { return oqm_presentation(2); }
Element X(int n, int i, int j) { return oqm_presentation(n).gen(xgen(n, i, j)); }
Element nf(const Presentation& p, const std::string& s) { return parse_element(p, s); }

}  // namespace

TEST(NormalForm, DefiningRelationsAtN2) {
    const Presentation A = A2();
    EXPECT_EQ(A.multiply(X(2, 2, 1), X(2, 1, 1)), L::q(-1) * A.multiply(X(2, 1, 1), X(2, 2, 1)));
    EXPECT_EQ(format_element(A, A.multiply(X(2, 2, 2), X(2, 1, 1))), "X[1,1]*X[2,2] - (q - q^-1)*X[1,2]*X[2,1]");
    EXPECT_EQ(A.multiply(X(2, 2, 1), X(2, 1, 2)), A.multiply(X(2, 1, 2), X(2, 2, 1)));
}

TEST(NormalForm, UnitsAndZero) {
    const Presentation A = A2();
    const Element x = nf(A, "X[1,2]*X[2,1] + q*X[2,2]");
    EXPECT_EQ(A.multiply(Element::one(), x), x);
    EXPECT_TRUE(A.multiply(x, Element()).is_zero());
}

TEST(NormalForm, DeterminantCentralAtN2) {
    const Presentation A = A2();
    const Element det = quantum_minor(2, {1, 2}, {1, 2});
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) EXPECT_EQ(A.multiply(det, X(2, i, j)), A.multiply(X(2, i, j), det));
}

TEST(NormalForm, Errors) {
    const Presentation A = A2();
    EXPECT_QM_ERROR((void)A.normal_form({{17, 1}}), ErrorCode::UnknownGenerator);
    EXPECT_QM_ERROR((void)A.normal_form({{0, -1}}), ErrorCode::NegativePowerOfNonInvertible);
    EXPECT_QM_ERROR((void)A.index("Y", 1, 1), ErrorCode::UnknownGenerator);
}

TEST(Presentation, RuleCounts) {
    EXPECT_EQ(oqm_presentation(1).size(), 1);
    EXPECT_TRUE(oqm_presentation(1).rules().empty());
    EXPECT_EQ(oqm_presentation(2).rules().size(), 6u);
    EXPECT_EQ(oqm_presentation(3).rules().size(), 36u);
}

TEST(Presentation, RulesHomogeneousAndOrdered) {
    for (int n = 1; n <= 4; ++n) {
        const Presentation A = oqm_presentation(n);
        for (const auto& r : A.rules()) {
            EXPECT_LT(r.low, r.high);
            const DegreeVector d = A.degree(Monomial({{r.low, 1}, {r.high, 1}}));
            for (const auto& c : r.corrections) {
                EXPECT_EQ(A.degree(c.word), d);
                EXPECT_LE(c.word.total_degree(), 2);
            }
        }
    }
}

TEST(Quotient, StepPatternN2) {
    const Presentation A = A2();
    const Quotient q = quotient_by_generators(A, {xgen(2, 1, 2), xgen(2, 2, 2)});
    ASSERT_EQ(q.presentation.size(), 2);
    const RewriteRule& r = q.presentation.rule(0, 1);
    EXPECT_EQ(r.swap, L::q(-1));
    EXPECT_TRUE(r.pure());
    EXPECT_EQ(q.image[xgen(2, 1, 2)], -1);
}

TEST(Quotient, NonAdmissible) {
    try {
        (void)quotient_by_generators(A2(), {xgen(2, 1, 1)});
        FAIL() << "expected NonAdmissibleKillSet";
    } catch (const QmError& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonAdmissibleKillSet);
        EXPECT_NE(std::string(e.what()).find("X[2,2]"), std::string::npos) << e.what();
    }
}

TEST(Quotient, EmptyKillIsIdentity) {
    const Quotient q = quotient_by_generators(A2(), {});
    EXPECT_EQ(q.presentation.size(), 4);
    EXPECT_EQ(q.presentation.rules().size(), 6u);
    for (int g = 0; g < 4; ++g) EXPECT_EQ(q.image[g], g);
}

TEST(Quotient, EveryStepPatternAdmissibleUpToN4) {
    for (int n = 1; n <= 4; ++n)
        for (int t = 1; t <= n; ++t)
            for (const auto& s : subsets(n, t)) {
                EXPECT_NO_THROW((void)step_algebra_plus(n, s, true));
                EXPECT_NO_THROW((void)step_algebra_minus(n, s, true));
            }
}

TEST(Localize, Examples) {
    const Presentation r0 = step_algebra_plus(2, {1}, false);
    const Presentation r = localize(r0, {r0.index("Y", 1, 1)});
    EXPECT_TRUE(r.generator(r.index("Y", 1, 1)).invertible);
    const Element yinv = r.gen("Y", 1, 1, -1);
    EXPECT_EQ(r.multiply(yinv, r.gen("Y", 1, 1)), Element::one());
    EXPECT_EQ(r.multidegree(yinv), (DegreeVector{-1, 0, -1, 0}));
    EXPECT_QM_ERROR((void)localize(A2(), {xgen(2, 1, 1)}), ErrorCode::NotQNormal);
    EXPECT_EQ(localize(A2(), {}).rules().size(), 6u);
}

TEST(Tensor, CrossCommutationAndGrading) {
    const Presentation plus = step_algebra_plus(2, {1}, true);
    const Presentation minus = step_algebra_minus(2, {1}, true);
    const Presentation T = tensor(plus, minus);
    EXPECT_EQ(T.grading_rank(), 8);
    const Element y = T.gen(T.index("Y", 1, 1, 0)), z = T.gen(T.index("Z", 1, 2, 1));
    EXPECT_EQ(T.multiply(z, y), T.multiply(y, z));
    EXPECT_EQ(T.multiply(y, z).size(), 1u);
}

TEST(Multidegree, Examples) {
    const Presentation A = A2();
    EXPECT_EQ(A.multidegree(X(2, 1, 2)), (DegreeVector{1, 0, 0, 1}));
    EXPECT_EQ(A.multidegree(A.multiply(X(2, 1, 1), X(2, 2, 2))), (DegreeVector{1, 1, 1, 1}));
    EXPECT_FALSE(A.multidegree(X(2, 1, 1) + X(2, 1, 2)).has_value());
}

TEST(Homomorphism, TransposeAndIdentity) {
    const Element det = quantum_minor(2, {1, 2}, {1, 2});
    EXPECT_EQ(transpose_tau(2, det), det);
    EXPECT_EQ(transpose_tau(2, X(2, 1, 2)), X(2, 2, 1));
    for (int n = 1; n <= 3; ++n) EXPECT_NO_THROW(transpose_hom(n).validate());
    const Presentation A = A2();
    std::vector<std::optional<Element>> id;
    for (int g = 0; g < A.size(); ++g) id.push_back(A.gen(g));
    const Homomorphism h(A, A, id);
    const Element x = nf(A, "X[2,2]*X[1,1] - 3*X[1,2]");
    EXPECT_EQ(h.apply(x), x);
}

TEST(Homomorphism, ValidationRejectsBadImages) {
    const Presentation A = A2();
    std::vector<std::optional<Element>> swap;
    for (int g = 0; g < A.size(); ++g) swap.push_back(A.gen(g));
    std::swap(swap[0], swap[1]);
    EXPECT_QM_ERROR(Homomorphism(A, A, swap).validate(), ErrorCode::RelationViolated);
    std::vector<std::optional<Element>> partial(A.size());
    EXPECT_QM_ERROR((void)Homomorphism(A, A, partial).apply(X(2, 1, 1)), ErrorCode::MissingImage);
}

TEST(Homomorphism, BetaValidatesUpToN3) {
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t <= n; ++t)
            for (const auto& p : enumerate_rc(n, t)) EXPECT_NO_THROW(beta_map(n, p).validate());
}

// --- properties

TEST(PbwProperty, StrategyIndependentNormalForms) {
    for (int n = 2; n <= 3; ++n) {
        const Presentation A = oqm_presentation(n);
        for (int trial = 0; trial < 500; ++trial) {
            const Word w = testgen::word(A, 6);
            const Element e = A.normal_form(w);
            EXPECT_EQ(reduce_word(A, w, Strategy::Leftmost), e);
            EXPECT_EQ(reduce_word(A, w, Strategy::Rightmost), e);
        }
    }
}

TEST(PbwProperty, Associativity) {
    const Presentation A = oqm_presentation(3);
    for (int trial = 0; trial < 60; ++trial) {
        const Element a = testgen::element(A, 3, 3), b = testgen::element(A, 3, 3), c = testgen::element(A, 3, 3);
        EXPECT_EQ(A.multiply(A.multiply(a, b), c), A.multiply(a, A.multiply(b, c)));
    }
}

TEST(PbwProperty, MultidegreeAdditive) {
    const Presentation A = oqm_presentation(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Word s1 = testgen::word(A, 3), s2 = testgen::word(A, 3);
        const Element a = testgen::homogeneous(A, s1, 3), b = testgen::homogeneous(A, s2, 3);
        const auto da = A.multidegree(a), db = A.multidegree(b);
        ASSERT_TRUE(da && db);
        const Element ab = A.multiply(a, b);
        if (a.is_zero() || b.is_zero()) continue;
        DegreeVector sum = *da;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += (*db)[k];
        EXPECT_EQ(A.multidegree(ab), sum);
    }
}

TEST(PbwProperty, LocalizedWordsAgree) {
    const Homomorphism& beta = beta_map(3, {{1, 3}, {2, 3}});
    const Presentation& T = beta.target();
    for (int trial = 0; trial < 300; ++trial) {
        Word w(testgen::uniform(0, 6));
        for (auto& l : w) {
            const int g = testgen::uniform(0, T.size() - 1);
            l = {g, T.generator(g).invertible && testgen::uniform(0, 1) ? -1 : 1};
        }
        EXPECT_EQ(reduce_word(T, w, Strategy::Leftmost), T.normal_form(w));
        EXPECT_EQ(reduce_word(T, w, Strategy::Rightmost), T.normal_form(w));
    }
}

TEST(PbwProperty, TextRoundTrip) {
    const Presentation A = oqm_presentation(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Element x = testgen::element(A, 4, 4);
        EXPECT_EQ(parse_element(A, format_element(A, x)), x);
    }
    const Presentation T = oqm_tensor_square(2);
    for (int trial = 0; trial < 50; ++trial) {
        const Element x = comultiply(2, testgen::element(oqm_presentation(2), 3, 3));
        EXPECT_EQ(parse_element(T, format_element(T, x)), x);
    }
}
