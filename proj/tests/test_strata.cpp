#include "expect_error.hpp"
#include "qm/qmatrix.hpp"
#include "qm/strata.hpp"
#include "qm/text.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qm;

namespace {
Element X(int n, int i, int j) { return oqm_presentation(n).gen(xgen(n, i, j)); }

std::set<std::string> key_texts(int n, const StepPair& p) {
    std::set<std::string> s;
    for (const auto& k : krc_keys(n, p)) s.insert(format_minor_key(k));
    return s;
}
}  // namespace

TEST(StepPairs, Enumeration) {
    EXPECT_EQ(enumerate_rc(2, 1).size(), 4u);
    EXPECT_EQ(enumerate_rc(3, 2).size(), 9u);
    EXPECT_EQ(enumerate_rc(4, 2).size(), 36u);
    ASSERT_EQ(enumerate_rc(3, 0).size(), 1u);
    EXPECT_TRUE(enumerate_rc(3, 0)[0].r.empty());
}

TEST(StepPairs, Text) {
    const StepPair p{{1, 3}, {2, 3}};
    EXPECT_EQ(format_step_pair(p), "r=(1,3);c=(2,3)");
    EXPECT_EQ(parse_step_pair("r=(1,3);c=(2,3)", 3), p);
    EXPECT_EQ(format_step_pair({}), "r=();c=()");
    EXPECT_EQ(parse_step_pair(" r = ( ) ; c = ( ) ", 2), StepPair{});
    EXPECT_THROW((void)parse_step_pair("r=(3,1);c=(1,2)", 3), ParseError);
    EXPECT_THROW((void)parse_step_pair("r=(1);c=(1,2)", 3), QmError);
}

TEST(Krc, Examples) {
    EXPECT_EQ(key_texts(2, {{1}, {1}}), (std::set<std::string>{"[1 2|1 2]"}));
    EXPECT_EQ(key_texts(2, {}), (std::set<std::string>{"[1 2|1 2]", "[1|1]", "[1|2]", "[2|1]", "[2|2]"}));
    EXPECT_EQ(key_texts(2, {{2}, {1}}), (std::set<std::string>{"[1 2|1 2]", "[1|1]", "[1|2]"}));
    EXPECT_TRUE(krc_keys(3, {{1, 2, 3}, {1, 2, 3}}).empty());
}

TEST(Krc, Drc) {
    EXPECT_EQ(drc(2, {{1}, {1}}, 1), X(2, 1, 1));
    EXPECT_EQ(drc(2, {{1, 2}, {1, 2}}, 2), quantum_minor(2, {1, 2}, {1, 2}));
    EXPECT_EQ(drc(2, {{1}, {2}}, 0), Element::one());
}

TEST(StepAlgebra, SurvivorPatterns) {
    // the n=4, r=(1,2,4) staircase: column j keeps rows >= r_j, columns beyond t die
    const Presentation R = step_algebra_plus(4, {1, 2, 4}, false);
    EXPECT_EQ(R.size(), 8);
    for (int j = 1; j <= 3; ++j)
        for (int i = 1; i <= 4; ++i) {
            const int rj = std::vector<int>{1, 2, 4}[j - 1];
            EXPECT_EQ(R.find("Y", i, j).has_value(), i >= rj) << i << "," << j;
        }
    EXPECT_FALSE(R.find("Y", 1, 4).has_value());
    const Presentation R1 = step_algebra_plus(2, {1}, true);
    EXPECT_EQ(R1.size(), 2);
    EXPECT_TRUE(R1.generator(R1.index("Y", 1, 1)).invertible);
    EXPECT_FALSE(R1.generator(R1.index("Y", 2, 1)).invertible);
    const Presentation R2 = step_algebra_plus(2, {2}, true);
    EXPECT_EQ(R2.size(), 1);
    EXPECT_TRUE(R2.generator(0).invertible);
    const Presentation M = step_algebra_minus(2, {1}, true);
    EXPECT_TRUE(M.find("Z", 1, 2).has_value());
    EXPECT_FALSE(M.find("Z", 2, 1).has_value());
}

TEST(Beta, Examples) {
    const StepPair p{{1}, {1}};
    const Homomorphism& beta = beta_map(2, p);
    EXPECT_TRUE(beta.apply(quantum_minor(2, {1, 2}, {1, 2})).is_zero());
    const BrcElements b = brc_elements(2, p);
    const Presentation& T = beta.target();
    EXPECT_EQ(b.beta_d[1], T.multiply(T.gen(T.index("Y", 1, 1, 0)), T.gen(T.index("Z", 1, 1, 1))));
    EXPECT_EQ(beta.apply(X(2, 1, 1)), b.beta_d[1]);
    EXPECT_EQ(b.u.at({2, 1}), X(2, 2, 1));
    EXPECT_EQ(b.w.at({1, 2}), X(2, 1, 2));
}

TEST(Beta, KillsKrcUpToN3) {
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t <= n; ++t)
            for (const auto& p : enumerate_rc(n, t))
                for (const auto& k : krc_keys(n, p)) EXPECT_TRUE(beta_map(n, p).apply(quantum_minor(n, k)).is_zero());
}

TEST(Beta, LeadingMinorsSurvive) {
    for (int n = 1; n <= 3; ++n)
        for (int t = 1; t <= n; ++t)
            for (const auto& p : enumerate_rc(n, t))
                for (int l = 1; l <= t; ++l) EXPECT_FALSE(beta_map(n, p).apply(drc(n, p, l)).is_zero());
}

TEST(Stratum, OracleExamples) {
    const StepPair full = stratum_of(3, [](const MinorKey&) { return false; });
    EXPECT_EQ(full, (StepPair{{1, 2, 3}, {1, 2, 3}}));
    const StepPair aug = stratum_of(2, [](const MinorKey& k) { return !k.rows.empty(); });
    EXPECT_EQ(aug, StepPair{});
    const auto catalog = hspec_m2_catalog();
    const Homomorphism k = kappa_map(2, catalog[1]);
    EXPECT_EQ(stratum_of(2, [&](const MinorKey& key) { return k.apply(quantum_minor(2, key)).is_zero(); }),
              (StepPair{{1}, {1}}));
    EXPECT_QM_ERROR((void)stratum_of(2, [](const MinorKey&) { return true; }), ErrorCode::InconsistentOracle);
}

TEST(Stratum, KrcOracleRecoversEveryPair) {
    // K_rc itself, read through beta, lands in the stratum (r,c)
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t <= n; ++t)
            for (const auto& p : enumerate_rc(n, t)) {
                const Homomorphism& beta = beta_map(n, p);
                EXPECT_EQ(stratum_of(n, [&](const MinorKey& key) { return beta.apply(quantum_minor(n, key)).is_zero(); }), p);
            }
}

TEST(HSpec, QAffine) {
    const auto a = hspec_qaffine(step_algebra_plus(2, {1}, true));
    ASSERT_EQ(a.size(), 2u);
    EXPECT_TRUE(a[0].empty());
    EXPECT_EQ(a[1].size(), 1u);
    EXPECT_EQ(hspec_qaffine(step_algebra_plus(2, {2}, true)).size(), 1u);
    EXPECT_QM_ERROR((void)hspec_qaffine(oqm_presentation(2)), ErrorCode::HasCorrections);
}

TEST(HSpec, Counts) {
    EXPECT_EQ(hspec_count(2, 0), 1u);
    EXPECT_EQ(hspec_count(2, 1), 9u);
    EXPECT_EQ(hspec_count(2, 2), 4u);
    EXPECT_EQ(hspec_count(3, 1), 49u);
    EXPECT_FALSE(hspec_count(3, 2).has_value());
    EXPECT_EQ(hspec_count(3, 0), 1u);
}

TEST(HSpec, CatalogShape) {
    const auto c = hspec_m2_catalog();
    ASSERT_EQ(c.size(), 14u);
    const Presentation A = oqm_presentation(2);
    EXPECT_EQ(c[0].known_generators.size(), 4u);
    ASSERT_EQ(c[1].known_generators.size(), 1u);
    EXPECT_EQ(c[1].known_generators[0], quantum_minor(2, {1, 2}, {1, 2}));
    const auto& last = c.back();
    EXPECT_EQ(last.pair, (StepPair{{1, 2}, {1, 2}}));
    std::set<std::string> g;
    for (const auto& e : last.known_generators) g.insert(format_element(A, e));
    EXPECT_EQ(g, (std::set<std::string>{"X[1,2]", "X[2,1]"}));
    for (const auto& e : c) {
        const Homomorphism k = kappa_map(2, e);
        for (const auto& x : e.known_generators) EXPECT_TRUE(k.apply(x).is_zero());
    }
}

TEST(HSpec, KillSetErrors) {
    HPrimeSpec bad{{{1}, {1}}, {{1, 1}}, {}, {}};
    EXPECT_QM_ERROR((void)kappa_map(2, bad), ErrorCode::NonAdmissibleKillSet);
}

TEST(Kernel, DimensionsAtN2) {
    const auto c = hspec_m2_catalog();
    // ker kappa for the (1),(1) entry is <det>: one dimension in degree (1,1;1,1)
    const Homomorphism k = kappa_map(2, c[1]);
    EXPECT_EQ(kernel_dimension(k, {1, 1, 1, 1}), 1u);
    EXPECT_EQ(kernel_dimension(k, {1, 0, 1, 0}), 0u);
    EXPECT_EQ(multidegrees(2, 1).size(), 4u);
    EXPECT_EQ(multidegrees(2, 2).size(), 9u);
}
