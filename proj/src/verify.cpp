#include "qm/verify.hpp"

#include "qm/graded_ideal.hpp"
#include "qm/qmatrix.hpp"
#include "qm/strata.hpp"
#include "qm/text.hpp"
#include "qm/word_rewrite.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <memory>
#include <random>
#include <set>

namespace qm {

namespace {

using L = LaurentInt;
using Clock = std::chrono::steady_clock;

L qp(int k) { return L::q(k); }
L mq(int k) { return L::signed_power(-1, k); }

struct Case {
    std::string description;
    std::function<std::optional<Failure>()> run;
};

using CaseList = std::vector<Case>;

std::string set_text(const IndexSet& s) { return "{" + format_index_set(s) + "}"; }
std::string key_text(const IndexSet& I, const IndexSet& J) { return format_minor_key({I, J}); }

std::string replay_nf(const Presentation& p, int n, const Element& lhs, const Element& rhs) {
    if (!p.same_as(oqm_presentation(n))) return {};
    return "qmcli nf -n " + std::to_string(n) + " \"(" + format_element(p, lhs) + ") - (" + format_element(p, rhs) +
           ")\"";
}

Failure make_failure(const Presentation& p, int n, const std::string& what, const Element& lhs, const Element& rhs) {
    return {what, format_element(p, lhs), format_element(p, rhs), replay_nf(p, n, lhs, rhs), {}};
}

std::optional<Failure> expect_equal(const Presentation& p, int n, const std::string& what, const Element& lhs,
                                    const Element& rhs) {
    if (lhs == rhs) return std::nullopt;
    return make_failure(p, n, what, lhs, rhs);
}

std::optional<Failure> expect_congruent(const GradedIdeal& ideal, int n, const std::string& what, const Element& lhs,
                                        const Element& rhs) {
    const Presentation& p = ideal.ambient();
    const Element diff = lhs - rhs;
    if (diff.is_zero()) return std::nullopt;
    auto fail = [&](const std::string& why) {
        Failure f = make_failure(p, n, what + ": " + why, lhs, rhs);
        for (const Element& g : ideal.generators()) f.ideal.push_back(format_element(p, g));
        f.replay = "qmcli member -n " + std::to_string(n) + " --gens <ideal> --certificate \"" +
                   format_element(p, diff) + "\"";
        return f;
    };
    const auto dl = p.multidegree(lhs);
    const auto dr = p.multidegree(rhs);
    if (!dl || !dr || (!lhs.is_zero() && !rhs.is_zero() && *dl != *dr)) return fail("degree imbalance");
    const MembershipResult res = ideal.contains(diff, true);
    if (!res.member) return fail("difference not in ideal");
    if (!res.certificate || !verify_certificate(ideal, diff, *res.certificate)) return fail("certificate rejected");
    return std::nullopt;
}

std::optional<Failure> expect_congruent(const Presentation& p, int n, const std::string& what, const Element& lhs,
                                        const Element& rhs, const std::vector<Element>& gens) {
    if (gens.empty()) return expect_equal(p, n, what, lhs, rhs);
    if (lhs == rhs) return std::nullopt;
    return expect_congruent(GradedIdeal(p, gens), n, what, lhs, rhs);
}

// Several identities in one case: the first failure wins.
template <class... F>
std::optional<Failure> first_failure(F&&... checks) {
    std::optional<Failure> out;
    ((out ? void() : void(out = checks())), ...);
    return out;
}

std::vector<IndexSet> all_subsets(int n, int min_size = 0) {
    std::vector<IndexSet> out;
    for (int k = min_size; k <= n; ++k)
        for (auto& s : subsets(n, k)) out.push_back(std::move(s));
    return out;
}

int sgn(int x) { return (x > 0) - (x < 0); }

// ----------------------------------------------------------------- S1

std::string word_text(const Presentation& p, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += '*';
        out += p.generator(w[k].first).name();
        if (p.slot_count() > 1) out += "@" + std::to_string(p.generator(w[k].first).slot);
        if (w[k].second < 0) out += "^-1";
    }
    return out;
}

Case word_case(const Presentation& p, int n, Word w) {
    std::string desc = "word " + word_text(p, w);
    return {desc, [p, n, w, desc]() -> std::optional<Failure> {
                const Element engine = p.normal_form(w);
                const Element left = reduce_word(p, w, Strategy::Leftmost);
                const Element right = reduce_word(p, w, Strategy::Rightmost);
                auto out = first_failure([&] { return expect_equal(p, n, desc + " leftmost", left, engine); },
                                         [&] { return expect_equal(p, n, desc + " rightmost", right, engine); });
                if (out) {
                    if (p.same_as(oqm_presentation(n)))
                        out->replay = "qmcli nf -n " + std::to_string(n) + " \"" + word_text(p, w) + "\"";
                    return out;
                }
                DegreeVector want(p.grading_rank(), 0);
                for (const auto& [g, s] : w)
                    for (int k = 0; k < p.grading_rank(); ++k) want[k] += s * p.generator(g).degree[k];
                const auto got = p.multidegree(engine);
                if (!engine.is_zero() && (!got || *got != want))
                    return Failure{desc + " degree", format_element(p, engine), "homogeneous of the word's degree", {}, {}};
                return std::nullopt;
            }};
}

CaseList s1(int n, const RunOptions& o) {
    CaseList cases;
    std::mt19937_64 rng(o.seed);
    const Presentation A = oqm_presentation(n);
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<int> gen(0, A.size() - 1);
    for (int k = 0; k < o.words; ++k) {
        Word w(len(rng));
        for (auto& l : w) l = {gen(rng), 1};
        cases.push_back(word_case(A, n, std::move(w)));
    }
    // localized words in a step-algebra tensor, inverse letters on pivots
    if (n >= 2) {
        const StepPair p{{1, 2}, {1, 2}};
        const Presentation T = beta_map(n, p).target();
        std::uniform_int_distribution<int> tg(0, T.size() - 1);
        std::bernoulli_distribution flip(0.5);
        for (int k = 0; k < o.words / 5; ++k) {
            Word w(len(rng));
            for (auto& l : w) {
                const int g = tg(rng);
                l = {g, T.generator(g).invertible && flip(rng) ? -1 : 1};
            }
            cases.push_back(word_case(T, n, std::move(w)));
        }
    }
    return cases;
}

// ----------------------------------------------------------------- S2, S3

CaseList s2(int n, const RunOptions&) {
    CaseList cases;
    for (int m = 1; m <= n; ++m) {
        for (const auto& I : all_subsets(m, 1))
            for (const auto& J : subsets(m, static_cast<int>(I.size()))) {
                const std::string desc = "n=" + std::to_string(m) + " " + key_text(I, J);
                cases.push_back({desc, [m, I, J, desc]() -> std::optional<Failure> {
                                     const Presentation A = oqm_presentation(m);
                                     const Element rec = quantum_minor(m, I, J);
                                     const Element perm = quantum_minor_perm(m, I, J);
                                     if (auto f = expect_equal(A, m, desc + " recursion vs permutation sum", rec, perm))
                                         return f;
                                     DegreeVector want(2 * m, 0);
                                     for (int i : I) want[i - 1] = 1;
                                     for (int j : J) want[m + j - 1] = 1;
                                     if (A.multidegree(rec) != want)
                                         return Failure{desc + " multidegree", format_element(A, rec), "", {}, {}};
                                     if (m > 3) return std::nullopt;
                                     for (int i : I)
                                         for (int j : J) {
                                             const Element x = A.gen(xgen(m, i, j));
                                             if (auto f = expect_equal(A, m, desc + " commutes with " + A.generator(xgen(m, i, j)).name(),
                                                                       A.multiply(x, rec), A.multiply(rec, x)))
                                                 return f;
                                         }
                                     return std::nullopt;
                                 }});
            }
    }
    return cases;
}

CaseList s3(int n, const RunOptions&) {
    CaseList cases;
    for (const auto& I : all_subsets(n, 1))
        for (const auto& J : subsets(n, static_cast<int>(I.size()))) {
            const std::string desc = "Delta " + key_text(I, J);
            cases.push_back({desc, [n, I, J, desc] {
                                 const Presentation T = oqm_tensor_square(n);
                                 const Element lhs = comultiply(n, quantum_minor(n, I, J));
                                 Element rhs;
                                 for (const auto& K : subsets(n, static_cast<int>(I.size())))
                                     rhs += T.multiply(embed(quantum_minor(n, I, K), 0),
                                                       embed(quantum_minor(n, K, J), n * n));
                                 return expect_equal(T, n, desc, lhs, rhs);
                             }});
        }
    return cases;
}

// ----------------------------------------------------------------- S4

CaseList s4(int n, const RunOptions&) {
    CaseList cases;
    const Presentation A = oqm_presentation(n);
    auto X = [A, n](int i, int j) { return A.gen(xgen(n, i, j)); };
    auto M = [n](const IndexSet& I, const IndexSet& J) { return quantum_minor(n, I, J); };
    for (const auto& I : all_subsets(n, 1))
        for (const auto& J : subsets(n, static_cast<int>(I.size())))
            for (int r = 1; r <= n; ++r)
                for (int c = 1; c <= n; ++c) {
                    const bool rin = contains(I, r);
                    const bool cin = contains(J, c);
                    const std::string at = " r=" + std::to_string(r) + " c=" + std::to_string(c) + " " + key_text(I, J);
                    if (rin && cin) {
                        cases.push_back({"(a)" + at, [=] {
                                             return expect_equal(A, n, "(a)" + at, A.multiply(X(r, c), M(I, J)),
                                                                 A.multiply(M(I, J), X(r, c)));
                                         }});
                    } else if (rin) {
                        const IndexSet Jp = with(J, c);
                        cases.push_back({"(b1)" + at, [=] {
                                             const Element lhs = A.multiply(X(r, c), M(I, J)) -
                                                                 qp(-1) * A.multiply(M(I, J), X(r, c));
                                             Element sum;
                                             for (int j : J)
                                                 if (j > c)
                                                     sum += mq(-count_between(J, c, true, j, true)) *
                                                            A.multiply(M(I, without(Jp, j)), X(r, j));
                                             return expect_equal(A, n, "(b1)" + at, lhs, (qp(-1) - qp(1)) * sum);
                                         }});
                        cases.push_back({"(b2)" + at, [=] {
                                             const Element lhs = A.multiply(M(I, J), X(r, c)) -
                                                                 qp(1) * A.multiply(X(r, c), M(I, J));
                                             Element sum;
                                             for (int j : J)
                                                 if (j > c)
                                                     sum += mq(count_between(J, c, true, j, true)) *
                                                            A.multiply(X(r, j), M(I, without(Jp, j)));
                                             return expect_equal(A, n, "(b2)" + at, lhs, (qp(1) - qp(-1)) * sum);
                                         }});
                    } else if (cin) {
                        const IndexSet Ip = with(I, r);
                        cases.push_back({"(c1)" + at, [=] {
                                             const Element lhs = A.multiply(X(r, c), M(I, J)) -
                                                                 qp(-1) * A.multiply(M(I, J), X(r, c));
                                             Element sum;
                                             for (int i : I)
                                                 if (i > r)
                                                     sum += mq(-count_between(I, r, true, i, true)) *
                                                            A.multiply(M(without(Ip, i), J), X(i, c));
                                             return expect_equal(A, n, "(c1)" + at, lhs, (qp(-1) - qp(1)) * sum);
                                         }});
                        cases.push_back({"(c2)" + at, [=] {
                                             const Element lhs = A.multiply(M(I, J), X(r, c)) -
                                                                 qp(1) * A.multiply(X(r, c), M(I, J));
                                             Element sum;
                                             for (int i : I)
                                                 if (i > r)
                                                     sum += mq(count_between(I, r, true, i, true)) *
                                                            A.multiply(X(i, c), M(without(Ip, i), J));
                                             return expect_equal(A, n, "(c2)" + at, lhs, (qp(1) - qp(-1)) * sum);
                                         }});
                    }
                }
    return cases;
}

// ----------------------------------------------------------------- S5

CaseList s5(int n, const RunOptions&) {
    CaseList cases;
    const Presentation A = oqm_presentation(n);
    auto M = [n](const IndexSet& I, const IndexSet& J) { return quantum_minor(n, I, J); };
    for (const auto& U : all_subsets(n, 2))
        for (const auto& V : subsets(n, static_cast<int>(U.size())))
            for (int u1 : U)
                for (int u2 : U)
                    for (int v1 : V)
                        for (int v2 : V) {
                            const IndexSet U1 = without(U, u1), U2 = without(U, u2);
                            const IndexSet V1 = without(V, v1), V2 = without(V, v2);
                            const std::string at = " " + key_text(U, V) + " u=" + std::to_string(u1) + "," +
                                                   std::to_string(u2) + " v=" + std::to_string(v1) + "," +
                                                   std::to_string(v2);
                            // (a) and (b) do not depend on the unused index; take it equal to its partner
                            if (u1 < u2 && v1 == v2)
                                cases.push_back({"(a)" + at, [=] {
                                                     return expect_equal(A, n, "(a)" + at, A.multiply(M(U1, V1), M(U2, V1)),
                                                                         qp(-1) * A.multiply(M(U2, V1), M(U1, V1)));
                                                 }});
                            if (v1 < v2 && u1 == u2)
                                cases.push_back({"(b)" + at, [=] {
                                                     return expect_equal(A, n, "(b)" + at, A.multiply(M(U1, V1), M(U1, V2)),
                                                                         qp(-1) * A.multiply(M(U1, V2), M(U1, V1)));
                                                 }});
                            if (u1 < u2 && v1 > v2)
                                cases.push_back({"(c)" + at, [=] {
                                                     return expect_equal(A, n, "(c)" + at, A.multiply(M(U1, V1), M(U2, V2)),
                                                                         A.multiply(M(U2, V2), M(U1, V1)));
                                                 }});
                            if (u1 < u2 && v1 < v2)
                                cases.push_back({"(d)" + at, [=] {
                                                     return expect_equal(
                                                         A, n, "(d)" + at,
                                                         A.multiply(M(U1, V1), M(U2, V2)) - A.multiply(M(U2, V2), M(U1, V1)),
                                                         (qp(-1) - qp(1)) * A.multiply(M(U2, V1), M(U1, V2)));
                                                 }});
                        }
    return cases;
}

// ----------------------------------------------------------------- S6

CaseList s6(int n, const RunOptions&) {
    CaseList cases;
    const Presentation A = oqm_presentation(n);
    auto M = [n](const IndexSet& I, const IndexSet& J) { return quantum_minor(n, I, J); };
    auto X = [A, n](int i, int j) { return A.gen(xgen(n, i, j)); };
    const auto sets = all_subsets(n);
    // q-Laplace along rows (a) and columns (b)
    for (const auto& I : all_subsets(n, 1))
        for (const auto& J1 : sets)
            for (const auto& J2 : sets) {
                if (J1.size() + J2.size() != I.size()) continue;
                const std::string at = " I=" + set_text(I) + " J1=" + set_text(J1) + " J2=" + set_text(J2);
                auto laplace = [=](bool rows) {
                    Element lhs;
                    for (const auto& I1 : subsets_of(I, static_cast<int>(J1.size()))) {
                        const IndexSet I2 = set_minus(I, I1);
                        lhs += mq(inversion_count(I1, I2)) *
                               (rows ? A.multiply(M(I1, J1), M(I2, J2)) : A.multiply(M(J1, I1), M(J2, I2)));
                    }
                    Element rhs;
                    if (set_intersection(J1, J2).empty()) {
                        const IndexSet J = set_union(J1, J2);
                        rhs = mq(inversion_count(J1, J2)) * (rows ? M(I, J) : M(J, I));
                    }
                    return expect_equal(A, n, (rows ? "laplace(a)" : "laplace(b)") + at, lhs, rhs);
                };
                cases.push_back({"laplace(a)" + at, [=] { return laplace(true); }});
                cases.push_back({"laplace(b)" + at, [=] { return laplace(false); }});
            }
    // single row and column expansions
    for (const auto& I : all_subsets(n, 1))
        for (const auto& J : subsets(n, static_cast<int>(I.size()) - 1))
            for (int c = 1; c <= n; ++c) {
                const std::string at = " I=" + set_text(I) + " J=" + set_text(J) + " k=" + std::to_string(c);
                const bool in = contains(J, c);
                // (a1),(a2): expand along rows of I against column c; (b1),(b2) are the transposes
                cases.push_back({"expansion(a1)" + at, [=] {
                                     Element lhs;
                                     for (int i : I)
                                         lhs += mq(count_between(I, 1, true, i, false)) * A.multiply(X(i, c), M(without(I, i), J));
                                     const Element rhs = in ? Element() : mq(count_between(J, 1, true, c, false)) * M(I, with(J, c));
                                     return expect_equal(A, n, "expansion(a1)" + at, lhs, rhs);
                                 }});
                cases.push_back({"expansion(a2)" + at, [=] {
                                     Element lhs;
                                     for (int i : I)
                                         lhs += mq(count_between(I, i, false, n, true)) * A.multiply(M(without(I, i), J), X(i, c));
                                     const Element rhs = in ? Element() : mq(count_between(J, c, false, n, true)) * M(I, with(J, c));
                                     return expect_equal(A, n, "expansion(a2)" + at, lhs, rhs);
                                 }});
                // transposed roles: column set I, row set J, row index c
                cases.push_back({"expansion(b1)" + at, [=] {
                                     Element lhs;
                                     for (int j : I)
                                         lhs += mq(count_between(I, 1, true, j, false)) * A.multiply(X(c, j), M(J, without(I, j)));
                                     const Element rhs = in ? Element() : mq(count_between(J, 1, true, c, false)) * M(with(J, c), I);
                                     return expect_equal(A, n, "expansion(b1)" + at, lhs, rhs);
                                 }});
                cases.push_back({"expansion(b2)" + at, [=] {
                                     Element lhs;
                                     for (int j : I)
                                         lhs += mq(count_between(I, j, false, n, true)) * A.multiply(M(J, without(I, j)), X(c, j));
                                     const Element rhs = in ? Element() : mq(count_between(J, c, false, n, true)) * M(with(J, c), I);
                                     return expect_equal(A, n, "expansion(b2)" + at, lhs, rhs);
                                 }});
            }
    return cases;
}

// ----------------------------------------------------------------- S7

CaseList s7(int n, const RunOptions&) {
    CaseList cases;
    const Presentation A = oqm_presentation(n);
    auto M = [n](const IndexSet& I, const IndexSet& J) { return quantum_minor(n, I, J); };
    const auto sets = all_subsets(n);
    for (const auto& U : all_subsets(n, 1))
        for (const auto& V : subsets(n, static_cast<int>(U.size())))
            for (const auto& I : sets) {
                if (!std::includes(U.begin(), U.end(), I.begin(), I.end())) continue;
                const IndexSet K = set_minus(U, I);
                const int want = 2 * static_cast<int>(I.size()) + static_cast<int>(K.size());
                for (const auto& J1 : sets)
                    for (const auto& J2 : sets) {
                        const int s1 = static_cast<int>(J1.size()), s2 = static_cast<int>(J2.size());
                        if (s1 + s2 != want || s1 < static_cast<int>(I.size()) || s2 < static_cast<int>(I.size())) continue;
                        if (!std::includes(V.begin(), V.end(), J1.begin(), J1.end()) ||
                            !std::includes(V.begin(), V.end(), J2.begin(), J2.end()))
                            continue;
                        const std::string at = " " + key_text(U, V) + " I=" + set_text(I) + " J1=" + set_text(J1) +
                                               " J2=" + set_text(J2);
                        // rows == true: statement (a); false: (b) with rows and columns exchanged
                        auto check = [=](bool rows) {
                            auto mm = [&](const IndexSet& a, const IndexSet& b) { return rows ? M(a, b) : M(b, a); };
                            Element lhs;
                            for (const auto& K1 : subsets_of(K, s1 - static_cast<int>(I.size()))) {
                                const IndexSet K2 = set_minus(K, K1);
                                const int e = inversion_count(I, K1) + inversion_count(K1, set_union(K2, I));
                                lhs += mq(e) * A.multiply(mm(set_union(I, K1), J1), mm(set_union(K2, I), J2));
                            }
                            const IndexSet both = set_intersection(J1, J2);
                            const IndexSet only = set_minus(J1, J2);
                            Element rhs;
                            if (both.size() == I.size())
                                rhs = mq(inversion_count(both, only) + inversion_count(only, J2)) *
                                      A.multiply(mm(I, both), mm(U, V));
                            return expect_equal(A, n, (rows ? "(a)" : "(b)") + at, lhs, rhs);
                        };
                        cases.push_back({"(a)" + at, [=] { return check(true); }});
                        cases.push_back({"(b)" + at, [=] { return check(false); }});
                    }
            }
    return cases;
}

// ----------------------------------------------------------------- S8

CaseList s8(int n, const RunOptions&) {
    CaseList cases;
    const Presentation A = oqm_presentation(n);
    for (const auto& I : all_subsets(n, 1))
        for (const auto& J : subsets(n, static_cast<int>(I.size())))
            for (int r = I.back() + 1; r <= n; ++r)
                for (int c = J.back() + 1; c <= n; ++c) {
                    const std::string at = key_text(I, J) + " r=" + std::to_string(r) + " c=" + std::to_string(c);
                    cases.push_back({at, [=] {
                                         const Element m = quantum_minor(n, I, J);
                                         const Element x = A.gen(xgen(n, r, c));
                                         return expect_equal(A, n, at, A.multiply(m, x) - qp(2) * A.multiply(x, m),
                                                             (L(1) - qp(2)) * quantum_minor(n, with(I, r), with(J, c)));
                                     }});
                }
    return cases;
}

// ----------------------------------------------------------------- S9

// Minor commutation by rows, then by columns. With columns the roles of
// rows and columns are exchanged throughout.
CaseList s9(int n, bool membership) {
    CaseList cases;
    const Presentation A = oqm_presentation(n);
    for (int pass = 0; pass < 2; ++pass) {
        const bool rows = pass == 0;
        auto mm = [n, rows](const IndexSet& a, const IndexSet& b) {
            return rows ? quantum_minor(n, a, b) : quantum_minor(n, b, a);
        };
        const std::string tag = rows ? "rows" : "cols";
        for (const auto& Ip : all_subsets(n, 1)) {
            const int b = Ip.back();
            for (const auto& I : all_subsets(n)) {
                if (I.size() >= Ip.size() || contains(I, b) || !std::includes(Ip.begin(), Ip.end(), I.begin(), I.end()))
                    continue;
                for (const auto& Jp : subsets(n, static_cast<int>(Ip.size())))
                    for (const auto& J : subsets_of(Jp, static_cast<int>(I.size()) + 1))
                        for (int a = 1; a <= n; ++a) {
                            if (contains(Ip, a)) continue;
                            const std::string at = " " + tag + (rows ? " I=" : " J=") + set_text(I) + " a=" +
                                                   std::to_string(a) + (rows ? " J=" : " I=") + set_text(J) +
                                                   (rows ? " I'=" : " J'=") + set_text(Ip) + (rows ? " J'=" : " I'=") +
                                                   set_text(Jp);
                            if (a > b) {
                                if (membership) continue;
                                cases.push_back({"(a)" + at, [=] {
                                                     const Element Mx = mm(with(I, a), J), N = mm(Ip, Jp);
                                                     return expect_equal(A, n, "(a)" + at, A.multiply(Mx, N),
                                                                         qp(-1) * A.multiply(N, Mx));
                                                 }});
                                continue;
                            }
                            std::vector<int> between;
                            for (int i : Ip)
                                if (i > a && i < b) between.push_back(i);
                            if (membership == between.empty()) continue;
                            cases.push_back({"(b)" + at, [=] {
                                                 const Element Mx = mm(with(I, a), J), N = mm(Ip, Jp);
                                                 const Element lhs = A.multiply(Mx, N) - qp(-1) * A.multiply(N, Mx);
                                                 const int e = count_between(set_minus(Ip, I), a, false, b, false);
                                                 const Element rhs = L::qhat() * mq(e) *
                                                                     A.multiply(mm(with(I, b), J), mm(without(with(Ip, a), b), Jp));
                                                 std::vector<Element> gens;
                                                 for (int i : between) gens.push_back(mm(without(with(Ip, a), i), Jp));
                                                 return expect_congruent(A, n, "(b)" + at, lhs, rhs, gens);
                                             }});
                        }
            }
        }
    }
    return cases;
}

CaseList s9_all(int n, const RunOptions&) {
    CaseList c = s9(n, false);
    CaseList m = s9(n, true);
    c.insert(c.end(), std::make_move_iterator(m.begin()), std::make_move_iterator(m.end()));
    return c;
}

CaseList s9_exact(int n, const RunOptions&) { return s9(n, false); }

// ----------------------------------------------------------------- S10

CaseList s10(int n, const RunOptions&) {
    CaseList cases;
    const Presentation A = oqm_presentation(n);
    for (const auto& I : all_subsets(n, 1))
        for (const auto& J : subsets(n, static_cast<int>(I.size())))
            for (int r = 1; r <= n; ++r)
                for (int c = 1; c <= n; ++c) {
                    if (r > I.back() && c > J.back()) continue;
                    const std::string at = key_text(I, J) + " r=" + std::to_string(r) + " c=" + std::to_string(c);
                    cases.push_back({at, [=] {
                                         const Element m = quantum_minor(n, I, J);
                                         const Element x = A.gen(xgen(n, r, c));
                                         const int e = 2 - (contains(I, r) ? 1 : 0) - (contains(J, c) ? 1 : 0);
                                         std::vector<Element> gens;
                                         for (const auto& I2 : subsets(n, static_cast<int>(I.size())))
                                             for (const auto& J2 : subsets(n, static_cast<int>(I.size())))
                                                 if (indexset_less(I2, I) || indexset_less(J2, J))
                                                     gens.push_back(quantum_minor(n, I2, J2));
                                         return expect_congruent(A, n, at, A.multiply(m, x), qp(e) * A.multiply(x, m), gens);
                                     }});
                }
    return cases;
}

// ----------------------------------------------------------------- S11, S12

std::vector<StepPair> all_pairs(int n) {
    std::vector<StepPair> out;
    for (int t = 0; t <= n; ++t)
        for (auto& p : enumerate_rc(n, t)) out.push_back(std::move(p));
    return out;
}

CaseList s11(int n, const RunOptions&) {
    CaseList cases;
    for (int m = 1; m <= n; ++m)
        for (const auto& p : all_pairs(m))
            for (const auto& key : krc_keys(m, p)) {
                const std::string at = "n=" + std::to_string(m) + " " + format_step_pair(p) + " " + format_minor_key(key);
                cases.push_back({at, [=] {
                                     const Homomorphism& beta = beta_map(m, p);
                                     return expect_equal(beta.target(), m, at, beta.apply(quantum_minor(m, key)), Element());
                                 }});
            }
    return cases;
}

CaseList s12(int n, const RunOptions&) {
    CaseList cases;
    for (int m = 1; m <= n; ++m)
        for (const auto& p : all_pairs(m)) {
            const int t = p.t();
            if (t == 0) continue;
            const std::string at = "n=" + std::to_string(m) + " " + format_step_pair(p);
            cases.push_back({at, [=]() -> std::optional<Failure> {
                                 const Homomorphism& beta = beta_map(m, p);
                                 const Presentation& T = beta.target();
                                 const BrcElements b = brc_elements(m, p);
                                 auto Y = [&](int i, int j) { return T.gen(T.index("Y", i, j, 0)); };
                                 auto Z = [&](int i, int j) { return T.gen(T.index("Z", i, j, 1)); };
                                 for (int l = 1; l <= t; ++l) {
                                     const std::string dl = at + " d_" + std::to_string(l);
                                     if (auto f = expect_equal(T, m, dl, beta.apply(drc(m, p, l)), b.beta_d[l])) return f;
                                 }
                                 for (const auto& [pos, u] : b.u) {
                                     const auto [i, l] = pos;
                                     const std::string what = at + " u[" + std::to_string(i) + "," + std::to_string(l) + "]";
                                     if (auto f = expect_equal(T, m, what, beta.apply(u),
                                                               T.multiply(b.beta_d[l - 1], T.multiply(Y(i, l), Z(l, p.c[l - 1])))))
                                         return f;
                                 }
                                 for (const auto& [pos, w] : b.w) {
                                     const auto [l, j] = pos;
                                     const std::string what = at + " w[" + std::to_string(l) + "," + std::to_string(j) + "]";
                                     if (auto f = expect_equal(T, m, what, beta.apply(w),
                                                               T.multiply(b.beta_d[l - 1], T.multiply(Y(p.r[l - 1], l), Z(l, j)))))
                                         return f;
                                 }
                                 for (int l = 1; l <= t; ++l) {
                                     const int rl = p.r[l - 1], cl = p.c[l - 1];
                                     const Element inv = T.unit_inverse(b.pivot[l - 1]);
                                     for (int i = rl; i <= m; ++i)
                                         for (int j = cl; j <= m; ++j) {
                                             const std::string what = at + " Y[" + std::to_string(i) + "," + std::to_string(l) +
                                                                      "]@Z[" + std::to_string(l) + "," + std::to_string(j) + "]";
                                             const Element lhs = T.multiply(Y(i, l), Z(l, j));
                                             const Element rhs = qp(j == cl ? 0 : 1) *
                                                                 T.multiply({inv, T.multiply(Y(rl, l), Z(l, j)),
                                                                             T.multiply(Y(i, l), Z(l, cl))});
                                             if (auto f = expect_equal(T, m, what, lhs, rhs)) return f;
                                         }
                                 }
                                 return std::nullopt;
                             }});
        }
    return cases;
}

// ----------------------------------------------------------------- S13

// e with P*X[a,b] = q^e X[a,b]*P for the pivot P = X[pa,pb], read off the
// defining relations (mixed pairs with a correction commute once the
// correction's factors are killed, which holds for every survivor pair).
int pivot_eigen(int pa, int pb, int a, int b) {
    return (a == pa ? sgn(b - pb) : 0) + (b == pb ? sgn(a - pa) : 0);
}

std::optional<Failure> expect_eigen(const Presentation& P, int n, const std::string& what, const Element& u,
                                    const Element& x, int e) {
    const Element conj = P.multiply({u, x, P.unit_inverse(u)});
    return expect_equal(P, n, what, conj, qp(e) * x);
}

CaseList s13(int n, const RunOptions&) {
    CaseList cases;
    for (const auto& p : all_pairs(n)) {
        const int t = p.t();
        if (t == 0) continue;
        const std::string at = format_step_pair(p);
        // pivot eigenvalues in each step algebra and in the tensor target
        cases.push_back({at + " eigenvalues", [=]() -> std::optional<Failure> {
                             const Presentation plus = step_algebra_plus(n, p.r, true);
                             const Presentation minus = step_algebra_minus(n, p.c, true);
                             const Presentation& T = beta_map(n, p).target();
                             const BrcElements b = brc_elements(n, p);
                             const int off = plus.size();
                             auto stated_fail = [&](const std::string& what, int stated, int oracle) {
                                 return Failure{at + " " + what + ": stated exponent " + std::to_string(stated) +
                                                    " vs relation exponent " + std::to_string(oracle),
                                                "", "", {}, {}};
                             };
                             for (int s = 1; s <= t; ++s) {
                                 const int rs = p.r[s - 1], cs = p.c[s - 1];
                                 const Element ypiv = plus.gen("Y", rs, s);
                                 const Element zpiv = minus.gen("Z", s, cs);
                                 const Element zpivT = T.gen(T.index("Z", s, cs, 1));
                                 const std::string ss = " s=" + std::to_string(s);
                                 for (const auto& [pos, y] : b.y) {
                                     const auto [i, j] = pos;
                                     const int oracle = pivot_eigen(rs, s, i, j) - pivot_eigen(rs, s, p.r[j - 1], j);
                                     const int stated = i == rs ? -1 : (j == s ? 1 : 0);
                                     const std::string what = "y[" + std::to_string(i) + "," + std::to_string(j) + "]" + ss;
                                     if (stated != oracle) return stated_fail(what, stated, oracle);
                                     if (auto f = expect_eigen(plus, n, at + " pivot " + what, ypiv, y, stated)) return f;
                                     if (auto f = expect_eigen(T, n, at + " zpivot " + what, zpivT, embed(y, 0), 0)) return f;
                                     if (auto f = expect_eigen(T, n, at + " dpivot " + what, b.pivot[s - 1], embed(y, 0), stated))
                                         return f;
                                 }
                                 for (const auto& [pos, z] : b.z) {
                                     const auto [l, m] = pos;
                                     const int oracle = pivot_eigen(s, cs, l, m) - pivot_eigen(s, cs, l, p.c[l - 1]);
                                     const int stated = l == s ? 1 : (m == cs ? -1 : 0);
                                     const std::string what = "z[" + std::to_string(l) + "," + std::to_string(m) + "]" + ss;
                                     if (stated != oracle) return stated_fail(what, stated, oracle);
                                     if (auto f = expect_eigen(minus, n, at + " pivot " + what, zpiv, z, stated)) return f;
                                     if (auto f = expect_eigen(T, n, at + " zpivot " + what, zpivT, embed(z, off), stated)) return f;
                                     if (auto f = expect_eigen(T, n, at + " dpivot " + what, b.pivot[s - 1], embed(z, off), stated))
                                         return f;
                                 }
                                 for (int s2 = 1; s2 <= t; ++s2) {
                                     const std::string what = "pivot " + std::to_string(s2) + ss;
                                     if (auto f = expect_eigen(T, n, at + " zpivot " + what, zpivT, b.pivot[s2 - 1], 0)) return f;
                                     if (auto f = expect_eigen(T, n, at + " dpivot " + what, b.pivot[s - 1], b.pivot[s2 - 1], 0))
                                         return f;
                                 }
                                 // generators of B: Y[i,l]@Z[l,j]
                                 for (int l = 1; l <= t; ++l)
                                     for (int i = p.r[l - 1]; i <= n; ++i)
                                         for (int j = p.c[l - 1]; j <= n; ++j) {
                                             const Element g = T.multiply(T.gen(T.index("Y", i, l, 0)), T.gen(T.index("Z", l, j, 1)));
                                             const std::string what = "Y[" + std::to_string(i) + "," + std::to_string(l) + "]@Z[" +
                                                                      std::to_string(l) + "," + std::to_string(j) + "]" + ss;
                                             if (auto f = expect_eigen(T, n, at + " zpivot " + what, zpivT, g, pivot_eigen(s, cs, l, j)))
                                                 return f;
                                         }
                             }
                             return std::nullopt;
                         }});
    }
    // d_s against d_{s-1} conjugates, modulo K_rc, up to n = 3
    const int n7 = std::min(n, 3);
    for (const auto& p : all_pairs(n7)) {
        const int t = p.t();
        if (t == 0) continue;
        auto K = std::make_shared<GradedIdeal>(krc_generators(n7, p));
        const BrcElements b = brc_elements(n7, p);
        const Presentation A = oqm_presentation(n7);
        for (int s = 1; s <= t; ++s) {
            const int rs = p.r[s - 1], cs = p.c[s - 1];
            auto add = [&](const std::string& what, const Element& x, int k) {
                const std::string at = "dd n=" + std::to_string(n7) + " " + format_step_pair(p) + " s=" + std::to_string(s) +
                                       " " + what;
                cases.push_back({at, [=] {
                                     const Element ds = drc(n7, p, s), d0 = drc(n7, p, s - 1);
                                     return expect_congruent(*K, n7, at, A.multiply({ds, x, d0}),
                                                             qp(k) * A.multiply({d0, x, ds}));
                                 }});
            };
            for (const auto& [pos, u] : b.u) {
                const auto [i, j] = pos;
                if (i == p.r[j - 1]) continue;
                add("u[" + std::to_string(i) + "," + std::to_string(j) + "]", u, i == rs ? -1 : (j == s ? 1 : 0));
            }
            for (const auto& [pos, w] : b.w) {
                const auto [l, m] = pos;
                if (m == p.c[l - 1]) continue;
                add("w[" + std::to_string(l) + "," + std::to_string(m) + "]", w, l == s ? 1 : (m == cs ? -1 : 0));
            }
        }
    }
    return cases;
}

// ----------------------------------------------------------------- S14

CaseList s14(int n, const RunOptions&) {
    CaseList cases;
    std::set<IndexSet> seen;
    for (const auto& p : all_pairs(n)) {
        if (p.t() == 0 || !seen.insert(p.r).second) continue;
        const IndexSet r = p.r;
        const std::string at = "r=(" + format_index_set(r) + ")";
        cases.push_back({at, [=]() -> std::optional<Failure> {
                             const Presentation R = step_algebra_plus(n, r, true);
                             std::map<Position, Element> y;
                             for (int j = 1; j <= static_cast<int>(r.size()); ++j)
                                 for (int i = r[j - 1] + 1; i <= n; ++i)
                                     y[{i, j}] = R.multiply(R.gen("Y", i, j), R.gen("Y", r[j - 1], j, -1));
                             auto Y = [&](int i, int j) -> const Element& { return y.at({i, j}); };
                             for (const auto& [p1, a] : y)
                                 for (const auto& [p2, c] : y) {
                                     const auto [i, j] = p1;
                                     const auto [l, m] = p2;
                                     const std::string what = at + " y[" + std::to_string(i) + "," + std::to_string(j) +
                                                              "] y[" + std::to_string(l) + "," + std::to_string(m) + "]";
                                     const Element lhs = R.multiply(a, c);
                                     Element rhs;
                                     if (i == l && j < m) {
                                         rhs = qp(1) * R.multiply(c, a);
                                     } else if (j == m && i < l) {
                                         rhs = qp(1) * R.multiply(c, a);
                                     } else if (i < l && j > m) {
                                         rhs = R.multiply(c, a);
                                     } else if (i < l && j < m) {
                                         const int rm = r[m - 1];
                                         if (i < rm)
                                             rhs = R.multiply(c, a);
                                         else if (i == rm)
                                             rhs = qp(-1) * R.multiply(c, a) + L::qhat() * Y(l, j);
                                         else
                                             rhs = R.multiply(c, a) + L::qhat() * R.multiply(Y(i, m), Y(l, j));
                                     } else {
                                         continue;
                                     }
                                     if (auto f = expect_equal(R, n, what, lhs, rhs)) return f;
                                 }
                             return std::nullopt;
                         }});
    }
    return cases;
}

// ----------------------------------------------------------------- S15

bool in_seq(const IndexSet& seq, int from, int to, int x) {
    for (int k = from; k <= to; ++k)
        if (seq[k - 1] == x) return true;
    return false;
}

CaseList s15(int n, const RunOptions&) {
    CaseList cases;
    const Presentation A = oqm_presentation(n);
    for (const auto& p : all_pairs(n)) {
        const int t = p.t();
        if (t == 0) continue;
        auto K = std::make_shared<GradedIdeal>(krc_generators(n, p));
        const BrcElements b = brc_elements(n, p);
        const std::string pp = format_step_pair(p) + " ";
        auto idx = [](const char* s, int i, int j) {
            return std::string(s) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
        };
        // exact == true: equality in A; otherwise congruence mod K_rc
        auto add = [&](const std::string& at, Element lhs, Element rhs, bool exact) {
            cases.push_back({at, [=] {
                                 return exact ? expect_equal(A, n, at, lhs, rhs) : expect_congruent(*K, n, at, lhs, rhs);
                             }});
        };
        for (const auto& [pa, ua] : b.u)
            for (const auto& [pb, ub] : b.u) {
                const auto [i, j] = pa;
                const auto [l, m] = pb;
                if (pa == pb) continue;
                const std::string at = pp + idx("u", l, m) + " " + idx("u", i, j);
                // u against u
                if (i < l && j >= m) {
                    add("uu " + at, A.multiply(ub, ua), qp(-1) * A.multiply(ua, ub), true);
                } else if (i <= l && j < m && (in_seq(p.r, j, m - 1, i) || i == l)) {
                    add("uu " + at, A.multiply(ub, ua), A.multiply(ua, ub), true);
                } else if (i < l && j < m) {
                    // same, modulo K_rc
                    const Element lhs = A.multiply(ua, ub) - qp(-1) * A.multiply(ub, ua);
                    Element rhs;
                    if (i >= p.r[m - 1]) rhs = L::qhat() * A.multiply(b.u.at({l, j}), b.u.at({i, m}));
                    add("uu-mod " + at, lhs, rhs, false);
                }
            }
        for (int l = 1; l <= t; ++l) {
            const Element dl = drc(n, p, l);
            for (const auto& [pa, u] : b.u) {
                const auto [i, j] = pa;
                const std::string at = "du " + pp + "d_" + std::to_string(l) + " " + idx("u", i, j);
                if (l < j || in_seq(p.r, j, l, i))
                    add(at, A.multiply(dl, u), A.multiply(u, dl), true);
                else
                    add(at, A.multiply(dl, u), qp(1) * A.multiply(u, dl), false);
            }
            for (const auto& [pw, w] : b.w) {
                const auto [l2, m] = pw;
                const int j = l;
                const std::string at = "dw " + pp + "d_" + std::to_string(j) + " " + idx("w", l2, m);
                if (j < l2 || in_seq(p.c, l2, j, m))
                    add(at, A.multiply(dl, w), A.multiply(w, dl), true);
                else
                    add(at, A.multiply(dl, w), qp(1) * A.multiply(w, dl), false);
            }
        }
        for (const auto& [pa, u] : b.u)
            for (const auto& [pw, w] : b.w) {
                const auto [i, j] = pa;
                const auto [l, m] = pw;
                // non-pivot entries only: u with i > r_j, w with m > c_l
                if (i == p.r[j - 1] || m == p.c[l - 1]) continue;
                const std::string at = "uw " + pp + idx("u", i, j) + " " + idx("w", l, m);
                const Element lhs = A.multiply(u, w);
                if (j == l || (j < l && in_seq(p.r, j + 1, l, i)) || (j > l && in_seq(p.c, l + 1, j, m)))
                    add(at, lhs, A.multiply(w, u), true);
                else if (j < l)
                    add(at, lhs, qp(-1) * A.multiply(w, u), false);
                else
                    add(at, lhs, qp(1) * A.multiply(w, u), false);
            }
    }
    return cases;
}

// ----------------------------------------------------------------- S16

std::string positions_text(const std::vector<Position>& ps) {
    std::string out;
    for (const auto& [i, j] : ps) out += (out.empty() ? "" : ",") + std::to_string(i) + std::to_string(j);
    return "{" + out + "}";
}

std::string entry_text(const HPrimeSpec& e) {
    return format_step_pair(e.pair) + " Q+=" + positions_text(e.q_plus) + " Q-=" + positions_text(e.q_minus);
}

// Which of the minors of O_q(M_2) (and generators) the kappa map kills.
std::vector<bool> kernel_signature(const Homomorphism& k) {
    std::vector<bool> sig;
    for (const auto& I : all_subsets(2, 1))
        for (const auto& J : subsets(2, static_cast<int>(I.size()))) sig.push_back(k.apply(quantum_minor(2, I, J)).is_zero());
    return sig;
}

CaseList s16(int, const RunOptions& o) {
    CaseList cases;
    const int n = 2;
    const int bound = o.degree_bound;
    const auto catalog = hspec_m2_catalog();
    cases.push_back({"entry count and strata", [catalog]() -> std::optional<Failure> {
                         std::vector<std::uint64_t> per_t(3, 0);
                         for (const auto& e : catalog) ++per_t[e.pair.t()];
                         for (int t = 0; t <= 2; ++t) {
                             const auto want = hspec_count(2, t);
                             if (!want || *want != per_t[t])
                                 return Failure{"catalog entries at t=" + std::to_string(t), std::to_string(per_t[t]),
                                                want ? std::to_string(*want) : "Unknown", "qmcli hspec count -n 2 -t " + std::to_string(t),
                                                {}};
                         }
                         if (catalog.size() != 14)
                             return Failure{"catalog size", std::to_string(catalog.size()), "14", "qmcli hspec m2", {}};
                         return std::nullopt;
                     }});
    cases.push_back({"pairwise distinct kernels", [catalog, bound]() -> std::optional<Failure> {
                         // compare kernel dimensions on every multidegree up to the bound, plus minor signatures
                         std::vector<std::pair<std::vector<bool>, std::vector<std::size_t>>> seen;
                         for (const auto& e : catalog) {
                             const Homomorphism k = kappa_map(n, e);
                             std::vector<std::size_t> dims;
                             for (int d = 1; d <= std::min(bound, 2); ++d)
                                 for (const auto& md : multidegrees(n, d)) dims.push_back(kernel_dimension(k, md));
                             seen.emplace_back(kernel_signature(k), std::move(dims));
                         }
                         for (std::size_t a = 0; a < seen.size(); ++a)
                             for (std::size_t b = a + 1; b < seen.size(); ++b)
                                 if (seen[a] == seen[b])
                                     return Failure{"kernels not distinguished", entry_text(catalog[a]), entry_text(catalog[b]),
                                                    "qmcli hspec m2", {}};
                         return std::nullopt;
                     }});
    for (const auto& e : catalog) {
        const std::string at = entry_text(e);
        cases.push_back({at, [e, at, bound]() -> std::optional<Failure> {
                             const Homomorphism k = kappa_map(n, e);
                             const Presentation A = oqm_presentation(n);
                             for (const Element& g : e.known_generators)
                                 if (auto f = expect_equal(k.target(), n, at + " kappa(" + format_element(A, g) + ")",
                                                           k.apply(g), Element()))
                                     return f;
                             if (k.apply(Element::one()) != Element::one())
                                 return Failure{at + " kappa(1)", "", "1", {}, {}};
                             // printed generators against kernel generators found up to degree 2
                             auto text_set = [&](const std::vector<Element>& xs) {
                                 std::set<std::string> s;
                                 for (const Element& x : xs) s.insert(format_element(A, x));
                                 return s;
                             };
                             const auto found = kernel_generators(k, n, 2);
                             if (text_set(found) != text_set(e.known_generators)) {
                                 std::string a, b;
                                 for (const auto& s : text_set(found)) a += s + "; ";
                                 for (const auto& s : text_set(e.known_generators)) b += s + "; ";
                                 return Failure{at + " kernel generators", a, b, "qmcli hspec m2", {}};
                             }
                             // the printed set generates the kernel in each degree up to the bound
                             if (!e.known_generators.empty()) {
                                 const GradedIdeal ideal(A, e.known_generators);
                                 for (int d = 1; d <= bound; ++d)
                                     for (const auto& md : multidegrees(n, d)) {
                                         const std::size_t kd = kernel_dimension(k, md);
                                         const std::size_t id = ideal.component_dimension(md);
                                         if (kd != id)
                                             return Failure{at + " degree " + format_index_set(md) + " dim ker vs dim ideal",
                                                            std::to_string(kd), std::to_string(id), {}, {}};
                                     }
                             } else {
                                 for (int d = 1; d <= bound; ++d)
                                     for (const auto& md : multidegrees(n, d))
                                         if (const std::size_t kd = kernel_dimension(k, md); kd != 0)
                                             return Failure{at + " nonzero kernel in degree " + format_index_set(md),
                                                            std::to_string(kd), "0", {}, {}};
                             }
                             const StepPair got = stratum_of(n, [&](const MinorKey& key) {
                                 return k.apply(quantum_minor(n, key)).is_zero();
                             });
                             if (got != e.pair)
                                 return Failure{at + " stratum", format_step_pair(got), format_step_pair(e.pair), {}, {}};
                             return std::nullopt;
                         }});
    }
    return cases;
}

// ----------------------------------------------------------------- registry

using SuiteFn = CaseList (*)(int, const RunOptions&);

struct Entry {
    SuiteInfo info;
    SuiteFn fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r = {
        {{"S1", "pbw-confluence", 3, "normal forms independent of rewriting strategy"}, s1},
        {{"S2", "minors-cross", 4, "Laplace recursion equals permutation sum; minors commute with their entries"}, s2},
        {{"S3", "comult-minors", 3, "comultiplication of quantum minors"}, s3},
        {{"S4", "lemma52", 4, "minor times generator commutation, cases (a) (b1) (b2) (c1) (c2)"}, s4},
        {{"S5", "lemma53", 4, "products of adjacent (k-1)-minors, cases (a)-(d)"}, s5},
        {{"S6", "laplace", 4, "q-Laplace relations and single-row/column expansions"}, s6},
        {{"S7", "lemma56", 3, "quadratic Laplace relations, zero and nonzero cases"}, s7},
        {{"S8", "lemma57", 4, "[I|J]X - q^2 X[I|J] = (1-q^2)[I+r|J+c]"}, s8},
        {{"S9", "lemma29", 3, "minor commutation, exact and modulo L"}, s9_all},
        {{"S9a", "lemma29-exact", 4, "exact sub-cases of S9"}, s9_exact},
        {{"S10", "lemma13", 3, "minor-generator congruences modulo lower minors"}, s10},
        {{"S11", "beta-kernel", 3, "beta kills every generator of K_rc"}, s11},
        {{"S12", "beta-products", 3, "beta of d_l, u, w and the product witnesses"}, s12},
        {{"S13", "skew-laurent", 4, "conjugation eigenvalues of the pivots and d_s"}, s13},
        {{"S14", "y-relations", 4, "relations among the y_ij"}, s14},
        {{"S15", "thm211-relations", 3, "relations among u, w and d modulo K_rc"}, s15},
        {{"S16", "m2-catalog", 2, "the fourteen H-primes of O_q(M_2)"}, s16},
    };
    return r;
}

const Entry& find_entry(const std::string& key) {
    std::string k = key;
    std::transform(k.begin(), k.end(), k.begin(), [](unsigned char ch) { return std::tolower(ch); });
    for (const auto& e : registry()) {
        std::string id = e.info.id;
        std::transform(id.begin(), id.end(), id.begin(), [](unsigned char ch) { return std::tolower(ch); });
        if (k == id || k == e.info.name) return e;
    }
    throw QmError(ErrorCode::UnknownSuite, "unknown suite '" + key + "'");
}

std::optional<Failure> run_guarded(const Case& c) {
    try {
        return c.run();
    } catch (const std::exception& ex) {
        return Failure{c.description + ": exception: " + ex.what(), "", "", {}, {}};
    }
}

nlohmann::json failure_to_json(const Failure& f) {
    nlohmann::json j = {{"description", f.description}, {"lhs", f.lhs}, {"rhs", f.rhs}};
    if (!f.replay.empty()) j["replay"] = f.replay;
    if (!f.ideal.empty()) j["ideal"] = f.ideal;
    return j;
}

nlohmann::json report_to_json(const SuiteReport& r) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : r.failures) fs.push_back(failure_to_json(f));
    return {{"suite", r.id},
            {"name", r.name},
            {"parameters",
             {{"n", r.n},
              {"seed", r.options.seed},
              {"degree_bound", r.options.degree_bound},
              {"words", r.options.words},
              {"parallel", r.options.parallel}}},
            {"cases", r.cases},
            {"failures", fs},
            {"pass", r.pass()},
            {"elapsed_seconds", r.elapsed_seconds}};
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> out = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return out;
}

const SuiteInfo& find_suite(const std::string& key) { return find_entry(key).info; }

SuiteReport run_suite(const std::string& key, const RunOptions& options) {
    const Entry& e = find_entry(key);
    const int n = options.n > 0 ? options.n : e.info.default_n;
    if (n > 6) throw QmError(ErrorCode::InvalidArgument, "n = " + std::to_string(n) + " is beyond any suite bound");
    const auto start = Clock::now();
    SuiteReport rep;
    rep.id = e.info.id;
    rep.name = e.info.name;
    rep.n = n;
    rep.options = options;
    rep.options.n = n;
    const CaseList cases = e.fn(n, options);
    std::vector<std::optional<Failure>> results(cases.size());
    const long count = static_cast<long>(cases.size());
    if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < count; ++k) results[k] = run_guarded(cases[k]);
    } else {
        for (long k = 0; k < count; ++k) results[k] = run_guarded(cases[k]);
    }
    rep.cases = cases.size();
    for (auto& r : results)
        if (r) rep.failures.push_back(std::move(*r));
    rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
}

std::vector<SuiteReport> run_all(const RunOptions& options) {
    std::vector<SuiteReport> out;
    for (const auto& e : registry()) {
        RunOptions o = options;
        o.n = 0;
        out.push_back(run_suite(e.info.id, o));
    }
    return out;
}

std::string report_json(const SuiteReport& r, int indent) { return report_to_json(r).dump(indent); }

std::string reports_json(const std::vector<SuiteReport>& rs, int indent) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : rs) a.push_back(report_to_json(r));
    return a.dump(indent);
}

ConjectureEvidence conjecture_evidence(int n, int max_degree, bool parallel) {
    const auto start = Clock::now();
    struct Item {
        StepPair pair;
        DegreeVector d;
    };
    std::vector<Item> items;
    for (const auto& p : all_pairs(n))
        for (int k = 1; k <= max_degree; ++k)
            for (const auto& d : multidegrees(n, k)) items.push_back({p, d});
    std::vector<std::optional<std::string>> out(items.size());
    const long count = static_cast<long>(items.size());
    auto one = [&](long i) {
        const auto& [p, d] = items[i];
        try {
            const std::size_t ker = kernel_dimension(beta_map(n, p), d);
            const GradedIdeal K = krc_generators(n, p);
            // K lies in the kernel, so a modular rank equal to ker settles it
            std::size_t dimk = K.modular_component_dimension(d);
            if (dimk != ker) dimk = K.component_dimension(d);
            if (dimk != ker)
                out[i] = format_step_pair(p) + " degree (" + format_index_set(d) + "): dim ker = " + std::to_string(ker) +
                         ", dim K = " + std::to_string(dimk);
        } catch (const std::exception& ex) {
            out[i] = format_step_pair(p) + " degree (" + format_index_set(d) + "): " + ex.what();
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) one(i);
    } else {
        for (long i = 0; i < count; ++i) one(i);
    }
    ConjectureEvidence e;
    e.n = n;
    e.max_degree = max_degree;
    e.components = items.size();
    for (auto& o : out) {
        if (o)
            e.mismatches.push_back(std::move(*o));
        else
            ++e.equal;
    }
    e.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return e;
}

std::string evidence_json(const ConjectureEvidence& e, int indent) {
    return nlohmann::json{{"n", e.n},
                          {"max_degree", e.max_degree},
                          {"components", e.components},
                          {"equal", e.equal},
                          {"mismatches", e.mismatches},
                          {"elapsed_seconds", e.elapsed_seconds},
                          {"status", "evidence only"}}
        .dump(indent);
}

}  // namespace qm
