#pragma once

// Hand-rolled random generators for property tests.

#include "qm/laurent.hpp"
#include "qm/pbw.hpp"
#include "qm/qmatrix.hpp"
#include "qm/word_rewrite.hpp"

#include <algorithm>

#include <random>

namespace qm::testgen {

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(0x5eed);
    return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Sparse Laurent polynomial with small exponents and occasionally huge coefficients.
inline LaurentInt laurent(int max_terms = 4) {
    std::vector<LaurentInt::Term> terms;
    const int k = uniform(0, max_terms);
    for (int i = 0; i < k; ++i) {
        BigInt c = uniform(-9, 9);
        if (uniform(0, 5) == 0) c *= BigInt("123456789012345678901234567890");
        terms.emplace_back(uniform(-4, 4), c);
    }
    return LaurentInt::from_terms(std::move(terms));
}

/// Random word of letters over the non-invertible generators of p.
inline Word word(const Presentation& p, int max_len) {
    Word w(uniform(0, max_len));
    for (auto& l : w) l = {uniform(0, p.size() - 1), 1};
    return w;
}

/// Random element of O_q(M_n) built from products of generators.
inline Element element(const Presentation& p, int max_terms, int max_len) {
    Element x;
    const int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) x += laurent(2) * p.normal_form(word(p, max_len));
    return x;
}

/// Random homogeneous element of multidegree given by a fixed word's letters.
inline Element homogeneous(const Presentation& p, const Word& shape, int max_terms) {
    Element x;
    const int k = uniform(1, max_terms);
    for (int i = 0; i < k; ++i) {
        Word w = shape;
        std::shuffle(w.begin(), w.end(), rng());
        x += laurent(2) * p.normal_form(w);
    }
    return x;
}

inline IndexSet subset(int n, int k) {
    auto all = subsets(n, k);
    return all[uniform(0, static_cast<int>(all.size()) - 1)];
}

}  // namespace qm::testgen
