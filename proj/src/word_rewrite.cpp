#include "qm/word_rewrite.hpp"

#include <map>

namespace qm {

namespace {

// Position k such that w[k], w[k+1] is reducible, or -1.
long find_redex(const Word& w, Strategy s) {
    const long n = static_cast<long>(w.size());
    auto reducible = [&](long k) {
        const auto& [a, sa] = w[k];
        const auto& [b, sb] = w[k + 1];
        return a > b || (a == b && sa != sb);
    };
    if (s == Strategy::Leftmost) {
        for (long k = 0; k + 1 < n; ++k)
            if (reducible(k)) return k;
    } else {
        for (long k = n - 2; k >= 0; --k)
            if (reducible(k)) return k;
    }
    return -1;
}

LaurentInt pow_scalar(const LaurentInt& x, int e) {
    if (e == 0) return LaurentInt(1);
    LaurentInt base = e > 0 ? x : x.unit_inverse();
    LaurentInt r(1);
    for (int i = 0; i < (e > 0 ? e : -e); ++i) r = r * base;
    return r;
}

Monomial to_monomial(const Word& w) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [g, s] : w) {
        if (!entries.empty() && entries.back().first == g)
            entries.back().second += s;
        else
            entries.emplace_back(g, s);
    }
    return Monomial(std::move(entries));
}

}  // namespace

Element reduce_word(const Presentation& p, const Word& w, Strategy s) {
    std::map<Word, LaurentInt> pending;
    pending[w] = LaurentInt(1);
    Element out;
    while (!pending.empty()) {
        auto it = pending.begin();
        Word word = it->first;
        LaurentInt coef = it->second;
        pending.erase(it);
        if (coef.is_zero()) continue;
        const long k = find_redex(word, s);
        if (k < 0) {
            out.add_term(to_monomial(word), coef);
            continue;
        }
        const auto [a, sa] = word[k];
        const auto [b, sb] = word[k + 1];
        auto push = [&](Word nw, const LaurentInt& c) {
            auto [pos, fresh] = pending.emplace(std::move(nw), c);
            if (!fresh) pos->second += c;
        };
        if (a == b) {
            Word nw(word.begin(), word.begin() + k);
            nw.insert(nw.end(), word.begin() + k + 2, word.end());
            push(std::move(nw), coef);
            continue;
        }
        const RewriteRule& r = p.rule(a, b);
        Word swapped = word;
        std::swap(swapped[k], swapped[k + 1]);
        if (r.pure()) {
            push(std::move(swapped), coef * pow_scalar(r.swap, sa * sb));
            continue;
        }
        if (sa != 1 || sb != 1) throw QmError(ErrorCode::NotQNormal, "inverse letter in a rule with corrections");
        push(std::move(swapped), coef * r.swap);
        for (const auto& c : r.corrections) {
            Word nw(word.begin(), word.begin() + k);
            for (const auto& letter : c.word.letters()) nw.push_back(letter);
            nw.insert(nw.end(), word.begin() + k + 2, word.end());
            push(std::move(nw), coef * c.coef);
        }
    }
    return out;
}

}  // namespace qm
