#include "qm/qmatrix.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace qm {

namespace {

Presentation build_oqm(int n) {
    if (n < 1) throw QmError(ErrorCode::InvalidArgument, "n must be positive");
    std::vector<GeneratorInfo> gens;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            DegreeVector d(2 * n, 0);
            d[i - 1] = 1;
            d[n + j - 1] = 1;
            gens.push_back({"X", i, j, 0, false, d});
        }
    }
    const LaurentInt qinv = LaurentInt::q(-1);
    const LaurentInt qhat = LaurentInt::qhat();
    std::vector<RewriteRule> rules;
    for (int a = 0; a < n * n; ++a) {
        for (int b = a + 1; b < n * n; ++b) {
            const int i = a / n + 1;
            const int j = a % n + 1;
            const int l = b / n + 1;
            const int m = b % n + 1;
            RewriteRule r{b, a, LaurentInt(1), {}};
            if (i == l || j == m) {
                r.swap = qinv;
            } else if (j < m) {
                r.corrections.push_back(
                    {-qhat, Monomial({{xgen(n, i, m), 1}, {xgen(n, l, j), 1}})});
            }
            rules.push_back(std::move(r));
        }
    }
    return Presentation(std::move(gens), rules, 2 * n);
}

template <typename Value>
class Memo {
public:
    template <typename Key, typename Fn>
    Value get(const Key& key, Fn&& build) {
        {
            std::shared_lock lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        Value v = build();
        std::unique_lock lock(mutex_);
        return map_.emplace(key, std::move(v)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::tuple<int, IndexSet, IndexSet>, Value> map_;
};

std::mutex& pres_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

Presentation oqm_presentation(int n) {
    static std::map<int, Presentation> cache;
    std::lock_guard lock(pres_mutex());
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_oqm(n)).first;
    return it->second;
}

Presentation oqm_tensor_square(int n) {
    static std::map<int, Presentation> cache;
    Presentation a = oqm_presentation(n);
    std::lock_guard lock(pres_mutex());
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, tensor(a, a)).first;
    return it->second;
}

namespace {

void check_key(int n, const IndexSet& rows, const IndexSet& cols) {
    if (rows.size() != cols.size()) throw QmError(ErrorCode::SizeMismatch, "row and column sets differ in size");
    for (const IndexSet* s : {&rows, &cols}) {
        for (std::size_t k = 0; k < s->size(); ++k) {
            if ((*s)[k] < 1 || (*s)[k] > n) throw QmError(ErrorCode::InvalidArgument, "index out of range 1..n");
            if (k > 0 && (*s)[k - 1] >= (*s)[k])
                throw QmError(ErrorCode::InvalidArgument, "index set must be strictly increasing");
        }
    }
}

}  // namespace

Element quantum_minor(int n, const IndexSet& rows, const IndexSet& cols) {
    static Memo<Element> memo;
    check_key(n, rows, cols);
    if (rows.empty()) return Element::one();
    return memo.get(std::make_tuple(n, rows, cols), [&] {
        const Presentation A = oqm_presentation(n);
        const int c = cols.back();
        const IndexSet J(cols.begin(), cols.end() - 1);
        // (-q)^{|J|} [I|J+c] = sum_i (-q)^{|[1,i) cap I|} X_ic [I-i|J]
        Element sum;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const int i = rows[k];
            Element t = A.multiply(A.gen(xgen(n, i, c)), quantum_minor(n, without(rows, i), J));
            t *= LaurentInt::signed_power(-1, static_cast<int>(k));
            sum += t;
        }
        sum *= LaurentInt::signed_power(-1, -static_cast<int>(J.size()));
        return sum;
    });
}

Element quantum_minor_perm(int n, const IndexSet& rows, const IndexSet& cols) {
    check_key(n, rows, cols);
    if (rows.size() > 6) throw QmError(ErrorCode::InvalidArgument, "permutation oracle capped at size 6");
    const Presentation A = oqm_presentation(n);
    std::vector<int> perm(rows.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
    Element sum;
    do {
        int inv = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inv;
        std::vector<std::pair<int, int>> word;
        for (std::size_t k = 0; k < perm.size(); ++k) word.emplace_back(xgen(n, rows[k], cols[perm[k]]), 1);
        Element t = A.normal_form(word);
        t *= LaurentInt::signed_power(-1, inv);
        sum += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

Homomorphism comultiplication(int n) {
    const Presentation A = oqm_presentation(n);
    const Presentation AA = oqm_tensor_square(n);
    std::vector<std::optional<Element>> images(n * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Element s;
            for (int l = 1; l <= n; ++l)
                s += Element::monomial(Monomial({{xgen(n, i, l), 1}, {n * n + xgen(n, l, j), 1}}));
            images[xgen(n, i, j)] = s;
        }
    }
    return Homomorphism(A, AA, std::move(images));
}

Element comultiply(int n, const Element& x) { return comultiplication(n).apply(x); }

LaurentInt counit(int n, const Element& x) {
    static const Presentation scalars({}, {}, 0);
    std::vector<std::optional<Element>> images(n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) images[xgen(n, i, j)] = i == j ? Element::one() : Element();
    Homomorphism eps(oqm_presentation(n), scalars, std::move(images));
    return *eps.apply(x).as_scalar();
}

Homomorphism transpose_hom(int n) {
    const Presentation A = oqm_presentation(n);
    std::vector<std::optional<Element>> images(n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) images[xgen(n, i, j)] = A.gen(xgen(n, j, i));
    return Homomorphism(A, A, std::move(images));
}

Element transpose_tau(int n, const Element& x) { return transpose_hom(n).apply(x); }

bool indexset_leq(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) throw QmError(ErrorCode::SizeMismatch, "index sets differ in size");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

bool indexset_less(const IndexSet& a, const IndexSet& b) { return a != b && indexset_leq(a, b); }

int inversion_count(const IndexSet& I, const IndexSet& J) {
    int c = 0;
    for (int i : I)
        for (int j : J)
            if (i > j) ++c;
    return c;
}

std::vector<IndexSet> subsets_of(const IndexSet& s, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > static_cast<int>(s.size())) return out;
    std::vector<int> idx(k);
    for (int a = 0; a < k; ++a) idx[a] = a;
    const int m = static_cast<int>(s.size());
    while (true) {
        IndexSet cur;
        for (int a : idx) cur.push_back(s[a]);
        out.push_back(cur);
        int p = k - 1;
        while (p >= 0 && idx[p] == m - k + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int a = p + 1; a < k; ++a) idx[a] = idx[a - 1] + 1;
    }
    return out;
}

std::vector<IndexSet> subsets(int n, int k) {
    IndexSet all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    return subsets_of(all, k);
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet with(const IndexSet& a, int x) { return set_union(a, IndexSet{x}); }
IndexSet without(const IndexSet& a, int x) { return set_minus(a, IndexSet{x}); }
bool contains(const IndexSet& a, int x) { return std::binary_search(a.begin(), a.end(), x); }

int count_between(const IndexSet& I, int lo, bool lo_closed, int hi, bool hi_closed) {
    int c = 0;
    for (int i : I) {
        const bool above = lo_closed ? i >= lo : i > lo;
        const bool below = hi_closed ? i <= hi : i < hi;
        if (above && below) ++c;
    }
    return c;
}

std::string format_index_set(const IndexSet& s) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k > 0) out += ' ';
        out += std::to_string(s[k]);
    }
    return out;
}

std::string format_minor_key(const MinorKey& k) {
    return "[" + format_index_set(k.rows) + "|" + format_index_set(k.cols) + "]";
}

MinorKey parse_minor_key(std::string_view text, int n) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    };
    auto read_set = [&](char stop) {
        IndexSet s;
        while (true) {
            skip();
            if (i >= text.size()) throw ParseError(i, std::string("expected '") + stop + "'");
            if (text[i] == stop) {
                ++i;
                return s;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError(i, "expected an index");
            int v = 0;
            const std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1000) throw ParseError(start, "index too large");
                ++i;
            }
            if (v < 1 || v > n) throw ParseError(start, "index out of range 1.." + std::to_string(n));
            if (!s.empty() && s.back() >= v) throw ParseError(start, "indices must be strictly increasing");
            s.push_back(v);
        }
    };
    skip();
    if (i >= text.size() || text[i] != '[') throw ParseError(i, "expected '['");
    ++i;
    MinorKey k;
    k.rows = read_set('|');
    k.cols = read_set(']');
    skip();
    if (i != text.size()) throw ParseError(i, "unexpected trailing input");
    if (k.rows.size() != k.cols.size()) throw QmError(ErrorCode::SizeMismatch, "row and column sets differ in size");
    return k;
}

}  // namespace qm
