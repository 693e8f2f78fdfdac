#include "qm/strata.hpp"

#include "qm/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_map>

namespace qm {

std::string format_step_pair(const StepPair& p) {
    auto seq = [](const IndexSet& s) {
        std::string out = "(";
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(s[k]);
        }
        return out + ")";
    };
    return "r=" + seq(p.r) + ";c=" + seq(p.c);
}

void check_step_pair(int n, const StepPair& p) {
    if (p.r.size() != p.c.size()) throw QmError(ErrorCode::SizeMismatch, "r and c differ in length");
    for (const IndexSet* s : {&p.r, &p.c})
        for (std::size_t k = 0; k < s->size(); ++k) {
            if ((*s)[k] < 1 || (*s)[k] > n) throw QmError(ErrorCode::InvalidArgument, "step index out of range 1..n");
            if (k && (*s)[k - 1] >= (*s)[k]) throw QmError(ErrorCode::InvalidArgument, "step sequence must increase");
        }
}

StepPair parse_step_pair(std::string_view text, int n) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char ch) {
        skip();
        if (i >= text.size() || text[i] != ch) throw ParseError(i, std::string("expected '") + ch + "'");
        ++i;
    };
    auto sequence = [&](char name) {
        expect(name);
        expect('=');
        expect('(');
        IndexSet s;
        skip();
        if (i < text.size() && text[i] == ')') {
            ++i;
            return s;
        }
        while (true) {
            skip();
            const std::size_t start = i;
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) && v < 1000)
                v = v * 10 + (text[i++] - '0');
            if (start == i) throw ParseError(i, "expected an index");
            if (v < 1 || v > n) throw ParseError(start, "index out of range 1.." + std::to_string(n));
            if (!s.empty() && s.back() >= v) throw ParseError(start, "indices must be strictly increasing");
            s.push_back(v);
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            expect(')');
            return s;
        }
    };
    StepPair p;
    p.r = sequence('r');
    expect(';');
    p.c = sequence('c');
    skip();
    if (i != text.size()) throw ParseError(i, "unexpected trailing input");
    if (p.r.size() != p.c.size()) throw QmError(ErrorCode::SizeMismatch, "r and c differ in length");
    return p;
}

std::vector<StepPair> enumerate_rc(int n, int t) {
    if (t < 0 || t > n) throw QmError(ErrorCode::InvalidArgument, "t must lie in 0..n");
    std::vector<StepPair> out;
    for (const auto& r : subsets(n, t))
        for (const auto& c : subsets(n, t)) out.push_back({r, c});
    return out;
}

std::vector<MinorKey> krc_keys(int n, const StepPair& p) {
    check_step_pair(n, p);
    const int t = p.t();
    std::vector<MinorKey> out;
    for (int l = 1; l <= n; ++l) {
        const IndexSet rl(p.r.begin(), p.r.begin() + std::min(l, t));
        const IndexSet cl(p.c.begin(), p.c.begin() + std::min(l, t));
        for (const auto& I : subsets(n, l))
            for (const auto& J : subsets(n, l))
                if (l > t || !indexset_leq(rl, I) || !indexset_leq(cl, J)) out.push_back({I, J});
    }
    return out;
}

GradedIdeal krc_generators(int n, const StepPair& p) {
    std::vector<Element> gens;
    for (const auto& k : krc_keys(n, p)) gens.push_back(quantum_minor(n, k));
    return GradedIdeal(oqm_presentation(n), std::move(gens));
}

Element drc(int n, const StepPair& p, int l) {
    if (l < 0 || l > p.t()) throw QmError(ErrorCode::InvalidArgument, "l must lie in 0..t");
    return quantum_minor(n, IndexSet(p.r.begin(), p.r.begin() + l), IndexSet(p.c.begin(), p.c.begin() + l));
}

std::vector<int> plus_kill_set(int n, const IndexSet& r) {
    const int t = static_cast<int>(r.size());
    std::vector<int> kill;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j > t || i < r[j - 1]) kill.push_back(xgen(n, i, j));
    return kill;
}

std::vector<int> minus_kill_set(int n, const IndexSet& c) {
    const int t = static_cast<int>(c.size());
    std::vector<int> kill;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i > t || j < c[i - 1]) kill.push_back(xgen(n, i, j));
    return kill;
}

namespace {

Presentation renamed(const Presentation& p, const std::string& symbol) {
    auto gens = p.generators();
    for (auto& g : gens) g.symbol = symbol;
    return Presentation(std::move(gens), p.rules(), p.grading_rank(), p.slot_count());
}

Presentation build_step(int n, const IndexSet& seq, bool plus, bool localized) {
    check_step_pair(n, {seq, seq});
    const Presentation A = oqm_presentation(n);
    Quotient q = quotient_by_generators(A, plus ? plus_kill_set(n, seq) : minus_kill_set(n, seq));
    Presentation p = renamed(q.presentation, plus ? "Y" : "Z");
    if (!localized) return p;
    std::vector<int> pivots;
    for (int s = 1; s <= static_cast<int>(seq.size()); ++s)
        pivots.push_back(plus ? p.index("Y", seq[s - 1], s) : p.index("Z", s, seq[s - 1]));
    return localize(p, pivots);
}

std::mutex& step_mutex() {
    static std::mutex m;
    return m;
}

const Presentation& step_algebra(int n, const IndexSet& seq, bool plus, bool localized) {
    static std::map<std::tuple<int, IndexSet, bool, bool>, Presentation> cache;
    std::lock_guard lock(step_mutex());
    auto key = std::make_tuple(n, seq, plus, localized);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_step(n, seq, plus, localized)).first;
    return it->second;
}

std::unique_ptr<Homomorphism> build_beta(int n, const StepPair& p) {
    const Presentation plus = step_algebra_plus(n, p.r, true);
    const Presentation minus = step_algebra_minus(n, p.c, true);
    const Presentation target = tensor(plus, minus);
    const int t = p.t();
    std::vector<std::optional<Element>> images(static_cast<std::size_t>(n * n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Element s;
            for (int l = 1; l <= t; ++l) {
                if (p.r[l - 1] > i || p.c[l - 1] > j) continue;
                s += target.multiply(target.gen(target.index("Y", i, l, 0)), target.gen(target.index("Z", l, j, 1)));
            }
            images[static_cast<std::size_t>(xgen(n, i, j))] = s;
        }
    }
    auto h = std::make_unique<Homomorphism>(oqm_presentation(n), target, std::move(images));
    h->validate();
    return h;
}

}  // namespace

Presentation step_algebra_plus(int n, const IndexSet& r, bool localized) { return step_algebra(n, r, true, localized); }
Presentation step_algebra_minus(int n, const IndexSet& c, bool localized) {
    return step_algebra(n, c, false, localized);
}

const Homomorphism& beta_map(int n, const StepPair& p) {
    static std::mutex m;
    static std::map<std::tuple<int, IndexSet, IndexSet>, std::unique_ptr<Homomorphism>> cache;
    check_step_pair(n, p);
    std::lock_guard lock(m);
    auto key = std::make_tuple(n, p.r, p.c);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_beta(n, p)).first;
    return *it->second;
}

BrcElements brc_elements(int n, const StepPair& p) {
    check_step_pair(n, p);
    const Presentation plus = step_algebra_plus(n, p.r, true);
    const Presentation minus = step_algebra_minus(n, p.c, true);
    const Presentation& target = beta_map(n, p).target();
    const int t = p.t();
    BrcElements b;
    for (int j = 1; j <= t; ++j) {
        const int rj = p.r[j - 1];
        for (int i = rj; i <= n; ++i) {
            if (i > rj) b.y[{i, j}] = plus.multiply(plus.gen("Y", i, j), plus.gen("Y", rj, j, -1));
            b.u[{i, j}] = quantum_minor(n, with(IndexSet(p.r.begin(), p.r.begin() + (j - 1)), i),
                                        IndexSet(p.c.begin(), p.c.begin() + j));
        }
    }
    for (int l = 1; l <= t; ++l) {
        const int cl = p.c[l - 1];
        for (int m = cl; m <= n; ++m) {
            if (m > cl) b.z[{l, m}] = minus.multiply(minus.gen("Z", l, m), minus.gen("Z", l, cl, -1));
            b.w[{l, m}] = quantum_minor(n, IndexSet(p.r.begin(), p.r.begin() + l),
                                        with(IndexSet(p.c.begin(), p.c.begin() + (l - 1)), m));
        }
    }
    b.beta_d.push_back(Element::one());
    for (int s = 1; s <= t; ++s) {
        b.pivot.push_back(target.multiply(target.gen(target.index("Y", p.r[s - 1], s, 0)),
                                          target.gen(target.index("Z", s, p.c[s - 1], 1))));
        b.beta_d.push_back(target.multiply(b.beta_d.back(), b.pivot.back()));
    }
    return b;
}

Homomorphism kappa_map(int n, const HPrimeSpec& spec) {
    const Homomorphism& beta = beta_map(n, spec.pair);
    const Presentation plus = step_algebra_plus(n, spec.pair.r, true);
    const Presentation minus = step_algebra_minus(n, spec.pair.c, true);
    std::vector<int> kp;
    std::vector<int> km;
    for (const auto& [i, j] : spec.q_plus) kp.push_back(plus.index("Y", i, j));
    for (const auto& [i, j] : spec.q_minus) km.push_back(minus.index("Z", i, j));
    const Quotient qp = quotient_by_generators(plus, kp);
    const Quotient qm = quotient_by_generators(minus, km);
    const Presentation dst = tensor(qp.presentation, qm.presentation);
    const int off = qp.presentation.size();
    std::vector<std::optional<Element>> images;
    for (int g = 0; g < plus.size(); ++g)
        images.push_back(qp.image[g] < 0 ? Element() : dst.gen(qp.image[g]));
    for (int g = 0; g < minus.size(); ++g)
        images.push_back(qm.image[g] < 0 ? Element() : dst.gen(off + qm.image[g]));
    return beta.then(Homomorphism(beta.target(), dst, std::move(images)));
}

StepPair stratum_of(int n, const MinorOracle& in_ideal) {
    int t = 0;
    for (int s = n; s >= 1 && t == 0; --s)
        for (const auto& I : subsets(n, s))
            for (const auto& J : subsets(n, s))
                if (t == 0 && !in_ideal({I, J})) t = s;
    if (t == 0) {
        if (in_ideal({{}, {}})) throw QmError(ErrorCode::InconsistentOracle, "oracle claims 1 lies in the ideal");
        return {};
    }
    std::vector<IndexSet> rows;
    std::vector<IndexSet> cols;
    for (const auto& I : subsets(n, t))
        for (const auto& J : subsets(n, t))
            if (!in_ideal({I, J})) {
                if (std::find(rows.begin(), rows.end(), I) == rows.end()) rows.push_back(I);
                if (std::find(cols.begin(), cols.end(), J) == cols.end()) cols.push_back(J);
            }
    auto least = [](const std::vector<IndexSet>& sets, const char* what) {
        for (const auto& a : sets)
            if (std::all_of(sets.begin(), sets.end(), [&](const IndexSet& b) { return indexset_leq(a, b); })) return a;
        throw QmError(ErrorCode::InconsistentOracle, std::string("no least ") + what + " set outside the ideal");
    };
    StepPair p{least(rows, "row"), least(cols, "column")};
    for (int s = 1; s <= t; ++s)
        if (in_ideal({IndexSet(p.r.begin(), p.r.begin() + s), IndexSet(p.c.begin(), p.c.begin() + s)}))
            throw QmError(ErrorCode::InconsistentOracle, "leading minor of size " + std::to_string(s) + " lies in the ideal");
    return p;
}

std::vector<std::vector<int>> hspec_qaffine(const Presentation& p) {
    if (!p.pure()) throw QmError(ErrorCode::HasCorrections, "presentation has correction terms");
    std::vector<int> free;
    for (int g = 0; g < p.size(); ++g)
        if (!p.generator(g).invertible) free.push_back(g);
    if (free.size() > 20) throw QmError(ErrorCode::InvalidArgument, "too many generators to enumerate subsets");
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
        std::vector<int> s;
        for (std::size_t k = 0; k < free.size(); ++k)
            if (mask & (1u << k)) s.push_back(free[k]);
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

std::optional<std::uint64_t> hspec_count(int n, int t) {
    if (t < 0 || t > n) throw QmError(ErrorCode::InvalidArgument, "t must lie in 0..n");
    std::uint64_t sum = 0;
    for (const auto& r : subsets(n, t)) {
        const Presentation p = step_algebra_plus(n, r, true);
        if (!p.pure()) return std::nullopt;
        int free = 0;
        for (const auto& g : p.generators())
            if (!g.invertible) ++free;
        sum += std::uint64_t{1} << free;
    }
    return sum * sum;
}

std::vector<HPrimeSpec> hspec_m2_catalog() {
    const Presentation A = oqm_presentation(2);
    auto X = [&](int i, int j) { return A.gen(xgen(2, i, j)); };
    const Element det = quantum_minor(2, {1, 2}, {1, 2});
    const Position y21{2, 1};
    const Position z12{1, 2};
    std::vector<HPrimeSpec> out;
    out.push_back({{}, {}, {}, {X(1, 1), X(1, 2), X(2, 1), X(2, 2)}});
    const StepPair p11{{1}, {1}}, p12{{1}, {2}}, p21{{2}, {1}}, p22{{2}, {2}};
    out.push_back({p11, {}, {}, {det}});
    out.push_back({p11, {}, {z12}, {X(1, 2), X(2, 2)}});
    out.push_back({p11, {y21}, {}, {X(2, 1), X(2, 2)}});
    out.push_back({p11, {y21}, {z12}, {X(1, 2), X(2, 1), X(2, 2)}});
    out.push_back({p12, {}, {}, {X(1, 1), X(2, 1)}});
    out.push_back({p12, {y21}, {}, {X(1, 1), X(2, 1), X(2, 2)}});
    out.push_back({p21, {}, {}, {X(1, 1), X(1, 2)}});
    out.push_back({p21, {}, {z12}, {X(1, 1), X(1, 2), X(2, 2)}});
    out.push_back({p22, {}, {}, {X(1, 1), X(1, 2), X(2, 1)}});
    const StepPair full{{1, 2}, {1, 2}};
    out.push_back({full, {}, {}, {}});
    out.push_back({full, {}, {z12}, {X(1, 2)}});
    out.push_back({full, {y21}, {}, {X(2, 1)}});
    out.push_back({full, {y21}, {z12}, {X(1, 2), X(2, 1)}});
    return out;
}

std::vector<DegreeVector> multidegrees(int n, int k) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            parts.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, k);
    std::vector<DegreeVector> out;
    for (const auto& a : parts)
        for (const auto& b : parts) {
            DegreeVector d = a;
            d.insert(d.end(), b.begin(), b.end());
            out.push_back(std::move(d));
        }
    return out;
}

namespace {

std::vector<linalg::Row> image_rows(const Homomorphism& h, const std::vector<Monomial>& basis) {
    std::vector<Element> imgs;
    std::unordered_map<Monomial, std::size_t, MonomialHash> cols;
    for (const auto& m : basis) {
        imgs.push_back(h.apply(Element::monomial(m)));
        for (const auto& [tm, c] : imgs.back().terms()) cols.emplace(tm, cols.size());
    }
    std::vector<linalg::Row> rows;
    for (const auto& e : imgs) {
        linalg::Row r(cols.size());
        for (const auto& [tm, c] : e.terms()) r[cols.at(tm)] = c;
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

std::size_t kernel_dimension(const Homomorphism& h, const DegreeVector& d) {
    const auto basis = homogeneous_component_basis(h.source(), d);
    if (basis.empty()) return 0;
    auto rows = image_rows(h, basis);
    if (rows[0].empty()) return basis.size();
    return basis.size() - linalg::exact_rank(std::move(rows));
}

std::vector<Element> kernel_basis(const Homomorphism& h, const DegreeVector& d) {
    const auto basis = homogeneous_component_basis(h.source(), d);
    std::vector<Element> out;
    if (basis.empty()) return out;
    auto rows = image_rows(h, basis);
    std::vector<linalg::Row> null;
    if (rows[0].empty()) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            linalg::Row v(basis.size());
            v[k] = LaurentInt(1);
            null.push_back(std::move(v));
        }
    } else {
        null = linalg::left_nullspace(rows);
    }
    for (const auto& v : null) {
        Element e;
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!v[k].is_zero()) e.add_term(basis[k], v[k]);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Element> kernel_generators(const Homomorphism& h, int n, int max_degree) {
    std::vector<Element> gens;
    for (int k = 1; k <= max_degree; ++k)
        for (const auto& d : multidegrees(n, k))
            for (auto& v : kernel_basis(h, d)) {
                if (!gens.empty() && GradedIdeal(h.source(), gens).contains(v).member) continue;
                gens.push_back(std::move(v));
            }
    return gens;
}

}  // namespace qm
