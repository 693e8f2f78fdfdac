#include "qm/graded_ideal.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace qm {

namespace {

void check_degrees(const Presentation& p) {
    for (const auto& g : p.generators())
        for (int x : g.degree)
            if (x < 0) throw QmError(ErrorCode::InvalidArgument, "generator " + g.name() + " has a negative degree");
}

template <typename Emit>
void walk(const Presentation& p, int g, DegreeVector& rest, std::vector<Monomial::Entry>& cur, bool exact,
          Emit& emit) {
    if (exact) {
        if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
            emit(Monomial(cur));
            return;
        }
    } else {
        emit(Monomial(cur));
    }
    for (int h = g; h < p.size(); ++h) {
        const DegreeVector& dg = p.generator(h).degree;
        bool any = false;
        int cap = -1;
        for (std::size_t k = 0; k < dg.size(); ++k) {
            if (dg[k] == 0) continue;
            any = true;
            const int c = rest[k] / dg[k];
            cap = cap < 0 ? c : std::min(cap, c);
        }
        if (!any || cap <= 0) continue;
        for (int e = 1; e <= cap; ++e) {
            for (std::size_t k = 0; k < dg.size(); ++k) rest[k] -= dg[k];
            cur.emplace_back(h, e);
            walk(p, h + 1, rest, cur, exact, emit);
            cur.pop_back();
        }
        for (std::size_t k = 0; k < dg.size(); ++k) rest[k] += cap * dg[k];
    }
}

std::vector<Monomial> enumerate(const Presentation& p, const DegreeVector& d, bool exact) {
    if (p.has_invertible()) throw QmError(ErrorCode::LocalizedAmbient, "component enumeration needs a non-localized ambient");
    if (static_cast<int>(d.size()) != p.grading_rank())
        throw QmError(ErrorCode::SizeMismatch, "degree vector has the wrong length");
    std::vector<Monomial> out;
    if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) return out;
    check_degrees(p);
    DegreeVector rest = d;
    std::vector<Monomial::Entry> cur;
    auto emit = [&](Monomial m) { out.push_back(std::move(m)); };
    walk(p, 0, rest, cur, exact, emit);
    std::sort(out.begin(), out.end(), MonomialGreater{});
    return out;
}

DegreeVector minus(const DegreeVector& a, const DegreeVector& b) {
    DegreeVector out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
    return out;
}

bool nonnegative(const DegreeVector& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

struct RowHash {
    std::size_t operator()(const linalg::Row& r) const {
        std::size_t h = r.size();
        for (const auto& x : r) h = h * 1000003u ^ x.hash();
        return h;
    }
};

// Divide by a unit so the first non-zero entry has lowest exponent 0 and a
// positive top coefficient; returns the unit divided out.
LaurentInt normalize_unit(linalg::Row& r) {
    for (const auto& x : r) {
        if (x.is_zero()) continue;
        LaurentInt unit(BigInt(x.leading_coefficient() < 0 ? -1 : 1), x.min_exponent());
        const LaurentInt inv = unit.unit_inverse();
        for (auto& y : r) y = y * inv;
        return unit;
    }
    return LaurentInt(1);
}

}  // namespace

std::vector<Monomial> homogeneous_component_basis(const Presentation& p, const DegreeVector& d) {
    return enumerate(p, d, true);
}

std::vector<Monomial> monomials_below(const Presentation& p, const DegreeVector& d) { return enumerate(p, d, false); }

linalg::Row coordinates(const Element& x, const std::vector<Monomial>& basis) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    linalg::Row r(basis.size());
    for (const auto& [m, c] : x.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw QmError(ErrorCode::NotHomogeneous, "term outside the component basis");
        r[it->second] = c;
    }
    return r;
}

GradedIdeal::GradedIdeal(Presentation ambient, std::vector<Element> generators) : ambient_(std::move(ambient)) {
    if (ambient_.has_invertible())
        throw QmError(ErrorCode::LocalizedAmbient, "graded membership is only supported in non-localized presentations");
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        auto d = ambient_.multidegree(g);
        if (!d) throw QmError(ErrorCode::NotHomogeneous, "ideal generator is not homogeneous");
        gens_.push_back(std::move(g));
        degrees_.push_back(std::move(*d));
    }
}

GradedIdeal::Assembly GradedIdeal::assemble(const DegreeVector& d, const std::vector<Monomial>& basis) const {
    Assembly a;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
    std::unordered_set<linalg::Row, RowHash> seen;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        const DegreeVector r = minus(d, degrees_[g]);
        if (!nonnegative(r)) continue;
        const std::vector<Monomial> lefts = monomials_below(ambient_, r);
        // right factor degree is forced once the left factor is chosen
        std::unordered_map<Monomial, Element, MonomialHash> right_products;
        for (const Monomial& m1 : lefts) {
            const DegreeVector rd = minus(r, ambient_.degree(m1));
            for (const Monomial& m2 : homogeneous_component_basis(ambient_, rd)) {
                auto it = right_products.find(m2);
                if (it == right_products.end())
                    it = right_products.emplace(m2, ambient_.multiply(gens_[g], Element::monomial(m2))).first;
                const Element prod = ambient_.multiply(Element::monomial(m1), it->second);
                if (prod.is_zero()) continue;
                linalg::Row row(basis.size());
                for (const auto& [m, c] : prod.terms()) row[index.at(m)] = c;
                const LaurentInt unit = normalize_unit(row);
                if (!seen.insert(row).second) continue;
                a.rows.push_back(std::move(row));
                a.origin.push_back({static_cast<int>(g), m1, m2, unit});
            }
        }
    }
    return a;
}

MembershipResult GradedIdeal::contains(const Element& f, bool want_certificate) const {
    MembershipResult res;
    if (f.is_zero()) {
        res.member = true;
        if (want_certificate) res.certificate = Certificate{LaurentInt(1), {}};
        return res;
    }
    auto d = ambient_.multidegree(f);
    if (!d) throw QmError(ErrorCode::NotHomogeneous, "membership query is not homogeneous");
    const std::vector<Monomial> basis = homogeneous_component_basis(ambient_, *d);
    const linalg::Row target = coordinates(f, basis);
    Assembly a = assemble(*d, basis);
    res.rows = a.rows.size();
    res.columns = basis.size();
    if (a.rows.empty()) return res;

    const auto sel = linalg::modular_select(a.rows, &target);
    std::vector<std::size_t> used = sel.independent;
    linalg::SpanResult span;
    if (sel.target_in_span) {
        std::vector<linalg::Row> sub;
        for (std::size_t i : used) sub.push_back(a.rows[i]);
        span = linalg::exact_span(sub, target, want_certificate);
    }
    if (!span.member) {
        // the prefilter can only miss rank at unlucky points; settle exactly
        used.clear();
        for (std::size_t i = 0; i < a.rows.size(); ++i) used.push_back(i);
        span = linalg::exact_span(a.rows, target, want_certificate);
    }
    res.member = span.member;
    if (res.member && want_certificate) {
        Certificate cert;
        cert.scale = span.scale;
        for (std::size_t k = 0; k < used.size(); ++k) {
            if (span.combination[k].is_zero()) continue;
            CertificateTerm t = a.origin[used[k]];
            // the row was divided by t.coef (a unit)
            t.coef = span.combination[k] * t.coef.unit_inverse();
            cert.terms.push_back(std::move(t));
        }
        res.certificate = std::move(cert);
    }
    return res;
}

std::size_t GradedIdeal::component_dimension(const DegreeVector& d) const {
    const std::vector<Monomial> basis = homogeneous_component_basis(ambient_, d);
    Assembly a = assemble(d, basis);
    return linalg::exact_rank(std::move(a.rows));
}

std::size_t GradedIdeal::modular_component_dimension(const DegreeVector& d) const {
    const std::vector<Monomial> basis = homogeneous_component_basis(ambient_, d);
    Assembly a = assemble(d, basis);
    return linalg::modular_select(a.rows).independent.size();
}

bool verify_certificate(const GradedIdeal& ideal, const Element& f, const Certificate& cert) {
    const Presentation& p = ideal.ambient();
    Element sum;
    for (const auto& t : cert.terms) {
        if (t.generator < 0 || static_cast<std::size_t>(t.generator) >= ideal.generators().size()) return false;
        Element prod = p.multiply({Element::monomial(t.left), ideal.generators()[static_cast<std::size_t>(t.generator)],
                                   Element::monomial(t.right)});
        sum += t.coef * prod;
    }
    if (cert.scale.is_zero()) return false;
    return sum == cert.scale * f;
}

}  // namespace qm
