#include "qm/pbw.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace qm {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    for (const auto& [g, e] : entries) {
        if (!entries_.empty() && entries_.back().first == g) {
            entries_.back().second += e;
            if (entries_.back().second == 0) entries_.pop_back();
        } else if (e != 0) {
            entries_.emplace_back(g, e);
        }
    }
}

Monomial Monomial::generator(int g, int e) {
    Monomial m;
    if (e != 0) m.entries_.emplace_back(g, e);
    return m;
}

int Monomial::exponent(int g) const {
    for (const auto& [h, e] : entries_)
        if (h == g) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& entry : entries_) d += entry.second;
    return d;
}

std::vector<std::pair<int, int>> Monomial::letters() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [g, e] : entries_) {
        const int s = e > 0 ? 1 : -1;
        for (int k = 0; k < e * s; ++k) out.emplace_back(g, s);
    }
    return out;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& [g, e] : entries_) {
        h = (h ^ static_cast<std::size_t>(g * 131 + 7)) * 1099511628211ULL;
        h = (h ^ static_cast<std::size_t>(e + 1000)) * 1099511628211ULL;
    }
    return h;
}

int compare(const Monomial& a, const Monomial& b) {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ea.size() || j < eb.size()) {
        const int ga = i < ea.size() ? ea[i].first : INT32_MAX;
        const int gb = j < eb.size() ? eb[j].first : INT32_MAX;
        if (ga == gb) {
            if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second ? -1 : 1;
            ++i;
            ++j;
        } else if (ga < gb) {
            return ea[i].second > 0 ? 1 : -1;
        } else {
            return eb[j].second > 0 ? -1 : 1;
        }
    }
    return 0;
}

// ----------------------------------------------------------------- Element

Element Element::scalar(const LaurentInt& c) {
    Element e;
    if (!c.is_zero()) e.terms_.emplace(Monomial(), c);
    return e;
}

Element Element::monomial(const Monomial& m, const LaurentInt& c) {
    Element e;
    if (!c.is_zero()) e.terms_.emplace(m, c);
    return e;
}

LaurentInt Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? LaurentInt() : it->second;
}

std::optional<LaurentInt> Element::as_scalar() const {
    if (terms_.empty()) return LaurentInt();
    if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
    return std::nullopt;
}

void Element::add_term(const Monomial& m, const LaurentInt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const LaurentInt& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) term.second *= c;
    return *this;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& term : out.terms_) term.second = -term.second;
    return out;
}

std::string GeneratorInfo::name() const {
    return symbol + "[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

// ------------------------------------------------------------ Presentation

namespace {

struct CacheKey {
    Monomial m;
    int g;
    int s;
    bool operator==(const CacheKey& o) const { return g == o.g && s == o.s && m == o.m; }
};

struct CacheKeyHash {
    std::size_t operator()(const CacheKey& k) const {
        return k.m.hash() ^ (static_cast<std::size_t>(k.g) * 0x9e3779b97f4a7c15ULL) ^ static_cast<std::size_t>(k.s + 2);
    }
};

LaurentInt unit_power(const LaurentInt& u, int k) {
    if (k == 0) return LaurentInt(1);
    if (u.is_unit()) {
        const auto& [e, c] = u.terms()[0];
        const int sign = (c < 0 && (k % 2 != 0)) ? -1 : 1;
        return LaurentInt(BigInt(sign), e * k);
    }
    if (k < 0) throw QmError(ErrorCode::InvalidArgument, "negative power of a non-unit swap scalar");
    LaurentInt out(1);
    for (int i = 0; i < k; ++i) out *= u;
    return out;
}

}  // namespace

struct Presentation::Data {
    std::vector<GeneratorInfo> gens;
    std::vector<RewriteRule> rules;  // dense, index high * n + low
    int grading_rank = 0;
    int slot_count = 1;
    bool pure = true;
    bool has_invertible = false;

    mutable std::shared_mutex mutex;
    mutable std::unordered_map<CacheKey, Element, CacheKeyHash> cache;
};

Presentation::Presentation(std::vector<GeneratorInfo> generators, const std::vector<RewriteRule>& rules,
                           int grading_rank, int slot_count)
    : data_(std::make_shared<Data>()) {
    const int n = static_cast<int>(generators.size());
    data_->gens = std::move(generators);
    data_->grading_rank = grading_rank;
    data_->slot_count = slot_count;
    for (const auto& g : data_->gens) {
        if (static_cast<int>(g.degree.size()) != grading_rank)
            throw QmError(ErrorCode::InvalidArgument, "generator " + g.name() + " has wrong grading rank");
        data_->has_invertible = data_->has_invertible || g.invertible;
    }
    data_->rules.assign(static_cast<std::size_t>(n) * n, RewriteRule{});
    std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
    for (RewriteRule r : rules) {
        if (r.high < r.low) std::swap(r.high, r.low);
        if (r.high == r.low || r.low < 0 || r.high >= n)
            throw QmError(ErrorCode::InvalidArgument, "rule on invalid generator pair");
        const std::size_t idx = static_cast<std::size_t>(r.high) * n + r.low;
        if (seen[idx]) throw QmError(ErrorCode::InvalidArgument, "duplicate rule");
        seen[idx] = true;
        DegreeVector lhs(grading_rank, 0);
        for (int k = 0; k < grading_rank; ++k) lhs[k] = data_->gens[r.high].degree[k] + data_->gens[r.low].degree[k];
        for (const auto& c : r.corrections) {
            if (degree(c.word) != lhs)
                throw QmError(ErrorCode::InvalidArgument, "inhomogeneous correction in rule " +
                                                              data_->gens[r.high].name() + "*" +
                                                              data_->gens[r.low].name());
            if (c.word.total_degree() > 2)
                throw QmError(ErrorCode::InvalidArgument, "correction longer than two letters");
        }
        if (!r.pure()) {
            data_->pure = false;
            if (data_->gens[r.high].invertible || data_->gens[r.low].invertible)
                throw QmError(ErrorCode::NotQNormal, "invertible generator in a rule with corrections");
        }
        data_->rules[idx] = std::move(r);
    }
    for (int h = 0; h < n; ++h)
        for (int l = 0; l < h; ++l)
            if (!seen[static_cast<std::size_t>(h) * n + l])
                throw QmError(ErrorCode::InvalidArgument, "missing rule for " + data_->gens[h].name() + "*" +
                                                              data_->gens[l].name());
}

int Presentation::size() const { return static_cast<int>(data_->gens.size()); }
int Presentation::grading_rank() const { return data_->grading_rank; }
int Presentation::slot_count() const { return data_->slot_count; }
const GeneratorInfo& Presentation::generator(int g) const { return data_->gens.at(g); }
const std::vector<GeneratorInfo>& Presentation::generators() const { return data_->gens; }
bool Presentation::pure() const { return data_->pure; }
bool Presentation::has_invertible() const { return data_->has_invertible; }

const RewriteRule& Presentation::rule(int a, int b) const {
    if (a < b) std::swap(a, b);
    return data_->rules[static_cast<std::size_t>(a) * data_->gens.size() + b];
}

std::vector<RewriteRule> Presentation::rules() const {
    std::vector<RewriteRule> out;
    const int n = size();
    for (int h = 0; h < n; ++h)
        for (int l = 0; l < h; ++l) out.push_back(rule(h, l));
    return out;
}

std::optional<int> Presentation::find(const std::string& symbol, int row, int col, int slot) const {
    std::optional<int> found;
    for (int g = 0; g < size(); ++g) {
        const auto& info = data_->gens[g];
        if (info.symbol == symbol && info.row == row && info.col == col && (slot < 0 || info.slot == slot)) {
            if (found) throw QmError(ErrorCode::UnknownGenerator, "ambiguous generator " + info.name());
            found = g;
        }
    }
    return found;
}

int Presentation::index(const std::string& symbol, int row, int col, int slot) const {
    auto g = find(symbol, row, col, slot);
    if (!g)
        throw QmError(ErrorCode::UnknownGenerator,
                      "unknown generator " + symbol + "[" + std::to_string(row) + "," + std::to_string(col) + "]");
    return *g;
}

Element Presentation::gen(int g, int e) const {
    if (g < 0 || g >= size()) throw QmError(ErrorCode::UnknownGenerator, "generator index out of range");
    if (e < 0 && !data_->gens[g].invertible)
        throw QmError(ErrorCode::NegativePowerOfNonInvertible, "negative power of " + data_->gens[g].name());
    return Element::monomial(Monomial::generator(g, e));
}

Element Presentation::gen(const std::string& symbol, int row, int col, int e) const {
    return gen(index(symbol, row, col), e);
}

void Presentation::check(const Element& x) const {
    for (const auto& [m, c] : x.terms()) {
        for (const auto& [g, e] : m.entries()) {
            if (g < 0 || g >= size()) throw QmError(ErrorCode::UnknownGenerator, "generator index out of range");
            if (e < 0 && !data_->gens[g].invertible)
                throw QmError(ErrorCode::NegativePowerOfNonInvertible, "negative power of " + data_->gens[g].name());
        }
    }
}

DegreeVector Presentation::degree(const Monomial& m) const {
    DegreeVector d(data_->grading_rank, 0);
    for (const auto& [g, e] : m.entries()) {
        const auto& dg = data_->gens.at(g).degree;
        for (int k = 0; k < data_->grading_rank; ++k) d[k] += e * dg[k];
    }
    return d;
}

std::optional<DegreeVector> Presentation::multidegree(const Element& x) const {
    if (x.is_zero()) return DegreeVector(data_->grading_rank, 0);
    std::optional<DegreeVector> common;
    for (const auto& term : x.terms()) {
        DegreeVector d = degree(term.first);
        if (!common) {
            common = std::move(d);
        } else if (*common != d) {
            return std::nullopt;
        }
    }
    return common;
}

std::size_t Presentation::cache_size() const {
    std::shared_lock lock(data_->mutex);
    return data_->cache.size();
}

Element Presentation::mul_letter(const Monomial& m, int g, int s) const {
    const auto& entries = m.entries();
    if (entries.empty() || entries.back().first < g) {
        Monomial out = m;
        out.entries_.emplace_back(g, s);
        return Element::monomial(out);
    }
    if (entries.back().first == g) {
        Monomial out = m;
        out.entries_.back().second += s;
        if (out.entries_.back().second == 0) out.entries_.pop_back();
        return Element::monomial(out);
    }
    CacheKey key{m, g, s};
    {
        std::shared_lock lock(data_->mutex);
        auto it = data_->cache.find(key);
        if (it != data_->cache.end()) return it->second;
    }
    Element result = mul_letter_uncached(m, g, s);
    {
        std::unique_lock lock(data_->mutex);
        data_->cache.emplace(std::move(key), result);
    }
    return result;
}

Element Presentation::mul_letter_uncached(const Monomial& m, int g, int s) const {
    const auto [h, a] = m.entries().back();
    Monomial rest = m;
    rest.entries_.pop_back();
    const RewriteRule& r = rule(h, g);
    if (r.pure() || !(a > 0 && s > 0)) {
        if (!r.pure())
            throw QmError(ErrorCode::NotQNormal, "inverse letter meets a rule with corrections");
        // h^a g^s = swap^(a s) g^s h^a
        Element e = mul_letter(rest, g, s);
        const int hs = a > 0 ? 1 : -1;
        for (int k = 0; k < a * hs; ++k) e = mul_element_letter(e, h, hs);
        e *= unit_power(r.swap, a * s);
        return e;
    }
    // h^a g = h^(a-1) (swap g h + corrections)
    Monomial lowered = rest;
    if (a > 1) lowered.entries_.emplace_back(h, a - 1);
    Element e = mul_element_letter(mul_letter(lowered, g, 1), h, 1);
    e *= r.swap;
    for (const auto& c : r.corrections) {
        Element w = mul_mono_word(lowered, c.word);
        w *= c.coef;
        e += w;
    }
    return e;
}

Element Presentation::mul_element_letter(const Element& e, int g, int s) const {
    Element out;
    for (const auto& [m, c] : e.terms()) {
        Element t = mul_letter(m, g, s);
        t *= c;
        out += t;
    }
    return out;
}

Element Presentation::mul_mono_word(const Monomial& m, const Monomial& w) const {
    Element e = Element::monomial(m);
    for (const auto& [g, s] : w.letters()) e = mul_element_letter(e, g, s);
    return e;
}

Element Presentation::multiply(const Element& a, const Element& b) const {
    Element out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [mb, cb] : b.terms()) {
        for (const auto& [ma, ca] : a.terms()) {
            Element t = mul_mono_word(ma, mb);
            t *= ca * cb;
            out += t;
        }
    }
    return out;
}

Element Presentation::multiply(std::initializer_list<Element> factors) const {
    Element out = Element::one();
    for (const auto& f : factors) out = multiply(out, f);
    return out;
}

Element Presentation::power(const Element& a, int e) const {
    if (e < 0) return power(unit_inverse(a), -e);
    Element out = Element::one();
    for (int k = 0; k < e; ++k) out = multiply(out, a);
    return out;
}

Element Presentation::normal_form(const std::vector<std::pair<int, int>>& word) const {
    Element e = Element::one();
    for (const auto& [g, p] : word) {
        if (g < 0 || g >= size()) throw QmError(ErrorCode::UnknownGenerator, "generator index out of range");
        if (p < 0 && !data_->gens[g].invertible)
            throw QmError(ErrorCode::NegativePowerOfNonInvertible, "negative power of " + data_->gens[g].name());
        const int s = p > 0 ? 1 : -1;
        for (int k = 0; k < p * s; ++k) e = mul_element_letter(e, g, s);
    }
    return e;
}

Element Presentation::unit_inverse(const Element& a) const {
    if (a.size() != 1 || !a.leading_coefficient().is_unit())
        throw QmError(ErrorCode::InvalidArgument, "element is not a unit monomial");
    const Monomial& m = a.leading_monomial();
    std::vector<std::pair<int, int>> word;
    for (auto it = m.entries().rbegin(); it != m.entries().rend(); ++it) {
        if (!data_->gens[it->first].invertible)
            throw QmError(ErrorCode::NegativePowerOfNonInvertible,
                          "cannot invert non-invertible " + data_->gens[it->first].name());
        word.emplace_back(it->first, -it->second);
    }
    Element out = normal_form(word);
    out *= a.leading_coefficient().unit_inverse();
    return out;
}

// ---------------------------------------------------- derived presentations

Quotient quotient_by_generators(const Presentation& p, const std::vector<int>& kill) {
    const int n = p.size();
    std::vector<bool> killed(n, false);
    for (int g : kill) {
        if (g < 0 || g >= n) throw QmError(ErrorCode::UnknownGenerator, "kill set names an unknown generator");
        if (p.generator(g).invertible)
            throw QmError(ErrorCode::NonAdmissibleKillSet, "cannot kill invertible " + p.generator(g).name());
        killed[g] = true;
    }
    std::vector<int> image(n, -1);
    std::vector<GeneratorInfo> gens;
    for (int g = 0; g < n; ++g) {
        if (!killed[g]) {
            image[g] = static_cast<int>(gens.size());
            gens.push_back(p.generator(g));
        }
    }
    auto has_killed = [&](const Monomial& w) {
        for (const auto& entry : w.entries())
            if (killed[entry.first]) return true;
        return false;
    };
    auto remap = [&](const Monomial& w) {
        std::vector<Monomial::Entry> entries;
        for (const auto& [g, e] : w.entries()) entries.emplace_back(image[g], e);
        return Monomial(entries);
    };
    std::vector<RewriteRule> rules;
    for (const auto& r : p.rules()) {
        if (killed[r.high] || killed[r.low]) {
            for (const auto& c : r.corrections) {
                if (!has_killed(c.word))
                    throw QmError(ErrorCode::NonAdmissibleKillSet,
                                  "rule " + p.generator(r.high).name() + "*" + p.generator(r.low).name() +
                                      " has a correction with no killed generator");
            }
            continue;
        }
        RewriteRule nr{image[r.high], image[r.low], r.swap, {}};
        for (const auto& c : r.corrections)
            if (!has_killed(c.word)) nr.corrections.push_back({c.coef, remap(c.word)});
        rules.push_back(std::move(nr));
    }
    return {Presentation(std::move(gens), rules, p.grading_rank(), p.slot_count()), std::move(image)};
}

Presentation localize(const Presentation& p, const std::vector<int>& invert) {
    std::vector<GeneratorInfo> gens = p.generators();
    for (int g : invert) {
        if (g < 0 || g >= p.size()) throw QmError(ErrorCode::UnknownGenerator, "localization names an unknown generator");
        for (int h = 0; h < p.size(); ++h) {
            if (h != g && !p.rule(g, h).pure())
                throw QmError(ErrorCode::NotQNormal, p.generator(g).name() + " is not q-normal (rule with " +
                                                         p.generator(h).name() + " has corrections)");
        }
        gens[g].invertible = true;
    }
    return Presentation(std::move(gens), p.rules(), p.grading_rank(), p.slot_count());
}

Presentation tensor(const Presentation& a, const Presentation& b) {
    const int na = a.size();
    const int nb = b.size();
    const int ra = a.grading_rank();
    const int rb = b.grading_rank();
    std::vector<GeneratorInfo> gens;
    for (auto g : a.generators()) {
        g.degree.resize(ra + rb, 0);
        gens.push_back(std::move(g));
    }
    for (auto g : b.generators()) {
        DegreeVector d(ra, 0);
        d.insert(d.end(), g.degree.begin(), g.degree.end());
        g.degree = std::move(d);
        g.slot += a.slot_count();
        gens.push_back(std::move(g));
    }
    std::vector<RewriteRule> rules = a.rules();
    for (const auto& r : b.rules()) {
        RewriteRule nr{r.high + na, r.low + na, r.swap, {}};
        for (const auto& c : r.corrections) {
            std::vector<Monomial::Entry> entries;
            for (const auto& [g, e] : c.word.entries()) entries.emplace_back(g + na, e);
            nr.corrections.push_back({c.coef, Monomial(entries)});
        }
        rules.push_back(std::move(nr));
    }
    for (int h = 0; h < nb; ++h)
        for (int l = 0; l < na; ++l) rules.push_back(RewriteRule{h + na, l, LaurentInt(1), {}});
    return Presentation(std::move(gens), rules, ra + rb, a.slot_count() + b.slot_count());
}

Element embed(const Element& x, int offset) {
    Element out;
    for (const auto& [m, c] : x.terms()) {
        std::vector<Monomial::Entry> entries;
        for (const auto& [g, e] : m.entries()) entries.emplace_back(g + offset, e);
        out.add_term(Monomial(entries), c);
    }
    return out;
}

// ------------------------------------------------------------ Homomorphism

Homomorphism::Homomorphism(Presentation src, Presentation dst, std::vector<std::optional<Element>> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != src_.size())
        throw QmError(ErrorCode::InvalidArgument, "image list size does not match the source presentation");
    inverse_images_.resize(images_.size());
    for (int g = 0; g < src_.size(); ++g) {
        if (!images_[g]) continue;
        dst_.check(*images_[g]);
        if (src_.generator(g).invertible) inverse_images_[g] = dst_.unit_inverse(*images_[g]);
    }
}

Element Homomorphism::apply(const Element& x) const {
    Element out;
    for (const auto& [m, c] : x.terms()) {
        Element img = Element::scalar(c);
        for (const auto& [g, e] : m.entries()) {
            if (g < 0 || g >= src_.size() || !images_[g])
                throw QmError(ErrorCode::MissingImage, "no image for generator index " + std::to_string(g));
            if (e < 0 && !inverse_images_[g])
                throw QmError(ErrorCode::NegativePowerOfNonInvertible, "negative power of " + src_.generator(g).name());
            const Element& base = e > 0 ? *images_[g] : *inverse_images_[g];
            for (int k = 0; k < std::abs(e); ++k) img = dst_.multiply(img, base);
            if (img.is_zero()) break;
        }
        out += img;
    }
    return out;
}

void Homomorphism::validate() const {
    for (const auto& r : src_.rules()) {
        const Element h = apply(src_.gen(r.high));
        const Element l = apply(src_.gen(r.low));
        Element lhs = dst_.multiply(h, l);
        Element rhs = dst_.multiply(l, h);
        rhs *= r.swap;
        for (const auto& c : r.corrections) {
            Element w = apply(Element::monomial(c.word));
            w *= c.coef;
            rhs += w;
        }
        if (lhs != rhs)
            throw QmError(ErrorCode::RelationViolated,
                          "rule " + src_.generator(r.high).name() + "*" + src_.generator(r.low).name() + " violated");
    }
}

Homomorphism Homomorphism::then(const Homomorphism& next) const {
    std::vector<std::optional<Element>> images(images_.size());
    for (std::size_t g = 0; g < images_.size(); ++g)
        if (images_[g]) images[g] = next.apply(*images_[g]);
    return Homomorphism(src_, next.dst_, std::move(images));
}

Homomorphism projection(const Presentation& p, const Quotient& q) {
    std::vector<std::optional<Element>> images(p.size());
    for (int g = 0; g < p.size(); ++g)
        images[g] = q.image[g] >= 0 ? q.presentation.gen(q.image[g]) : Element();
    return Homomorphism(p, q.presentation, std::move(images));
}

}  // namespace qm
