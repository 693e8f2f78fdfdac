#pragma once

// Presented algebras with ordered PBW bases and a memoized normal-form engine.

#include "qm/errors.hpp"
#include "qm/laurent.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qm {

using DegreeVector = std::vector<int>;

/// Ordered monomial: sparse (generator, exponent) pairs sorted by generator.
class Monomial {
public:
    using Entry = std::pair<int, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);
    static Monomial generator(int g, int e = 1);

    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
    [[nodiscard]] bool is_one() const { return entries_.empty(); }
    [[nodiscard]] int exponent(int g) const;
    [[nodiscard]] int total_degree() const;
    [[nodiscard]] bool contains(int g) const { return exponent(g) != 0; }
    /// Letters (generator, +-1) in ascending generator order.
    [[nodiscard]] std::vector<std::pair<int, int>> letters() const;
    [[nodiscard]] std::size_t hash() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    friend class Presentation;
    std::vector<Entry> entries_;
};

/// Total order: total degree first, then exponent vectors compared
/// lexicographically with generator 0 most significant. Returns -1, 0, 1.
int compare(const Monomial& a, const Monomial& b);

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Linear combination of ordered monomials; terms iterate in descending order.
class Element {
public:
    using TermMap = std::map<Monomial, LaurentInt, MonomialGreater>;

    Element() = default;
    static Element scalar(const LaurentInt& c);
    static Element monomial(const Monomial& m, const LaurentInt& c = LaurentInt(1));
    static Element one() { return scalar(LaurentInt(1)); }

    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] LaurentInt coefficient(const Monomial& m) const;
    /// The scalar value when the element is a multiple of 1.
    [[nodiscard]] std::optional<LaurentInt> as_scalar() const;
    /// Leading (largest) monomial; requires non-zero.
    [[nodiscard]] const Monomial& leading_monomial() const { return terms_.begin()->first; }
    [[nodiscard]] const LaurentInt& leading_coefficient() const { return terms_.begin()->second; }

    void add_term(const Monomial& m, const LaurentInt& c);
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const LaurentInt& c);
    [[nodiscard]] Element operator-() const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const LaurentInt& c, Element a) { return a *= c; }
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    TermMap terms_;
};

struct GeneratorInfo {
    std::string symbol;  // "X", "Y" or "Z"
    int row = 0;
    int col = 0;
    int slot = 0;  // tensor factor index
    bool invertible = false;
    DegreeVector degree;

    [[nodiscard]] std::string name() const;
};

struct Correction {
    LaurentInt coef;
    Monomial word;
};

/// high * low = swap * low * high + sum of corrections.
struct RewriteRule {
    int high = 0;
    int low = 0;
    LaurentInt swap{1};
    std::vector<Correction> corrections;

    [[nodiscard]] bool pure() const { return corrections.empty(); }
};

using Letter = std::pair<int, int>;  // (generator, +1 or -1)

/// Immutable presented algebra. Copies share the rules and the product cache.
class Presentation {
public:
    Presentation(std::vector<GeneratorInfo> generators, const std::vector<RewriteRule>& rules, int grading_rank,
                 int slot_count = 1);

    [[nodiscard]] int size() const;
    [[nodiscard]] int grading_rank() const;
    [[nodiscard]] int slot_count() const;
    [[nodiscard]] const GeneratorInfo& generator(int g) const;
    [[nodiscard]] const std::vector<GeneratorInfo>& generators() const;
    /// Rule for an unordered pair of distinct generators.
    [[nodiscard]] const RewriteRule& rule(int a, int b) const;
    [[nodiscard]] std::vector<RewriteRule> rules() const;
    /// True when no rule carries correction terms.
    [[nodiscard]] bool pure() const;
    [[nodiscard]] bool has_invertible() const;
    /// Generator index by symbol and position; slot -1 matches any slot.
    [[nodiscard]] std::optional<int> find(const std::string& symbol, int row, int col, int slot = -1) const;
    /// Like find but throws UnknownGenerator.
    [[nodiscard]] int index(const std::string& symbol, int row, int col, int slot = -1) const;
    [[nodiscard]] bool same_as(const Presentation& other) const { return data_ == other.data_; }

    [[nodiscard]] Element gen(int g, int e = 1) const;
    [[nodiscard]] Element gen(const std::string& symbol, int row, int col, int e = 1) const;
    [[nodiscard]] Element multiply(const Element& a, const Element& b) const;
    [[nodiscard]] Element multiply(std::initializer_list<Element> factors) const;
    [[nodiscard]] Element power(const Element& a, int e) const;
    /// Normal form of a word of letters or signed powers, evaluated left to right.
    [[nodiscard]] Element normal_form(const std::vector<std::pair<int, int>>& word) const;
    /// Multiplicative inverse of a unit monomial c*m (c = +-q^k, generators of m invertible).
    [[nodiscard]] Element unit_inverse(const Element& a) const;
    /// Throws when the element uses unknown generators or illegal negative powers.
    void check(const Element& x) const;

    [[nodiscard]] DegreeVector degree(const Monomial& m) const;
    /// Common multidegree of all terms; nullopt when not homogeneous (zero has degree 0).
    [[nodiscard]] std::optional<DegreeVector> multidegree(const Element& x) const;

    /// Normal form of m * g^s for a normal monomial m and s = +-1.
    [[nodiscard]] Element mul_letter(const Monomial& m, int g, int s) const;
    [[nodiscard]] std::size_t cache_size() const;

private:
    struct Data;
    std::shared_ptr<Data> data_;

    [[nodiscard]] Element mul_letter_uncached(const Monomial& m, int g, int s) const;
    [[nodiscard]] Element mul_element_letter(const Element& e, int g, int s) const;
    [[nodiscard]] Element mul_mono_word(const Monomial& m, const Monomial& w) const;
};

struct Quotient {
    Presentation presentation;
    /// Old generator index -> new index, or -1 when killed.
    std::vector<int> image;
};

Quotient quotient_by_generators(const Presentation& p, const std::vector<int>& kill);
Presentation localize(const Presentation& p, const std::vector<int>& invert);
/// Generators of a come first, then those of b with slots shifted; cross pairs commute.
Presentation tensor(const Presentation& a, const Presentation& b);
/// Offset of b's generators inside tensor(a, b) is a.size().
Element embed(const Element& x, int offset);

/// Algebra map given by generator images.
class Homomorphism {
public:
    Homomorphism(Presentation src, Presentation dst, std::vector<std::optional<Element>> images);

    [[nodiscard]] const Presentation& source() const { return src_; }
    [[nodiscard]] const Presentation& target() const { return dst_; }
    [[nodiscard]] const std::optional<Element>& image(int g) const { return images_[g]; }
    [[nodiscard]] Element apply(const Element& x) const;
    /// Checks both sides of every defining rule; throws RelationViolated naming the rule.
    void validate() const;
    /// this followed by next.
    [[nodiscard]] Homomorphism then(const Homomorphism& next) const;

private:
    Presentation src_;
    Presentation dst_;
    std::vector<std::optional<Element>> images_;
    std::vector<std::optional<Element>> inverse_images_;
};

/// Projection onto a quotient presentation.
Homomorphism projection(const Presentation& p, const Quotient& q);

}  // namespace qm
