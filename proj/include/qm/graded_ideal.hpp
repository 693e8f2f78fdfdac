#pragma once

// Two-sided ideals generated by multihomogeneous elements, with exact
// membership decided one homogeneous component at a time.

#include "qm/linalg.hpp"
#include "qm/pbw.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qm {

/// All ordered monomials of multidegree exactly d (d >= 0 componentwise).
std::vector<Monomial> homogeneous_component_basis(const Presentation& p, const DegreeVector& d);

/// Monomials whose multidegree is <= d componentwise (including 1).
std::vector<Monomial> monomials_below(const Presentation& p, const DegreeVector& d);

struct CertificateTerm {
    int generator = 0;
    Monomial left;
    Monomial right;
    LaurentInt coef;
};

/// scale * f = sum coef * left * gens[generator] * right
struct Certificate {
    LaurentInt scale;
    std::vector<CertificateTerm> terms;
};

struct MembershipResult {
    bool member = false;
    std::optional<Certificate> certificate;
    std::size_t rows = 0;     // spanning products assembled
    std::size_t columns = 0;  // component dimension
};

class GradedIdeal {
public:
    /// Throws LocalizedAmbient or NotHomogeneous; zero generators are dropped.
    GradedIdeal(Presentation ambient, std::vector<Element> generators);

    [[nodiscard]] const Presentation& ambient() const { return ambient_; }
    [[nodiscard]] const std::vector<Element>& generators() const { return gens_; }
    [[nodiscard]] const DegreeVector& generator_degree(std::size_t k) const { return degrees_[k]; }

    /// Throws NotHomogeneous for inhomogeneous f.
    [[nodiscard]] MembershipResult contains(const Element& f, bool want_certificate = false) const;
    /// Dimension of the ideal's component in degree d.
    [[nodiscard]] std::size_t component_dimension(const DegreeVector& d) const;
    /// Rank of the spanning set at q = kEvalPoint mod p; a lower bound for
    /// component_dimension.
    [[nodiscard]] std::size_t modular_component_dimension(const DegreeVector& d) const;

private:
    Presentation ambient_;
    std::vector<Element> gens_;
    std::vector<DegreeVector> degrees_;

    struct Assembly {
        std::vector<linalg::Row> rows;
        std::vector<CertificateTerm> origin;  // coef holds the unit the row was divided by
    };
    [[nodiscard]] Assembly assemble(const DegreeVector& d, const std::vector<Monomial>& basis) const;
};

/// Recomputes sum coef * left * g * right and compares with scale * f.
bool verify_certificate(const GradedIdeal& ideal, const Element& f, const Certificate& cert);

/// Coordinates of a homogeneous element in the given basis.
linalg::Row coordinates(const Element& x, const std::vector<Monomial>& basis);

}  // namespace qm
