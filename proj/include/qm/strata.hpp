#pragma once

// Stratification data for O_q(M_n): step pairs (r,c), the ideals K_rc, the
// step algebras R+_r and R-_c, the maps beta_rc and kappa, the stratum
// search over a minor-membership oracle, H-prime counts and the n=2 catalog.

#include "qm/graded_ideal.hpp"
#include "qm/qmatrix.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qm {

struct StepPair {
    IndexSet r;
    IndexSet c;
    [[nodiscard]] int t() const { return static_cast<int>(r.size()); }
    friend bool operator==(const StepPair&, const StepPair&) = default;
    friend auto operator<=>(const StepPair&, const StepPair&) = default;
};

/// `r=(1,3);c=(2,3)`, empty sequences as `()`.
std::string format_step_pair(const StepPair& p);
StepPair parse_step_pair(std::string_view text, int n);
void check_step_pair(int n, const StepPair& p);

std::vector<StepPair> enumerate_rc(int n, int t);

/// Minor keys generating K_rc, in size order then lexicographic.
std::vector<MinorKey> krc_keys(int n, const StepPair& p);
GradedIdeal krc_generators(int n, const StepPair& p);
/// [r_1..r_l | c_1..c_l]; d_0 = 1.
Element drc(int n, const StepPair& p, int l);

/// R+_{r,0} (or R+_r when localized) on survivors Y[i,j], j <= t, i >= r_j.
Presentation step_algebra_plus(int n, const IndexSet& r, bool localized);
/// R-_{c,0} (or R-_c) on survivors Z[i,j], i <= t, j >= c_i.
Presentation step_algebra_minus(int n, const IndexSet& c, bool localized);
/// Indices of the killed X generators for each step pattern.
std::vector<int> plus_kill_set(int n, const IndexSet& r);
std::vector<int> minus_kill_set(int n, const IndexSet& c);

/// beta_rc : A -> R+_r (x) R-_c, validated on construction; memoized.
const Homomorphism& beta_map(int n, const StepPair& p);

using Position = std::pair<int, int>;

struct BrcElements {
    std::map<Position, Element> y;  // Y[i,j] Y[r_j,j]^-1 in R+_r
    std::map<Position, Element> z;  // Z[l,m] Z[l,c_l]^-1 in R-_c
    std::map<Position, Element> u;  // [r_1..r_{j-1} i | c_1..c_j] in A
    std::map<Position, Element> w;  // [r_1..r_l | c_1..c_{l-1} m] in A
    std::vector<Element> pivot;     // pivot[s-1] = Y[r_s,s] (x) Z[s,c_s]
    std::vector<Element> beta_d;    // product formula for beta(d_l), l = 0..t
};
BrcElements brc_elements(int n, const StepPair& p);

/// A kill set in each step algebra, given by generator positions.
struct HPrimeSpec {
    StepPair pair;
    std::vector<Position> q_plus;
    std::vector<Position> q_minus;
    std::vector<Element> known_generators;  // in A; empty when not transcribed
};

/// beta followed by the projection onto (R+_r / Q+) (x) (R-_c / Q-).
Homomorphism kappa_map(int n, const HPrimeSpec& spec);

using MinorOracle = std::function<bool(const MinorKey&)>;
/// Stratum search; the oracle answers "minor lies in P".
StepPair stratum_of(int n, const MinorOracle& in_ideal);

/// All subsets of the non-invertible generators; needs a presentation
/// without corrections.
std::vector<std::vector<int>> hspec_qaffine(const Presentation& p);
/// (sum_r |H-spec R+_r|)^2 when every R+_r at this t is q-affine.
std::optional<std::uint64_t> hspec_count(int n, int t);

/// The fourteen n=2 entries, ordered by t, then pair, then kill sets.
std::vector<HPrimeSpec> hspec_m2_catalog();

/// Multidegrees (rows; cols) of total degree k for O_q(M_n).
std::vector<DegreeVector> multidegrees(int n, int k);

/// dim of ker(h) restricted to the degree-d component of the source.
std::size_t kernel_dimension(const Homomorphism& h, const DegreeVector& d);
/// Primitive basis of ker(h) in degree d.
std::vector<Element> kernel_basis(const Homomorphism& h, const DegreeVector& d);
/// Generators of ker(h) found up to the given total degree: kernel vectors
/// not already in the ideal generated by earlier ones.
std::vector<Element> kernel_generators(const Homomorphism& h, int n, int max_degree);

}  // namespace qm
