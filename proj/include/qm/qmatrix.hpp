#pragma once

// The quantum matrix algebra O_q(M_n): presentation, quantum minors,
// bialgebra maps and index-set combinatorics.

#include "qm/pbw.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qm {

/// Strictly increasing indices in 1..n.
using IndexSet = std::vector<int>;

struct MinorKey {
    IndexSet rows;
    IndexSet cols;
    friend bool operator==(const MinorKey&, const MinorKey&) = default;
};

/// Generators X[i,j] in row-major order; grading Z^{2n} (rows then columns).
Presentation oqm_presentation(int n);
/// A (x) A with X in both slots.
Presentation oqm_tensor_square(int n);
/// Index of X[i,j] (1-based) in oqm_presentation(n).
inline int xgen(int n, int i, int j) { return (i - 1) * n + (j - 1); }

/// Laplace recursion along the largest column; memoized.
Element quantum_minor(int n, const IndexSet& rows, const IndexSet& cols);
inline Element quantum_minor(int n, const MinorKey& k) { return quantum_minor(n, k.rows, k.cols); }
/// Permutation sum with (-q)^{inv} weights; capped at size 6.
Element quantum_minor_perm(int n, const IndexSet& rows, const IndexSet& cols);

Homomorphism comultiplication(int n);
Element comultiply(int n, const Element& x);
LaurentInt counit(int n, const Element& x);
Homomorphism transpose_hom(int n);
Element transpose_tau(int n, const Element& x);

/// Componentwise order on index sets of equal size; throws SizeMismatch.
bool indexset_leq(const IndexSet& a, const IndexSet& b);
/// a <= b and a != b.
bool indexset_less(const IndexSet& a, const IndexSet& b);
/// #{(i,j) in I x J : i > j}.
int inversion_count(const IndexSet& I, const IndexSet& J);

/// All k-subsets of 1..n in lexicographic order.
std::vector<IndexSet> subsets(int n, int k);
/// All subsets of the given set, grouped by size.
std::vector<IndexSet> subsets_of(const IndexSet& s, int k);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_minus(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
IndexSet with(const IndexSet& a, int x);
IndexSet without(const IndexSet& a, int x);
bool contains(const IndexSet& a, int x);
/// #{i in I : lo < i < hi} with open/closed ends chosen by the caller.
int count_between(const IndexSet& I, int lo, bool lo_closed, int hi, bool hi_closed);

std::string format_index_set(const IndexSet& s);
/// `[1 2|1 3]`, empty minor `[|]`.
std::string format_minor_key(const MinorKey& k);
MinorKey parse_minor_key(std::string_view text, int n);

}  // namespace qm
