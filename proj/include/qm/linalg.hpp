#pragma once

// Dense linear algebra over Z[q, q^-1]: fraction-free elimination, a modular
// rank prefilter, span membership with certificates, left nullspaces.

#include "qm/laurent.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qm::linalg {

using Row = std::vector<LaurentInt>;

/// Evaluation point used by the prefilter; any non-zero residue works.
inline constexpr std::uint64_t kEvalPoint = 982451653;

struct ModSelection {
    std::vector<std::size_t> independent;  // indices into rows, independent mod p
    bool target_in_span = false;
};

/// Greedy row selection over GF(p) with q := kEvalPoint. Rank mod p never
/// exceeds the rank over Q(q), so independent rows stay independent.
ModSelection modular_select(const std::vector<Row>& rows, const Row* target = nullptr);

struct SpanResult {
    bool member = false;
    /// scale * target = sum_i combination[i] * rows[i] when member.
    LaurentInt scale;
    std::vector<LaurentInt> combination;
};

/// Exact test of target in the Q(q)-span of rows (fraction-free).
SpanResult exact_span(const std::vector<Row>& rows, const Row& target, bool certificate);

/// Rank over Q(q).
std::size_t exact_rank(std::vector<Row> rows);

/// Basis of {v : sum_i v[i] * rows[i] = 0}, each vector made primitive.
std::vector<Row> left_nullspace(const std::vector<Row>& rows);

/// Divide by the polynomial gcd of the entries and fix the unit so the first
/// non-zero entry has lowest exponent 0 and a positive top coefficient.
Row make_primitive(Row v);

}  // namespace qm::linalg
