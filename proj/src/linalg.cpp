#include "qm/linalg.hpp"

#include <algorithm>
#include <utility>

namespace qm::linalg {

namespace {

using ModRow = std::vector<std::uint64_t>;

std::uint64_t inv_mod(std::uint64_t a) { return powmod(a, kModPrime - 2); }

ModRow to_mod(const Row& r) {
    ModRow out(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) out[k] = r[k].is_zero() ? 0 : eval_mod(r[k], kEvalPoint);
    return out;
}

// Reduce v against an echelon basis (pivot column per basis row, pivot = 1).
void reduce_mod(ModRow& v, const std::vector<ModRow>& basis, const std::vector<std::size_t>& pivots) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::uint64_t f = v[pivots[b]];
        if (f == 0) continue;
        const std::uint64_t neg = kModPrime - f;
        const ModRow& br = basis[b];
        for (std::size_t k = 0; k < v.size(); ++k)
            if (br[k]) {
                v[k] += mulmod(neg, br[k]);
                if (v[k] >= kModPrime) v[k] -= kModPrime;
            }
    }
}

bool better_pivot(const LaurentInt& a, const LaurentInt& b) {
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
    return a.spread() < b.spread();
}

// Fraction-free forward elimination. Rows at index >= protect_from are never
// chosen as pivots. Returns the pivot count; on return rows[0..rank) are the
// pivot rows and the rest are reduced. perm tracks original row positions.
// Stops early (returning nullopt) if a protected row keeps a non-zero entry
// in a column that has no pivot.
std::optional<std::size_t> bareiss(std::vector<Row>& m, std::size_t protect_from, std::size_t cols,
                                   std::vector<std::size_t>* perm) {
    LaurentInt prev(1);
    std::size_t rank = 0;
    const std::size_t nrows = m.size();
    const std::size_t width = nrows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && rank < nrows; ++col) {
        std::size_t best = nrows;
        for (std::size_t r = rank; r < std::min(protect_from, nrows); ++r) {
            if (m[r][col].is_zero()) continue;
            if (best == nrows || better_pivot(m[r][col], m[best][col])) best = r;
        }
        if (best == nrows) {
            for (std::size_t r = std::max(rank, protect_from); r < nrows; ++r)
                if (!m[r][col].is_zero()) return std::nullopt;
            continue;
        }
        std::swap(m[rank], m[best]);
        if (perm) std::swap((*perm)[rank], (*perm)[best]);
        const Row& p = m[rank];
        const LaurentInt& pv = p[col];
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            Row& row = m[r];
            const LaurentInt f = row[col];
            for (std::size_t c = col + 1; c < width; ++c) {
                if (f.is_zero()) {
                    if (row[c].is_zero()) continue;
                    row[c] = (pv * row[c]).divexact(prev);
                } else {
                    LaurentInt v = pv * row[c] - f * p[c];
                    row[c] = v.is_zero() ? LaurentInt() : v.divexact(prev);
                }
            }
            row[col] = LaurentInt();
        }
        prev = pv;
        ++rank;
    }
    return rank;
}

}  // namespace

ModSelection modular_select(const std::vector<Row>& rows, const Row* target) {
    ModSelection out;
    std::vector<ModRow> basis;
    std::vector<std::size_t> pivots;
    const std::size_t cols = rows.empty() ? (target ? target->size() : 0) : rows[0].size();
    for (std::size_t i = 0; i < rows.size() && basis.size() < cols; ++i) {
        ModRow v = to_mod(rows[i]);
        reduce_mod(v, basis, pivots);
        std::size_t pc = 0;
        while (pc < v.size() && v[pc] == 0) ++pc;
        if (pc == v.size()) continue;
        const std::uint64_t inv = inv_mod(v[pc]);
        for (auto& x : v) x = mulmod(x, inv);
        // keep the basis fully reduced at the new pivot column
        for (auto& b : basis) {
            const std::uint64_t f = b[pc];
            if (!f) continue;
            const std::uint64_t neg = kModPrime - f;
            for (std::size_t k = 0; k < b.size(); ++k)
                if (v[k]) {
                    b[k] += mulmod(neg, v[k]);
                    if (b[k] >= kModPrime) b[k] -= kModPrime;
                }
        }
        basis.push_back(std::move(v));
        pivots.push_back(pc);
        out.independent.push_back(i);
    }
    if (target) {
        ModRow v = to_mod(*target);
        reduce_mod(v, basis, pivots);
        out.target_in_span = std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
    }
    return out;
}

SpanResult exact_span(const std::vector<Row>& rows, const Row& target, bool certificate) {
    SpanResult res;
    const std::size_t k = rows.size();
    const std::size_t cols = target.size();
    std::vector<Row> m;
    m.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
        Row r = i < k ? rows[i] : target;
        if (certificate) {
            r.resize(cols + k + 1);
            r[cols + i] = LaurentInt(1);
        }
        m.push_back(std::move(r));
    }
    std::vector<std::size_t> perm(k + 1);
    for (std::size_t i = 0; i <= k; ++i) perm[i] = i;
    auto rank = bareiss(m, k, cols, &perm);
    if (!rank) return res;
    const Row& f = m.back();
    for (std::size_t c = 0; c < cols; ++c)
        if (!f[c].is_zero()) return res;
    res.member = true;
    if (certificate) {
        // f-row = a_f * target + sum a_i rows_i = 0
        res.scale = f[cols + k];
        res.combination.resize(k);
        for (std::size_t i = 0; i < k; ++i) res.combination[i] = -f[cols + i];
    }
    return res;
}

std::size_t exact_rank(std::vector<Row> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    return *bareiss(rows, rows.size(), cols, nullptr);
}

Row make_primitive(Row v) {
    LaurentInt g;
    for (const auto& x : v)
        if (!x.is_zero()) g = g.is_zero() ? gcd(x, x) : gcd(g, x);
    if (g.is_zero()) return v;
    for (auto& x : v)
        if (!x.is_zero()) x = x.divexact(g);
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        LaurentInt unit(BigInt(x.leading_coefficient() < 0 ? -1 : 1), -x.min_exponent());
        for (auto& y : v) y = y * unit;
        break;
    }
    return v;
}

std::vector<Row> left_nullspace(const std::vector<Row>& rows) {
    std::vector<Row> out;
    const std::size_t k = rows.size();
    if (k == 0) return out;
    const std::size_t cols = rows[0].size();
    std::vector<Row> m;
    for (std::size_t i = 0; i < k; ++i) {
        Row r = rows[i];
        r.resize(cols + k);
        r[cols + i] = LaurentInt(1);
        m.push_back(std::move(r));
    }
    const std::size_t rank = *bareiss(m, k, cols, nullptr);
    for (std::size_t i = rank; i < k; ++i)
        out.push_back(make_primitive(Row(m[i].begin() + static_cast<std::ptrdiff_t>(cols), m[i].end())));
    return out;
}

}  // namespace qm::linalg
