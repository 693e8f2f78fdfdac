#include "qm/laurent.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qm {

LaurentInt::LaurentInt(long value) {
    if (value != 0) terms_.emplace_back(0, BigInt(value));
}

LaurentInt::LaurentInt(const BigInt& coef, int exponent) {
    if (coef != 0) terms_.emplace_back(exponent, coef);
}

LaurentInt LaurentInt::q(int k) { return LaurentInt(BigInt(1), k); }

LaurentInt LaurentInt::signed_power(int sign, int k) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("signed_power: sign must be +1 or -1");
    const bool negative = sign < 0 && (k % 2 != 0);
    return LaurentInt(BigInt(negative ? -1 : 1), k);
}

LaurentInt LaurentInt::qhat() { return q(1) - q(-1); }

bool LaurentInt::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

bool LaurentInt::is_unit() const {
    return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

int LaurentInt::min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
int LaurentInt::max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }
int LaurentInt::spread() const { return max_exponent() - min_exponent(); }

BigInt LaurentInt::coefficient(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return 0;
}

const BigInt& LaurentInt::leading_coefficient() const {
    static const BigInt zero = 0;
    return terms_.empty() ? zero : terms_.back().second;
}

namespace {

// Merge two sorted term lists with a sign on the second operand.
std::vector<LaurentInt::Term> merge_terms(const std::vector<LaurentInt::Term>& a,
                                          const std::vector<LaurentInt::Term>& b, bool negate_b) {
    std::vector<LaurentInt::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, negate_b ? BigInt(-b[j].second) : b[j].second);
            ++j;
        } else {
            BigInt c = negate_b ? BigInt(a[i].second - b[j].second) : BigInt(a[i].second + b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentInt& LaurentInt::operator+=(const LaurentInt& other) {
    if (other.terms_.empty()) return *this;
    if (terms_.empty()) return *this = other;
    terms_ = merge_terms(terms_, other.terms_, false);
    return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& other) {
    if (other.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, other.terms_, true);
    return *this;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& other) { return *this = *this * other; }

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (b.terms_.size() == 1) {
        LaurentInt out;
        out.terms_.reserve(a.terms_.size());
        const auto& [eb, cb] = b.terms_[0];
        for (const auto& [ea, ca] : a.terms_) out.terms_.emplace_back(ea + eb, ca * cb);
        return out;
    }
    if (a.terms_.size() == 1) return b * a;
    // Dense accumulation over the exponent window.
    const int lo = a.min_exponent() + b.min_exponent();
    const int hi = a.max_exponent() + b.max_exponent();
    std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    LaurentInt out;
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (acc[k] != 0) out.terms_.emplace_back(lo + static_cast<int>(k), std::move(acc[k]));
    return out;
}

LaurentInt LaurentInt::operator-() const {
    LaurentInt out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

LaurentInt LaurentInt::shifted(int k) const {
    LaurentInt out = *this;
    for (auto& t : out.terms_) t.first += k;
    return out;
}

LaurentInt LaurentInt::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("unit_inverse: " + to_string() + " is not a unit");
    return LaurentInt(terms_[0].second, -terms_[0].first);
}

LaurentInt LaurentInt::divexact(const LaurentInt& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("divexact: division by zero");
    if (is_zero()) return {};
    if (divisor.terms_.size() == 1) {
        const auto& [eb, cb] = divisor.terms_[0];
        LaurentInt out;
        out.terms_.reserve(terms_.size());
        for (const auto& [ea, ca] : terms_) {
            BigInt quot;
            BigInt rem;
            boost::multiprecision::divide_qr(ca, cb, quot, rem);
            if (rem != 0) throw std::domain_error("divexact: inexact integer division");
            out.terms_.emplace_back(ea - eb, std::move(quot));
        }
        return out;
    }
    // Long division from the top exponent downwards.
    LaurentInt rem = *this;
    std::vector<Term> quotient;
    const int floor = min_exponent() - divisor.min_exponent();
    const int db = divisor.max_exponent();
    const BigInt& lb = divisor.leading_coefficient();
    while (!rem.is_zero()) {
        const int shift = rem.max_exponent() - db;
        if (shift < floor) throw std::domain_error("divexact: divisor does not divide");
        BigInt quot;
        BigInt r;
        boost::multiprecision::divide_qr(rem.leading_coefficient(), lb, quot, r);
        if (r != 0) throw std::domain_error("divexact: inexact leading coefficient");
        rem -= divisor * LaurentInt(quot, shift);
        quotient.emplace_back(shift, std::move(quot));
    }
    std::reverse(quotient.begin(), quotient.end());
    LaurentInt out;
    out.terms_ = std::move(quotient);
    return out;
}

BigInt LaurentInt::content() const {
    BigInt g = 0;
    for (const auto& t : terms_) {
        g = boost::multiprecision::gcd(g, t.second);
        if (g == 1) break;
    }
    return g < 0 ? BigInt(-g) : g;
}

LaurentInt LaurentInt::divided_by_integer(const BigInt& d) const {
    LaurentInt out = *this;
    for (auto& t : out.terms_) t.second /= d;
    return out;
}

std::string LaurentInt::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        BigInt c = it->second;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::size_t LaurentInt::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [e, c] : terms_) {
        h ^= std::hash<int>{}(e) + 0x9e3779b9 + (h << 6) + (h >> 2);
        const long low = static_cast<long>(c % 1000000007);
        h ^= std::hash<long>{}(low) + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
}

LaurentInt LaurentInt::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentInt out;
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().first == t.first) {
            out.terms_.back().second += t.second;
            if (out.terms_.back().second == 0) out.terms_.pop_back();
        } else if (t.second != 0) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace qm

namespace qm {

namespace {

using Poly = std::vector<BigInt>;  // ascending coefficients

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt poly_content(const Poly& p) {
    BigInt g = 0;
    for (const auto& c : p) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g < 0 ? BigInt(-g) : g;
}

Poly primitive(Poly p) {
    trim(p);
    if (p.empty()) return p;
    const BigInt c = poly_content(p);
    for (auto& x : p) x /= c;
    if (p.back() < 0)
        for (auto& x : p) x = -x;
    return p;
}

Poly pseudo_remainder(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const BigInt la = a.back();
        for (auto& x : a) x *= lb;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
        trim(a);
        a = primitive(a);
    }
    return a;
}

Poly to_poly(const LaurentInt& a) {
    Poly p;
    if (a.is_zero()) return p;
    const int lo = a.min_exponent();
    p.assign(static_cast<std::size_t>(a.max_exponent() - lo + 1), BigInt(0));
    for (const auto& [e, c] : a.terms()) p[static_cast<std::size_t>(e - lo)] = c;
    return p;
}

}  // namespace

LaurentInt gcd(const LaurentInt& a, const LaurentInt& b) {
    if (a.is_zero() && b.is_zero()) return {};
    Poly x = to_poly(a);
    Poly y = to_poly(b);
    const BigInt content = boost::multiprecision::gcd(poly_content(x), poly_content(y));
    x = primitive(x);
    y = primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        Poly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    x = primitive(x);
    std::vector<LaurentInt::Term> terms;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] != 0) terms.emplace_back(static_cast<int>(k), x[k] * content);
    return LaurentInt::from_terms(std::move(terms));
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kModPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kModPrime) s -= kModPrime;
    return s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t eval_mod(const LaurentInt& a, std::uint64_t q0) {
    const std::uint64_t qinv = powmod(q0, kModPrime - 2);
    std::uint64_t acc = 0;
    for (const auto& [e, c] : a.terms()) {
        BigInt r = c % BigInt(kModPrime);
        if (r < 0) r += BigInt(kModPrime);
        const std::uint64_t cm = static_cast<std::uint64_t>(r);
        const std::uint64_t pw = e >= 0 ? powmod(q0, static_cast<std::uint64_t>(e))
                                        : powmod(qinv, static_cast<std::uint64_t>(-static_cast<long>(e)));
        acc += mulmod(cm, pw);
        if (acc >= kModPrime) acc -= kModPrime;
    }
    return acc;
}

}  // namespace qm
