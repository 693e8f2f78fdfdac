#pragma once

// Exact Laurent polynomials in q over arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qm {

using BigInt = boost::multiprecision::cpp_int;

/// Element of Z[q, q^-1]. Terms are kept sorted by ascending exponent with
/// no zero coefficients, so structural equality is mathematical equality.
class LaurentInt {
public:
    using Term = std::pair<int, BigInt>;

    LaurentInt() = default;
    LaurentInt(long value);  // NOLINT(google-explicit-constructor): integer literals are scalars
    LaurentInt(const BigInt& coef, int exponent);

    /// q^k
    static LaurentInt q(int k = 1);
    /// (sign * q)^k, sign in {+1, -1}.
    static LaurentInt signed_power(int sign, int k);
    /// q - q^-1
    static LaurentInt qhat();

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_one() const;
    /// True for +-q^k.
    [[nodiscard]] bool is_unit() const;
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] int min_exponent() const;
    [[nodiscard]] int max_exponent() const;
    /// max_exponent - min_exponent, 0 for the zero value.
    [[nodiscard]] int spread() const;
    [[nodiscard]] BigInt coefficient(int exponent) const;
    [[nodiscard]] const BigInt& leading_coefficient() const;

    LaurentInt& operator+=(const LaurentInt& other);
    LaurentInt& operator-=(const LaurentInt& other);
    LaurentInt& operator*=(const LaurentInt& other);
    [[nodiscard]] LaurentInt operator-() const;

    /// Multiply by q^k.
    [[nodiscard]] LaurentInt shifted(int k) const;
    /// Inverse of a unit +-q^k. Throws std::domain_error for non-units.
    [[nodiscard]] LaurentInt unit_inverse() const;
    /// Exact quotient; throws std::domain_error when the divisor does not divide.
    [[nodiscard]] LaurentInt divexact(const LaurentInt& divisor) const;
    /// Gcd of the integer coefficients (non-negative; 0 for zero).
    [[nodiscard]] BigInt content() const;
    [[nodiscard]] LaurentInt divided_by_integer(const BigInt& d) const;

    /// Canonical text, descending exponents: `q^2 - 1`, `-q^-1`, `3*q - 2`.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentInt& a, const LaurentInt& b) { return !(a == b); }
    friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
    friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
    friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);

    [[nodiscard]] std::size_t hash() const;

    /// Re-establish the canonical form from an arbitrary term list.
    static LaurentInt from_terms(std::vector<Term> terms);

private:
    std::vector<Term> terms_;
};

/// Gcd in Z[q, q^-1], normalized to a polynomial with non-zero constant term
/// and positive leading coefficient (defined up to units +-q^k).
LaurentInt gcd(const LaurentInt& a, const LaurentInt& b);

/// Value at q = q0 modulo the prime 2^61 - 1 (q0 must be a non-zero residue).
std::uint64_t eval_mod(const LaurentInt& a, std::uint64_t q0);
inline constexpr std::uint64_t kModPrime = (std::uint64_t{1} << 61) - 1;
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e);

}  // namespace qm
