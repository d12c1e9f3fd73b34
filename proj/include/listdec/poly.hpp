#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "listdec/degree.hpp"
#include "listdec/field.hpp"

namespace listdec {

/// Univariate polynomial over a prime field, stored as ascending coefficients
/// in canonical form: no trailing zeros, so the zero polynomial has an empty
/// coefficient vector and degree minus infinity.
class Poly {
public:
    /// The zero polynomial.
    explicit Poly(const PrimeField& field);
    /// From ascending coefficients; residues are reduced mod q and trailing
    /// zeros pruned.
    Poly(const PrimeField& field, const std::vector<std::uint64_t>& coeffs);

    static Poly monomial(const PrimeField& field, const FieldElement& c, std::size_t d);
    static Poly constant(const PrimeField& field, std::uint64_t c);
    /// From ascending signed coefficients (convenient for -1 entries).
    static Poly from_signed(const PrimeField& field, const std::vector<std::int64_t>& coeffs);

    PrimeField field() const noexcept { return field_; }
    Degree degree() const noexcept;
    bool is_zero() const noexcept { return c_.empty(); }

    /// Coefficient of X^i (zero beyond the degree).
    FieldElement coeff(std::size_t i) const noexcept;
    FieldElement leading_coeff() const;
    const std::vector<std::uint64_t>& residues() const noexcept { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const FieldElement& rhs);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const FieldElement& b) { return a *= b; }
    friend Poly operator*(const FieldElement& a, Poly b) { return b *= a; }

    /// Quotient and remainder with deg r < deg b; b must be nonzero.
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);

    /// Horner evaluation.
    FieldElement operator()(const FieldElement& x) const;

    /// Multiply by X^d.
    Poly times_x_power(std::size_t d) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Total order on canonical coefficient vectors (for deterministic sets).
    static bool lex_less(const Poly& a, const Poly& b);

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        return os << p.to_string();
    }

private:
    void prune();
    void require_same_field(const Poly& other) const;

    PrimeField field_;
    std::vector<std::uint64_t> c_;
};

/// Monic product (X - r_0)...(X - r_{m-1}).
Poly poly_from_roots(const PrimeField& field, std::span<const FieldElement> roots);

/// Unique polynomial of degree < m through m points with distinct x values;
/// duplicate x values or an empty point list are invalid.
Poly lagrange_interpolate(const PrimeField& field,
                          std::span<const std::pair<FieldElement, FieldElement>> points);

/// p(X + a), by repeated synthetic division at a.
Poly taylor_shift(const Poly& p, const FieldElement& a);

}  // namespace listdec
