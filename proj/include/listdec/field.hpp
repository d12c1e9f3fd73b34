#pragma once

#include <cstdint>

namespace listdec {

class FieldElement;

/// Prime field F_q with a desk-scale modulus (3 <= q < 2^20, q prime).
/// The modulus is verified by trial division at construction; field contexts
/// are immutable afterwards and freely copyable.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t q);

    std::uint64_t modulus() const noexcept { return q_; }

    /// Element from a nonnegative residue (reduced mod q).
    FieldElement element(std::uint64_t residue) const noexcept;
    /// Element from a possibly negative integer (reduced into [0, q)).
    FieldElement element_from_signed(std::int64_t value) const noexcept;
    FieldElement zero() const noexcept;
    FieldElement one() const noexcept;

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
        return a.q_ == b.q_;
    }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) noexcept {
        return a.q_ != b.q_;
    }

private:
    struct Unchecked {};
    constexpr PrimeField(std::uint64_t q, Unchecked) noexcept : q_(q) {}
    friend class FieldElement;

    std::uint64_t q_;
};

/// Value in a prime field. Elements carry their modulus, so containers can
/// mix values from different calls freely, but every binary operation insists
/// both operands belong to the same field and throws otherwise.
class FieldElement {
public:
    FieldElement(const PrimeField& field, std::uint64_t residue) noexcept
        : v_(residue % field.modulus()), q_(field.modulus()) {}

    std::uint64_t value() const noexcept { return v_; }
    PrimeField field() const noexcept { return PrimeField(q_, PrimeField::Unchecked{}); }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement operator-() const noexcept;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    /// Multiplicative inverse; division by zero is a domain error.
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t exponent) const noexcept;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b);

private:
    void require_same_field(const FieldElement& other) const;

    std::uint64_t v_;
    std::uint64_t q_;
};

/// Binomial coefficient C(n, j) reduced into F_q (Pascal's rule mod q, so
/// large n never overflows; the reduced value can legitimately be zero).
FieldElement binomial(const PrimeField& field, unsigned n, unsigned j);

}  // namespace listdec
