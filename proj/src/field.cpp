#include "listdec/field.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace listdec {

namespace {

bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
    if (q < 3) {
        throw std::invalid_argument("PrimeField: modulus must be at least 3, got " +
                                    std::to_string(q));
    }
    if (q >= (1ULL << 20)) {
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(q) +
                                    " exceeds the desk-scale bound 2^20");
    }
    if (!is_prime(q)) {
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(q) +
                                    " is not prime");
    }
}

FieldElement PrimeField::element(std::uint64_t residue) const noexcept {
    return FieldElement(*this, residue);
}

FieldElement PrimeField::element_from_signed(std::int64_t value) const noexcept {
    const std::int64_t q = static_cast<std::int64_t>(q_);
    std::int64_t r = value % q;
    if (r < 0) r += q;
    return FieldElement(*this, static_cast<std::uint64_t>(r));
}

FieldElement PrimeField::zero() const noexcept { return FieldElement(*this, 0); }

FieldElement PrimeField::one() const noexcept { return FieldElement(*this, 1); }

void FieldElement::require_same_field(const FieldElement& other) const {
    if (q_ != other.q_) {
        throw std::invalid_argument("FieldElement: mixed moduli " + std::to_string(q_) +
                                    " and " + std::to_string(other.q_));
    }
}

FieldElement FieldElement::operator-() const noexcept {
    FieldElement r = *this;
    r.v_ = v_ == 0 ? 0 : q_ - v_;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same_field(rhs);
    v_ += rhs.v_;
    if (v_ >= q_) v_ -= q_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    require_same_field(rhs);
    v_ = v_ >= rhs.v_ ? v_ - rhs.v_ : v_ + q_ - rhs.v_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    require_same_field(rhs);
    v_ = v_ * rhs.v_ % q_;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

FieldElement FieldElement::inverse() const {
    if (v_ == 0) throw std::domain_error("FieldElement: inverse of zero");
    return pow(q_ - 2);
}

FieldElement FieldElement::pow(std::uint64_t exponent) const noexcept {
    FieldElement result = field().one();
    FieldElement base = *this;
    while (exponent > 0) {
        if (exponent & 1) result.v_ = result.v_ * base.v_ % q_;
        base.v_ = base.v_ * base.v_ % q_;
        exponent >>= 1;
    }
    return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    a.require_same_field(b);
    return a.v_ == b.v_;
}

bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

FieldElement binomial(const PrimeField& field, unsigned n, unsigned j) {
    if (j > n) return field.zero();
    const std::uint64_t q = field.modulus();
    // Pascal's rule mod q; row r holds C(r, 0..r).
    std::vector<std::uint64_t> row{1};
    for (unsigned r = 1; r <= n; ++r) {
        std::vector<std::uint64_t> next(r + 1, 1);
        for (unsigned i = 1; i < r; ++i) {
            next[i] = (row[i - 1] + row[i]) % q;
        }
        row = std::move(next);
    }
    return field.element(row[j]);
}

}  // namespace listdec
