#include "listdec/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace listdec {

Poly::Poly(const PrimeField& field) : field_(field) {}

Poly::Poly(const PrimeField& field, const std::vector<std::uint64_t>& coeffs) : field_(field) {
    c_.reserve(coeffs.size());
    for (std::uint64_t c : coeffs) c_.push_back(c % field.modulus());
    prune();
}

Poly Poly::monomial(const PrimeField& field, const FieldElement& c, std::size_t d) {
    Poly p(field);
    if (!c.is_zero()) {
        p.c_.assign(d + 1, 0);
        p.c_[d] = c.value();
    }
    return p;
}

Poly Poly::constant(const PrimeField& field, std::uint64_t c) {
    return Poly(field, std::vector<std::uint64_t>{c});
}

Poly Poly::from_signed(const PrimeField& field, const std::vector<std::int64_t>& coeffs) {
    Poly p(field);
    p.c_.reserve(coeffs.size());
    for (std::int64_t c : coeffs) p.c_.push_back(field.element_from_signed(c).value());
    p.prune();
    return p;
}

void Poly::prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::require_same_field(const Poly& other) const {
    if (field_ != other.field_) {
        throw std::invalid_argument("Poly: operands from different fields");
    }
}

Degree Poly::degree() const noexcept {
    if (c_.empty()) return Degree::neg_inf();
    return Degree(static_cast<int>(c_.size()) - 1);
}

FieldElement Poly::coeff(std::size_t i) const noexcept {
    return field_.element(i < c_.size() ? c_[i] : 0);
}

FieldElement Poly::leading_coeff() const {
    if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
    return field_.element(c_.back());
}

Poly Poly::operator-() const {
    Poly r = *this;
    const std::uint64_t q = field_.modulus();
    for (std::uint64_t& c : r.c_) {
        if (c != 0) c = q - c;
    }
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_field(rhs);
    const std::uint64_t q = field_.modulus();
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) {
        c_[i] += rhs.c_[i];
        if (c_[i] >= q) c_[i] -= q;
    }
    prune();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_field(rhs);
    const std::uint64_t q = field_.modulus();
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) {
        c_[i] = c_[i] >= rhs.c_[i] ? c_[i] - rhs.c_[i] : c_[i] + q - rhs.c_[i];
    }
    prune();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    require_same_field(rhs);
    if (is_zero() || rhs.is_zero()) {
        c_.clear();
        return *this;
    }
    const std::uint64_t q = field_.modulus();
    std::vector<std::uint64_t> out(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            out[i + j] = (out[i + j] + c_[i] * rhs.c_[j]) % q;
        }
    }
    c_ = std::move(out);
    prune();
    return *this;
}

Poly& Poly::operator*=(const FieldElement& rhs) {
    if (field_ != rhs.field()) {
        throw std::invalid_argument("Poly: scalar from a different field");
    }
    if (rhs.is_zero()) {
        c_.clear();
        return *this;
    }
    const std::uint64_t q = field_.modulus();
    for (std::uint64_t& c : c_) c = c * rhs.value() % q;
    return *this;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    a.require_same_field(b);
    if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly quotient(a.field_);
    Poly remainder = a;
    if (a.c_.size() < b.c_.size()) return {quotient, remainder};

    const std::uint64_t q = a.field_.modulus();
    const std::uint64_t inv_lead = b.leading_coeff().inverse().value();
    quotient.c_.assign(a.c_.size() - b.c_.size() + 1, 0);
    for (std::size_t i = quotient.c_.size(); i-- > 0;) {
        const std::size_t top = i + b.c_.size() - 1;
        if (top >= remainder.c_.size() || remainder.c_[top] == 0) continue;
        const std::uint64_t factor = remainder.c_[top] * inv_lead % q;
        quotient.c_[i] = factor;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            const std::uint64_t sub = factor * b.c_[j] % q;
            std::uint64_t& cell = remainder.c_[i + j];
            cell = cell >= sub ? cell - sub : cell + q - sub;
        }
    }
    quotient.prune();
    remainder.prune();
    return {quotient, remainder};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

FieldElement Poly::operator()(const FieldElement& x) const {
    if (field_ != x.field()) {
        throw std::invalid_argument("Poly: evaluation point from a different field");
    }
    const std::uint64_t q = field_.modulus();
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = (acc * x.value() + c_[i]) % q;
    }
    return field_.element(acc);
}

Poly Poly::times_x_power(std::size_t d) const {
    if (is_zero() || d == 0) return *this;
    Poly r(field_);
    r.c_.assign(d, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(field_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Poly& a, const Poly& b) {
    a.require_same_field(b);
    return a.c_ == b.c_;
}

bool Poly::lex_less(const Poly& a, const Poly& b) {
    a.require_same_field(b);
    return a.c_ < b.c_;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i >= 1) {
            if (c_[i] != 1) os << "*";
            os << "X";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_from_roots(const PrimeField& field, std::span<const FieldElement> roots) {
    Poly p = Poly::constant(field, 1);
    for (const FieldElement& r : roots) {
        p *= Poly(field, std::vector<std::uint64_t>{(-r).value(), 1});
    }
    return p;
}

Poly lagrange_interpolate(const PrimeField& field,
                          std::span<const std::pair<FieldElement, FieldElement>> points) {
    if (points.empty()) {
        throw std::invalid_argument("lagrange_interpolate: no points");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("lagrange_interpolate: duplicate x value " +
                                            std::to_string(points[i].first.value()));
            }
        }
    }
    std::vector<FieldElement> xs;
    xs.reserve(points.size());
    for (const auto& p : points) xs.push_back(p.first);
    const Poly full = poly_from_roots(field, xs);

    Poly acc(field);
    for (const auto& [x, y] : points) {
        if (y.is_zero()) continue;
        const Poly num = full / Poly(field, std::vector<std::uint64_t>{(-x).value(), 1});
        acc += num * (y / num(x));
    }
    return acc;
}

Poly taylor_shift(const Poly& p, const FieldElement& a) {
    if (p.field() != a.field()) {
        throw std::invalid_argument("taylor_shift: shift from a different field");
    }
    if (p.is_zero() || a.is_zero()) return p;
    const std::uint64_t q = p.field().modulus();
    std::vector<std::uint64_t> c = p.residues();
    // Repeated synthetic division at a turns the coefficients in place into
    // those of p(X + a).
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        for (std::size_t j = c.size() - 1; j-- > i;) {
            c[j] = (c[j] + a.value() * c[j + 1]) % q;
        }
    }
    return Poly(p.field(), c);
}

}  // namespace listdec
