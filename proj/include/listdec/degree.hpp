#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>

namespace listdec {

/// Degree of a univariate polynomial: an integer, or minus infinity for the
/// zero polynomial. Minus infinity compares strictly below every finite
/// degree and absorbs addition, which keeps formulas like deg(a*b) =
/// deg(a) + deg(b) valid without special cases.
class Degree {
public:
    constexpr Degree(int value) noexcept : finite_(true), v_(value) {}

    static constexpr Degree neg_inf() noexcept { return Degree(); }

    constexpr bool is_neg_inf() const noexcept { return !finite_; }
    constexpr bool is_finite() const noexcept { return finite_; }

    /// Finite value; calling this on minus infinity is a logic error.
    int value() const {
        if (!finite_) throw std::logic_error("Degree: value() of minus infinity");
        return v_;
    }

    friend constexpr Degree operator+(Degree a, Degree b) noexcept {
        if (!a.finite_ || !b.finite_) return neg_inf();
        return Degree(a.v_ + b.v_);
    }

    friend constexpr bool operator==(Degree a, Degree b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (a.finite_ != b.finite_) return a.finite_ <=> b.finite_;
        if (!a.finite_) return std::strong_ordering::equal;
        return a.v_ <=> b.v_;
    }

    friend std::ostream& operator<<(std::ostream& os, Degree d) {
        if (d.finite_) return os << d.v_;
        return os << "-inf";
    }

private:
    constexpr Degree() noexcept : finite_(false), v_(0) {}

    bool finite_;
    int v_;
};

constexpr Degree max(Degree a, Degree b) noexcept { return a < b ? b : a; }

}  // namespace listdec
