#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "listdec/codec.hpp"
#include "listdec/degree.hpp"
#include "listdec/poly.hpp"
#include "listdec/polymat.hpp"

namespace listdec {

/// Decoding-capability margin for interpolation multiplicity s, list size
/// ell, radius tau on an (n, k) code:
///   E = (ell+1) s (n - tau) - C(ell+1, 2)(k-1) - C(s+1, 2) n.
/// The triple (s, ell, tau) supports list decoding iff E > 0.
std::int64_t compute_E(int s, int ell, int tau, int n, int k);

/// Largest tau with compute_E(s, ell, tau) > 0, by descending scan from
/// n - 1; empty when even tau = 0 fails.
std::optional<int> decoding_radius(int s, int ell, int n, int k);

struct ParamTriple {
    int s;
    int ell;
    int tau;
};

/// Bivariate polynomial as ascending Y-power coefficients, each a univariate
/// polynomial in X; canonical form drops trailing zero coefficients.
class BivarPoly {
public:
    explicit BivarPoly(const PrimeField& field);
    BivarPoly(const PrimeField& field, std::vector<Poly> y_coeffs);

    static BivarPoly from_row(std::span<const Poly> row);

    PrimeField field() const noexcept { return field_; }
    bool is_zero() const noexcept { return y_.empty(); }
    /// Number of stored Y coefficients (y_degree + 1, or 0 for zero).
    std::size_t y_count() const noexcept { return y_.size(); }
    Degree y_degree() const noexcept;
    /// Coefficient of Y^t (the zero polynomial beyond the Y degree).
    Poly y_coeff(std::size_t t) const;

    /// Q(X, f(X)).
    Poly substitute_y(const Poly& f) const;
    FieldElement eval(const FieldElement& x, const FieldElement& y) const;

    /// max_t deg Q_t + t (k - 1), the (1, k-1)-weighted degree.
    Degree weighted_degree(int k) const;

    friend bool operator==(const BivarPoly& a, const BivarPoly& b);
    friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

private:
    void prune();

    PrimeField field_;
    std::vector<Poly> y_;
};

/// Shared preprocessing for one received word: normalized symbols
/// r'_i = r_i / w_i, the monic locator G = prod (X - a_i), and the Lagrange
/// polynomial R with R(a_i) = r'_i. The received word is a codeword iff
/// deg R < k.
struct InterpolationContext {
    GrsCode code;
    std::vector<FieldElement> rprime;
    Poly G;
    Poly R;
};

InterpolationContext make_context(const GrsCode& code, std::span<const FieldElement> received);

/// True iff Q(X + a, Y + b) has no monomial of total degree below s, i.e. Q
/// vanishes at (a, b) with multiplicity at least s.
bool has_multiplicity(const BivarPoly& q, const FieldElement& a, const FieldElement& b, int s);

/// Multiplicity >= s at every interpolation point (a_i, r'_i).
bool in_interpolation_module(const InterpolationContext& ctx, const BivarPoly& q, int s);

/// Explicit basis of the module of all bivariate polynomials with
/// multiplicity s at every point and Y-degree <= ell, as an
/// (ell+1) x (ell+1) matrix of Y-power coefficients: row t < s holds
/// G^{s-t} (Y - R)^t, row t >= s holds Y^{t-s} (Y - R)^s.
PolyMatrix basis_matrix(const InterpolationContext& ctx, int s, int ell);

/// Reduced basis of the interpolation module at parameters (s, ell):
/// the matrix is in weak Popov form under the degree weights j(k-1), and its
/// determinant degree equals that of the explicit basis, n s(s+1)/2.
class InterpolationState {
public:
    InterpolationState(InterpolationContext ctx, int s, int ell, PolyMatrix basis);

    const InterpolationContext& context() const noexcept { return ctx_; }
    int s() const noexcept { return s_; }
    int ell() const noexcept { return ell_; }
    const PolyMatrix& basis() const noexcept { return basis_; }
    std::int64_t det_degree() const noexcept { return det_degree_; }
    WeightVector weights() const;

private:
    InterpolationContext ctx_;
    int s_;
    int ell_;
    PolyMatrix basis_;
    std::int64_t det_degree_;
};

struct MinimiseResult {
    InterpolationState state;
    /// Weighted orthogonality defect of the input matrix.
    std::int64_t od_before;
    std::size_t transform_count;
};

/// Reduce a generating matrix of the (s, ell) module to weak Popov form under
/// the degree weights and package it as a state.
MinimiseResult minimise(const InterpolationContext& ctx, const PolyMatrix& m, int s, int ell);

/// Unreduced stacks behind the two refinement steps, exposed for audit.
/// Type I keeps the multiplicity and raises the list size: the old basis
/// bordered by a zero column plus the row of Y^{ell-s+1} (Y - R)^s.
PolyMatrix list_extension_stack(const InterpolationContext& ctx, const PolyMatrix& basis,
                                int s, int ell);
/// Type II raises both: G^{s+1} on top, and each old row b mapped to
/// (0 | b) - R (b | 0).
PolyMatrix multiplicity_extension_stack(const InterpolationContext& ctx,
                                        const PolyMatrix& basis, int s, int ell);

/// (s, ell) -> (s, ell+1): stack, reduce, repackage.
MinimiseResult microstep1(const InterpolationState& state);
/// (s, ell) -> (s+1, ell+1).
MinimiseResult microstep2(const InterpolationState& state);

/// Basis row of minimal weighted degree (ties broken by lowest row index),
/// as a bivariate polynomial.
BivarPoly minimal_weighted_row(const InterpolationState& state);

}  // namespace listdec
