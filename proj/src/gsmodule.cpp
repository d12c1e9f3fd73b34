#include "listdec/gsmodule.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace listdec {

std::int64_t compute_E(int s, int ell, int tau, int n, int k) {
    if (s < 1 || ell < 1 || n < 1 || k < 1 || k > n || tau < 0) {
        throw std::invalid_argument("compute_E: parameters out of range");
    }
    const std::int64_t S = s, L = ell, T = tau, N = n, K = k;
    return (L + 1) * S * (N - T) - (L + 1) * L / 2 * (K - 1) - (S + 1) * S / 2 * N;
}

std::optional<int> decoding_radius(int s, int ell, int n, int k) {
    for (int tau = n - 1; tau >= 0; --tau) {
        if (compute_E(s, ell, tau, n, k) > 0) return tau;
    }
    return std::nullopt;
}

BivarPoly::BivarPoly(const PrimeField& field) : field_(field) {}

BivarPoly::BivarPoly(const PrimeField& field, std::vector<Poly> y_coeffs)
    : field_(field), y_(std::move(y_coeffs)) {
    for (const Poly& p : y_) {
        if (p.field() != field_) {
            throw std::invalid_argument("BivarPoly: coefficient from a different field");
        }
    }
    prune();
}

BivarPoly BivarPoly::from_row(std::span<const Poly> row) {
    if (row.empty()) throw std::invalid_argument("BivarPoly: empty row");
    return BivarPoly(row[0].field(), std::vector<Poly>(row.begin(), row.end()));
}

void BivarPoly::prune() {
    while (!y_.empty() && y_.back().is_zero()) y_.pop_back();
}

Degree BivarPoly::y_degree() const noexcept {
    if (y_.empty()) return Degree::neg_inf();
    return Degree(static_cast<int>(y_.size()) - 1);
}

Poly BivarPoly::y_coeff(std::size_t t) const {
    if (t < y_.size()) return y_[t];
    return Poly(field_);
}

Poly BivarPoly::substitute_y(const Poly& f) const {
    if (f.field() != field_) {
        throw std::invalid_argument("BivarPoly: substitution from a different field");
    }
    Poly acc(field_);
    for (std::size_t t = y_.size(); t-- > 0;) {
        acc = acc * f + y_[t];
    }
    return acc;
}

FieldElement BivarPoly::eval(const FieldElement& x, const FieldElement& y) const {
    FieldElement acc = field_.zero();
    for (std::size_t t = y_.size(); t-- > 0;) {
        acc = acc * y + y_[t](x);
    }
    return acc;
}

Degree BivarPoly::weighted_degree(int k) const {
    if (k < 1) throw std::invalid_argument("BivarPoly: k must be positive");
    Degree d = Degree::neg_inf();
    for (std::size_t t = 0; t < y_.size(); ++t) {
        d = max(d, y_[t].degree() + Degree(static_cast<int>(t) * (k - 1)));
    }
    return d;
}

bool operator==(const BivarPoly& a, const BivarPoly& b) {
    if (a.field_ != b.field_) {
        throw std::invalid_argument("BivarPoly: comparing across fields");
    }
    return a.y_ == b.y_;
}

InterpolationContext make_context(const GrsCode& code, std::span<const FieldElement> received) {
    if (received.size() != static_cast<std::size_t>(code.length())) {
        throw std::invalid_argument("make_context: received length " +
                                    std::to_string(received.size()) + " != n = " +
                                    std::to_string(code.length()));
    }
    const PrimeField field = code.field();
    InterpolationContext ctx{code, {}, Poly(field), Poly(field)};
    ctx.rprime.reserve(received.size());
    std::vector<std::pair<FieldElement, FieldElement>> points;
    points.reserve(received.size());
    for (int i = 0; i < code.length(); ++i) {
        const FieldElement ri = received[i] / code.ws()[i];
        ctx.rprime.push_back(ri);
        points.emplace_back(code.alphas()[i], ri);
    }
    ctx.G = poly_from_roots(field, code.alphas());
    ctx.R = lagrange_interpolate(field, points);
    return ctx;
}

bool has_multiplicity(const BivarPoly& q, const FieldElement& a, const FieldElement& b,
                      int s) {
    if (s < 1) throw std::invalid_argument("has_multiplicity: s must be positive");
    if (q.is_zero()) return true;
    const PrimeField field = q.field();
    const std::size_t count = q.y_count();

    // Shift to the origin: first X <- X + a coefficientwise, then Y <- Y + b
    // through the binomial re-expansion of Y powers.
    std::vector<Poly> shifted;
    shifted.reserve(count);
    for (std::size_t t = 0; t < count; ++t) shifted.push_back(taylor_shift(q.y_coeff(t), a));

    for (std::size_t t = 0; t < count && t < static_cast<std::size_t>(s); ++t) {
        Poly st(field);
        FieldElement b_power = field.one();
        for (std::size_t v = t; v < count; ++v) {
            st += shifted[v] * (binomial(field, static_cast<unsigned>(v),
                                         static_cast<unsigned>(t)) *
                                b_power);
            b_power *= b;
        }
        for (int u = 0; u < s - static_cast<int>(t); ++u) {
            if (!st.coeff(static_cast<std::size_t>(u)).is_zero()) return false;
        }
    }
    return true;
}

bool in_interpolation_module(const InterpolationContext& ctx, const BivarPoly& q, int s) {
    for (int i = 0; i < ctx.code.length(); ++i) {
        if (!has_multiplicity(q, ctx.code.alphas()[i], ctx.rprime[i], s)) return false;
    }
    return true;
}

PolyMatrix basis_matrix(const InterpolationContext& ctx, int s, int ell) {
    if (s < 1 || ell < s) {
        throw std::invalid_argument("basis_matrix: needs 1 <= s <= ell");
    }
    const PrimeField field = ctx.code.field();
    const std::size_t size = static_cast<std::size_t>(ell) + 1;
    PolyMatrix a(field, size, size);

    std::vector<Poly> neg_r_pow{Poly::constant(field, 1)};
    for (int p = 1; p <= s; ++p) neg_r_pow.push_back(neg_r_pow.back() * -ctx.R);
    std::vector<Poly> g_pow{Poly::constant(field, 1)};
    for (int p = 1; p <= s; ++p) g_pow.push_back(g_pow.back() * ctx.G);

    for (int t = 0; t <= ell; ++t) {
        if (t < s) {
            // G^{s-t} (Y - R)^t.
            for (int j = 0; j <= t; ++j) {
                a.at(t, j) = binomial(field, t, j) * neg_r_pow[t - j] * g_pow[s - t];
            }
        } else {
            // Y^{t-s} (Y - R)^s.
            for (int j = 0; j <= s; ++j) {
                a.at(t, t - s + j) = binomial(field, s, j) * neg_r_pow[s - j];
            }
        }
    }
    return a;
}

InterpolationState::InterpolationState(InterpolationContext ctx, int s, int ell,
                                       PolyMatrix basis)
    : ctx_(std::move(ctx)), s_(s), ell_(ell), basis_(std::move(basis)), det_degree_(0) {
    if (s_ < 1 || ell_ < s_) {
        throw std::invalid_argument("InterpolationState: needs 1 <= s <= ell");
    }
    const std::size_t size = static_cast<std::size_t>(ell_) + 1;
    if (basis_.rows() != size || basis_.cols() != size) {
        throw std::invalid_argument("InterpolationState: basis must be (ell+1) x (ell+1)");
    }
    const WeightVector w = weights();
    if (!is_weak_popov(basis_, w)) {
        throw std::invalid_argument("InterpolationState: basis not in weak Popov form");
    }
    // In weak Popov form the weighted defect is zero, so the determinant
    // degree falls out of the row degrees; it must match the explicit basis,
    // whose determinant is G^{s(s+1)/2}.
    std::int64_t degree_sum = 0;
    for (std::size_t i = 0; i < size; ++i) {
        degree_sum += row_degree(basis_.row(i), w).value();
    }
    std::int64_t weight_sum = 0;
    for (int shift : w.shifts()) weight_sum += shift;
    det_degree_ = degree_sum - weight_sum;
    const std::int64_t expected =
        static_cast<std::int64_t>(ctx_.code.length()) * s_ * (s_ + 1) / 2;
    if (det_degree_ != expected) {
        throw std::logic_error("InterpolationState: determinant degree " +
                               std::to_string(det_degree_) + " != n s(s+1)/2 = " +
                               std::to_string(expected));
    }
}

WeightVector InterpolationState::weights() const {
    return WeightVector::degree_weights(static_cast<std::size_t>(ell_), ctx_.code.dimension());
}

MinimiseResult minimise(const InterpolationContext& ctx, const PolyMatrix& m, int s, int ell) {
    const WeightVector w =
        WeightVector::degree_weights(static_cast<std::size_t>(ell), ctx.code.dimension());
    const std::int64_t od = orthogonality_defect(m, w);
    ReductionResult reduced = reduce_to_weak_popov(m, w);
    InterpolationState state(ctx, s, ell, std::move(reduced.matrix));
    return {std::move(state), od, reduced.log.size()};
}

PolyMatrix list_extension_stack(const InterpolationContext& ctx, const PolyMatrix& basis,
                                int s, int ell) {
    if (s < 1 || ell < s) {
        throw std::invalid_argument("list_extension_stack: needs 1 <= s <= ell");
    }
    const std::size_t old_size = static_cast<std::size_t>(ell) + 1;
    if (basis.rows() != old_size || basis.cols() != old_size) {
        throw std::invalid_argument("list_extension_stack: basis shape mismatch");
    }
    const PrimeField field = ctx.code.field();
    PolyMatrix c(field, old_size + 1, old_size + 1);
    for (std::size_t i = 0; i < old_size; ++i) {
        for (std::size_t j = 0; j < old_size; ++j) c.at(i, j) = basis.at(i, j);
    }
    // New last row: Y^{ell-s+1} (Y - R)^s.
    Poly neg_r_pow = Poly::constant(field, 1);
    std::vector<Poly> powers{neg_r_pow};
    for (int p = 1; p <= s; ++p) {
        neg_r_pow *= -ctx.R;
        powers.push_back(neg_r_pow);
    }
    for (int j = 0; j <= s; ++j) {
        c.at(old_size, static_cast<std::size_t>(ell - s + 1 + j)) =
            binomial(field, s, j) * powers[s - j];
    }
    return c;
}

PolyMatrix multiplicity_extension_stack(const InterpolationContext& ctx,
                                        const PolyMatrix& basis, int s, int ell) {
    if (s < 1 || ell < s) {
        throw std::invalid_argument("multiplicity_extension_stack: needs 1 <= s <= ell");
    }
    const std::size_t old_size = static_cast<std::size_t>(ell) + 1;
    if (basis.rows() != old_size || basis.cols() != old_size) {
        throw std::invalid_argument("multiplicity_extension_stack: basis shape mismatch");
    }
    const PrimeField field = ctx.code.field();
    PolyMatrix c(field, old_size + 1, old_size + 1);
    c.at(0, 0) = ctx.G.pow(static_cast<unsigned>(s) + 1);
    for (std::size_t i = 0; i < old_size; ++i) {
        // Row b of the old basis becomes (0 | b) - R (b | 0), i.e. (Y - R) b.
        for (std::size_t j = 0; j <= old_size; ++j) {
            Poly entry(field);
            if (j >= 1) entry += basis.at(i, j - 1);
            if (j < old_size) entry -= ctx.R * basis.at(i, j);
            c.at(i + 1, j) = std::move(entry);
        }
    }
    return c;
}

MinimiseResult microstep1(const InterpolationState& state) {
    const PolyMatrix stack =
        list_extension_stack(state.context(), state.basis(), state.s(), state.ell());
    return minimise(state.context(), stack, state.s(), state.ell() + 1);
}

MinimiseResult microstep2(const InterpolationState& state) {
    const PolyMatrix stack =
        multiplicity_extension_stack(state.context(), state.basis(), state.s(), state.ell());
    return minimise(state.context(), stack, state.s() + 1, state.ell() + 1);
}

BivarPoly minimal_weighted_row(const InterpolationState& state) {
    const WeightVector w = state.weights();
    std::size_t best = 0;
    Degree best_degree = row_degree(state.basis().row(0), w);
    for (std::size_t i = 1; i < state.basis().rows(); ++i) {
        const Degree d = row_degree(state.basis().row(i), w);
        if (d < best_degree) {
            best = i;
            best_degree = d;
        }
    }
    return BivarPoly::from_row(state.basis().row(best));
}

}  // namespace listdec
