#include "listdec/polymat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace listdec {

WeightVector::WeightVector(std::vector<int> shifts) : shifts_(std::move(shifts)) {
    for (int s : shifts_) {
        if (s < 0) {
            throw std::invalid_argument("WeightVector: negative shift " + std::to_string(s));
        }
    }
}

WeightVector WeightVector::zero(std::size_t size) {
    return WeightVector(std::vector<int>(size, 0));
}

WeightVector WeightVector::degree_weights(std::size_t ell, int k) {
    if (k < 1) throw std::invalid_argument("WeightVector: k must be positive");
    std::vector<int> shifts(ell + 1);
    for (std::size_t j = 0; j <= ell; ++j) shifts[j] = static_cast<int>(j) * (k - 1);
    return WeightVector(std::move(shifts));
}

PolyMatrix::PolyMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Poly(field)) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("PolyMatrix: dimensions must be positive");
    }
}

PolyMatrix PolyMatrix::identity(const PrimeField& field, std::size_t size) {
    PolyMatrix m(field, size, size);
    for (std::size_t i = 0; i < size; ++i) m.at(i, i) = Poly::constant(field, 1);
    return m;
}

Poly& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("PolyMatrix: index out of range");
    return data_[i * cols_ + j];
}

const Poly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("PolyMatrix: index out of range");
    return data_[i * cols_ + j];
}

std::span<const Poly> PolyMatrix::row(std::size_t i) const {
    if (i >= rows_) throw std::out_of_range("PolyMatrix: row out of range");
    return {data_.data() + i * cols_, cols_};
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
           a.data_ == b.data_;
}

namespace {

void require_weights_match(std::size_t cols, const WeightVector& weights) {
    if (weights.size() != cols) {
        throw std::invalid_argument("weight vector size " + std::to_string(weights.size()) +
                                    " does not match column count " + std::to_string(cols));
    }
}

}  // namespace

Degree row_degree(std::span<const Poly> row) {
    Degree d = Degree::neg_inf();
    for (const Poly& p : row) d = max(d, p.degree());
    return d;
}

Degree row_degree(std::span<const Poly> row, const WeightVector& weights) {
    require_weights_match(row.size(), weights);
    Degree d = Degree::neg_inf();
    for (std::size_t j = 0; j < row.size(); ++j) {
        d = max(d, row[j].degree() + Degree(weights[j]));
    }
    return d;
}

std::size_t leading_position(std::span<const Poly> row) {
    return leading_position(row, WeightVector::zero(row.size()));
}

std::size_t leading_position(std::span<const Poly> row, const WeightVector& weights) {
    require_weights_match(row.size(), weights);
    const Degree d = row_degree(row, weights);
    if (d.is_neg_inf()) {
        throw std::invalid_argument("leading_position: zero row has no leading position");
    }
    for (std::size_t j = row.size(); j-- > 0;) {
        if (row[j].degree() + Degree(weights[j]) == d) return j;
    }
    throw std::logic_error("leading_position: row degree not attained");
}

bool is_weak_popov(const PolyMatrix& m) {
    return is_weak_popov(m, WeightVector::zero(m.cols()));
}

bool is_weak_popov(const PolyMatrix& m, const WeightVector& weights) {
    require_weights_match(m.cols(), weights);
    std::vector<bool> seen(m.cols(), false);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (row_degree(m.row(i)).is_neg_inf()) return false;
        const std::size_t lp = leading_position(m.row(i), weights);
        if (seen[lp]) return false;
        seen[lp] = true;
    }
    return true;
}

namespace {

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) {
        throw std::logic_error("determinant: non-exact division in fraction-free elimination");
    }
    return q;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    PolyMatrix w = m;
    Poly prev = Poly::constant(m.field(), 1);
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Poly(m.field());
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(col, j), w.at(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                w.at(i, j) = exact_div(
                    w.at(col, col) * w.at(i, j) - w.at(i, col) * w.at(col, j), prev);
            }
            w.at(i, col) = Poly(m.field());
        }
        prev = w.at(col, col);
    }
    Poly det = w.at(n - 1, n - 1);
    return negate ? -det : det;
}

Poly determinant_by_evaluation(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    const PrimeField field = m.field();
    std::int64_t bound = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Degree d = row_degree(m.row(i));
        if (d.is_neg_inf()) return Poly(field);
        bound += d.value();
    }
    const std::uint64_t points = static_cast<std::uint64_t>(bound) + 1;
    if (points > field.modulus()) {
        throw std::invalid_argument(
            "determinant_by_evaluation: needs " + std::to_string(points) +
            " distinct points but the field only has " + std::to_string(field.modulus()));
    }

    std::vector<std::pair<FieldElement, FieldElement>> samples;
    samples.reserve(points);
    for (std::uint64_t p = 0; p < points; ++p) {
        const FieldElement x = field.element(p);
        // Numeric determinant at x by Gaussian elimination.
        std::vector<std::vector<FieldElement>> a(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a[i].push_back(m.at(i, j)(x));
        }
        FieldElement det = field.one();
        for (std::size_t col = 0; col < n && !det.is_zero(); ++col) {
            std::size_t pivot = col;
            while (pivot < n && a[pivot][col].is_zero()) ++pivot;
            if (pivot == n) {
                det = field.zero();
                break;
            }
            if (pivot != col) {
                std::swap(a[pivot], a[col]);
                det = -det;
            }
            det *= a[col][col];
            const FieldElement inv = a[col][col].inverse();
            for (std::size_t i = col + 1; i < n; ++i) {
                const FieldElement factor = a[i][col] * inv;
                for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
            }
        }
        samples.emplace_back(x, det);
    }
    return lagrange_interpolate(field, samples);
}

std::int64_t orthogonality_defect(const PolyMatrix& m) {
    return orthogonality_defect(m, WeightVector::zero(m.cols()));
}

std::int64_t orthogonality_defect(const PolyMatrix& m, const WeightVector& weights) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("orthogonality_defect: matrix not square");
    }
    require_weights_match(m.cols(), weights);
    const Poly det = determinant(m);
    if (det.is_zero()) {
        throw std::invalid_argument("orthogonality_defect: matrix is singular");
    }
    // Column scaling by X^{w_j} multiplies the determinant by X^{sum w}, so
    // both sides of the defect are computed virtually.
    std::int64_t degree_sum = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        degree_sum += row_degree(m.row(i), weights).value();
    }
    std::int64_t weight_sum = 0;
    for (int w : weights.shifts()) weight_sum += w;
    return degree_sum - (det.degree().value() + weight_sum);
}

ReductionResult reduce_to_weak_popov(const PolyMatrix& m, const WeightVector& weights) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("reduce_to_weak_popov: matrix not square");
    }
    require_weights_match(m.cols(), weights);
    const std::size_t n = m.rows();
    PolyMatrix b = m;

    std::vector<std::int64_t> wdeg(n);
    std::vector<std::size_t> lp(n);
    auto refresh = [&](std::size_t i) {
        const Degree d = row_degree(b.row(i), weights);
        if (d.is_neg_inf()) return false;
        wdeg[i] = d.value();
        lp[i] = leading_position(b.row(i), weights);
        return true;
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (!refresh(i)) {
            throw std::invalid_argument("reduce_to_weak_popov: zero row " + std::to_string(i) +
                                        " in input");
        }
    }

    // Each simple transformation strictly decreases (wdeg, lp) of its target
    // row lexicographically, so the loop terminates; the cap only guards
    // against internal bugs.
    std::int64_t cap = static_cast<std::int64_t>(n) * n + n + 8;
    for (std::size_t i = 0; i < n; ++i) cap += (wdeg[i] + 1) * static_cast<std::int64_t>(n + 1);

    std::vector<SimpleTransform> log;
    std::vector<std::size_t> owner(n);
    for (std::int64_t iter = 0;; ++iter) {
        if (iter > cap) {
            throw std::logic_error("reduce_to_weak_popov: transformation bound exceeded");
        }
        std::size_t first = n, second = n;
        std::fill(owner.begin(), owner.end(), n);
        for (std::size_t i = 0; i < n && second == n; ++i) {
            if (owner[lp[i]] == n) {
                owner[lp[i]] = i;
            } else {
                first = owner[lp[i]];
                second = i;
            }
        }
        if (second == n) break;

        // first < second by construction; the lower weighted degree wins the
        // pivot role, ties by lower row index.
        std::size_t pivot = first, target = second;
        if (wdeg[second] < wdeg[first]) {
            pivot = second;
            target = first;
        }
        const std::size_t col = lp[pivot];
        const int shift = static_cast<int>(wdeg[target] - wdeg[pivot]);
        const FieldElement scalar =
            b.at(target, col).leading_coeff() / b.at(pivot, col).leading_coeff();
        for (std::size_t j = 0; j < n; ++j) {
            b.at(target, j) -= (scalar * b.at(pivot, j)).times_x_power(shift);
        }
        log.push_back({target, pivot, scalar.value(), shift});
        if (!refresh(target)) {
            throw std::invalid_argument(
                "reduce_to_weak_popov: row " + std::to_string(target) +
                " vanished; the input matrix is singular");
        }
    }
    return {std::move(b), std::move(log)};
}

PolyMatrix apply_transforms(PolyMatrix m, std::span<const SimpleTransform> log) {
    for (const SimpleTransform& t : log) {
        const FieldElement scalar = m.field().element(t.scalar);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m.at(t.target, j) -=
                (scalar * m.at(t.pivot, j)).times_x_power(static_cast<std::size_t>(t.shift));
        }
    }
    return m;
}

PolyMatrix scale_columns(const PolyMatrix& m, const WeightVector& weights) {
    require_weights_match(m.cols(), weights);
    PolyMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out.at(i, j) = m.at(i, j).times_x_power(static_cast<std::size_t>(weights[j]));
        }
    }
    return out;
}

PolyMatrix unscale_columns(const PolyMatrix& m, const WeightVector& weights) {
    require_weights_match(m.cols(), weights);
    PolyMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Poly x_power =
                Poly::monomial(m.field(), m.field().one(), static_cast<std::size_t>(weights[j]));
            auto [q, r] = divrem(m.at(i, j), x_power);
            if (!r.is_zero()) {
                throw std::invalid_argument("unscale_columns: entry not divisible by X^w");
            }
            out.at(i, j) = q;
        }
    }
    return out;
}

}  // namespace listdec
