#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "listdec/degree.hpp"
#include "listdec/poly.hpp"

namespace listdec {

/// Per-column degree shifts for weighted row degrees. Shift j is added to the
/// degree of column j's entry; equivalent to scaling column j by X^{w_j}, but
/// the scaled matrix is never materialized.
class WeightVector {
public:
    explicit WeightVector(std::vector<int> shifts);

    static WeightVector zero(std::size_t size);
    /// Shifts (0, k-1, 2(k-1), ..., ell(k-1)) used throughout interpolation.
    static WeightVector degree_weights(std::size_t ell, int k);

    std::size_t size() const noexcept { return shifts_.size(); }
    int operator[](std::size_t j) const noexcept { return shifts_[j]; }
    const std::vector<int>& shifts() const noexcept { return shifts_; }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.shifts_ == b.shifts_;
    }

private:
    std::vector<int> shifts_;
};

/// Dense matrix over F_q[X], row-major.
class PolyMatrix {
public:
    PolyMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(const PrimeField& field, std::size_t size);

    PrimeField field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Poly& at(std::size_t i, std::size_t j);
    const Poly& at(std::size_t i, std::size_t j) const;
    std::span<const Poly> row(std::size_t i) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Poly> data_;
};

/// Max entry degree of a row; minus infinity for a zero row.
Degree row_degree(std::span<const Poly> row);
Degree row_degree(std::span<const Poly> row, const WeightVector& weights);

/// Greatest index attaining the (weighted) row degree. A zero row has no
/// leading position and is an error.
std::size_t leading_position(std::span<const Poly> row);
std::size_t leading_position(std::span<const Poly> row, const WeightVector& weights);

/// True iff the matrix has no zero rows and pairwise distinct (weighted)
/// leading positions.
bool is_weak_popov(const PolyMatrix& m);
bool is_weak_popov(const PolyMatrix& m, const WeightVector& weights);

/// Fraction-free Gaussian elimination (Bareiss); exact over F_q[X].
Poly determinant(const PolyMatrix& m);
/// Evaluation at deg-bound+1 distinct points followed by interpolation.
/// Needs that many distinct points in F_q and throws when q is too small.
Poly determinant_by_evaluation(const PolyMatrix& m);

/// Sum of (weighted) row degrees minus the degree of the (weighted)
/// determinant. Nonnegative for nonsingular matrices, zero exactly in weak
/// Popov form; a singular matrix is an error.
std::int64_t orthogonality_defect(const PolyMatrix& m);
std::int64_t orthogonality_defect(const PolyMatrix& m, const WeightVector& weights);

/// One Mulders-Storjohann step: row target -= scalar * X^shift * row pivot,
/// chosen to cancel the target's leading-position coefficient.
struct SimpleTransform {
    std::size_t target;
    std::size_t pivot;
    std::uint64_t scalar;
    int shift;

    friend bool operator==(const SimpleTransform& a, const SimpleTransform& b) {
        return a.target == b.target && a.pivot == b.pivot && a.scalar == b.scalar &&
               a.shift == b.shift;
    }
};

struct ReductionResult {
    PolyMatrix matrix;
    std::vector<SimpleTransform> log;
};

/// Mulders-Storjohann reduction to weak Popov form under virtual column
/// weights. On a leading-position collision the row of lower weighted degree
/// is the pivot (ties broken by lower row index) and the other row is
/// reduced. Zero rows in the input, or emerging during reduction (the
/// signature of a singular matrix), are errors. The log records every simple
/// transformation in application order, so replaying it on the input
/// reproduces the output exactly.
ReductionResult reduce_to_weak_popov(const PolyMatrix& m, const WeightVector& weights);

/// Replay a transformation log (audit helper).
PolyMatrix apply_transforms(PolyMatrix m, std::span<const SimpleTransform> log);

/// Materialize column scaling by X^{w_j} (test helper for the virtual-weight
/// equivalence) and its exact inverse.
PolyMatrix scale_columns(const PolyMatrix& m, const WeightVector& weights);
PolyMatrix unscale_columns(const PolyMatrix& m, const WeightVector& weights);

}  // namespace listdec
