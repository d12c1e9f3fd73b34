#include "listdec/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace listdec {

namespace {

/// q^k if it stays within the budget, otherwise an error.
std::uint64_t checked_message_count(std::uint64_t q, int k, const OracleBudget& budget) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
        if (count > budget.max_enumeration / q) {
            throw std::invalid_argument("oracle budget exceeded: q^k > " +
                                        std::to_string(budget.max_enumeration));
        }
        count *= q;
    }
    if (count > budget.max_enumeration) {
        throw std::invalid_argument("oracle budget exceeded: q^k > " +
                                    std::to_string(budget.max_enumeration));
    }
    return count;
}

/// Odometer enumeration of coefficient vectors (c_0, ..., c_{k-1}).
bool advance(std::vector<std::uint64_t>& coeffs, std::uint64_t q) {
    for (std::uint64_t& c : coeffs) {
        if (++c < q) return true;
        c = 0;
    }
    return false;
}

}  // namespace

std::vector<RootCandidate> brute_force_nearest(const GrsCode& code,
                                               std::span<const FieldElement> received, int tau,
                                               const OracleBudget& budget) {
    if (received.size() != static_cast<std::size_t>(code.length())) {
        throw std::invalid_argument("brute_force_nearest: received length mismatch");
    }
    if (tau < 0) throw std::invalid_argument("brute_force_nearest: negative radius");
    const PrimeField field = code.field();
    const std::uint64_t q = field.modulus();
    checked_message_count(q, code.dimension(), budget);

    const int n = code.length(), k = code.dimension();
    // Locator power table so each codeword costs n*k multiplications.
    std::vector<std::uint64_t> powers(static_cast<std::size_t>(n) * k);
    for (int i = 0; i < n; ++i) {
        std::uint64_t p = 1;
        for (int j = 0; j < k; ++j) {
            powers[static_cast<std::size_t>(i) * k + j] = p;
            p = p * code.alphas()[i].value() % q;
        }
    }
    std::vector<std::uint64_t> target(n), wvals(n);
    for (int i = 0; i < n; ++i) {
        target[i] = received[i].value();
        wvals[i] = code.ws()[i].value();
    }

    std::vector<RootCandidate> out;
    std::vector<std::uint64_t> coeffs(k, 0);
    do {
        int distance = 0;
        for (int i = 0; i < n && distance <= tau; ++i) {
            std::uint64_t acc = 0;
            const std::uint64_t* row = powers.data() + static_cast<std::size_t>(i) * k;
            for (int j = 0; j < k; ++j) acc += coeffs[j] * row[j] % q;
            if (wvals[i] * (acc % q) % q != target[i]) ++distance;
        }
        if (distance <= tau) {
            const Poly f(field, coeffs);
            out.push_back({f, encode(code, f), distance});
        }
    } while (advance(coeffs, q));

    std::sort(out.begin(), out.end(), candidate_less);
    return out;
}

OracleInterpolation oracle_min_interpolation(const InterpolationContext& ctx, int s, int ell,
                                             const OracleBudget& budget) {
    if (s < 1 || ell < s) {
        throw std::invalid_argument("oracle_min_interpolation: needs 1 <= s <= ell");
    }
    const PrimeField field = ctx.code.field();
    const std::uint64_t q = field.modulus();
    const int n = ctx.code.length(), k = ctx.code.dimension();
    const std::size_t constraints =
        static_cast<std::size_t>(n) * (static_cast<std::size_t>(s) * (s + 1) / 2);

    // Weighted degree < bound means deg Q_t <= bound - 1 - t(k-1); grow the
    // bound until the constraint system has a nonzero kernel element. The
    // counting argument guarantees one by bound = s n at the latest.
    for (std::int64_t bound = 1;; ++bound) {
        if (bound > static_cast<std::int64_t>(s) * n + 1) {
            throw std::logic_error("oracle_min_interpolation: no solution found");
        }
        std::vector<std::pair<int, int>> unknowns;  // (t, j) with j < x_count(t)
        for (int t = 0; t <= ell; ++t) {
            const std::int64_t x_count = bound - static_cast<std::int64_t>(t) * (k - 1);
            for (std::int64_t j = 0; j < x_count; ++j) {
                unknowns.emplace_back(t, static_cast<int>(j));
            }
        }
        if (unknowns.empty()) continue;
        if (unknowns.size() * constraints > budget.max_enumeration) {
            throw std::invalid_argument("oracle budget exceeded: interpolation system " +
                                        std::to_string(unknowns.size()) + " x " +
                                        std::to_string(constraints));
        }

        // Row per (point, u, v) with u + v < s: the X^u Y^v coefficient of
        // Q(X + a_i, Y + r'_i) must vanish.
        std::vector<std::vector<std::uint64_t>> rows;
        rows.reserve(constraints);
        for (int i = 0; i < n; ++i) {
            const FieldElement a = ctx.code.alphas()[i];
            const FieldElement b = ctx.rprime[i];
            for (int v = 0; v < s; ++v) {
                for (int u = 0; u + v < s; ++u) {
                    std::vector<std::uint64_t> row(unknowns.size(), 0);
                    for (std::size_t c = 0; c < unknowns.size(); ++c) {
                        const auto [t, j] = unknowns[c];
                        if (t < v || j < u) continue;
                        const FieldElement coeff =
                            binomial(field, t, v) * b.pow(t - v) *
                            binomial(field, j, u) * a.pow(j - u);
                        row[c] = coeff.value();
                    }
                    rows.push_back(std::move(row));
                }
            }
        }

        // Gaussian elimination; any free column yields a kernel element.
        const std::size_t cols = unknowns.size();
        std::vector<std::size_t> pivot_of_row;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
            std::size_t pr = rank;
            while (pr < rows.size() && rows[pr][col] == 0) ++pr;
            if (pr == rows.size()) continue;
            std::swap(rows[rank], rows[pr]);
            const std::uint64_t inv = field.element(rows[rank][col]).inverse().value();
            for (std::size_t j2 = col; j2 < cols; ++j2) {
                rows[rank][j2] = rows[rank][j2] * inv % q;
            }
            for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
                if (r2 == rank || rows[r2][col] == 0) continue;
                const std::uint64_t factor = rows[r2][col];
                for (std::size_t j2 = col; j2 < cols; ++j2) {
                    const std::uint64_t sub = factor * rows[rank][j2] % q;
                    rows[r2][j2] = (rows[r2][j2] + q - sub) % q;
                }
            }
            pivot_of_row.push_back(col);
            ++rank;
        }
        if (rank == cols) continue;

        // First free column: set it to 1, read pivot unknowns off the rows.
        std::vector<bool> is_pivot(cols, false);
        for (std::size_t p : pivot_of_row) is_pivot[p] = true;
        std::size_t free_col = 0;
        while (is_pivot[free_col]) ++free_col;
        std::vector<std::uint64_t> solution(cols, 0);
        solution[free_col] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            const std::uint64_t val = rows[r][free_col];
            if (val != 0) solution[pivot_of_row[r]] = q - val;
        }

        std::vector<Poly> y_coeffs(static_cast<std::size_t>(ell) + 1, Poly(field));
        for (std::size_t c = 0; c < cols; ++c) {
            if (solution[c] == 0) continue;
            const auto [t, j] = unknowns[c];
            y_coeffs[t] += Poly::monomial(field, field.element(solution[c]),
                                          static_cast<std::size_t>(j));
        }
        BivarPoly result(field, std::move(y_coeffs));
        const Degree wdeg = result.weighted_degree(k);
        // The first admitting bound makes every kernel element's weighted
        // degree exactly bound - 1; anything else is a bookkeeping bug.
        if (wdeg != Degree(static_cast<int>(bound) - 1)) {
            throw std::logic_error("oracle_min_interpolation: degree bookkeeping broken");
        }
        return {std::move(result), wdeg.value(), constraints};
    }
}

std::vector<Poly> brute_force_roots(const BivarPoly& bq, int k, const OracleBudget& budget) {
    if (bq.is_zero()) throw std::invalid_argument("brute_force_roots: zero polynomial");
    if (k < 1) throw std::invalid_argument("brute_force_roots: k must be positive");
    const PrimeField field = bq.field();
    checked_message_count(field.modulus(), k, budget);

    std::vector<Poly> out;
    std::vector<std::uint64_t> coeffs(k, 0);
    do {
        const Poly f(field, coeffs);
        if (bq.substitute_y(f).is_zero()) out.push_back(f);
    } while (advance(coeffs, field.modulus()));
    std::sort(out.begin(), out.end(), Poly::lex_less);
    return out;
}

}  // namespace listdec
