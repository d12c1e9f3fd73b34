#include "listdec/rootfind.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace listdec {

namespace {

/// Divide out the largest X power dividing every Y coefficient. The input
/// must be nonzero; the result has some coefficient with nonzero constant
/// term, so its Y-restriction Q(0, Y) cannot vanish identically.
BivarPoly strip_x(const BivarPoly& q) {
    std::size_t shift = SIZE_MAX;
    for (std::size_t t = 0; t < q.y_count() && shift > 0; ++t) {
        const Poly& c = q.y_coeff(t);
        if (c.is_zero()) continue;
        std::size_t low = 0;
        while (c.coeff(low).is_zero()) ++low;
        shift = std::min(shift, low);
    }
    if (shift == 0 || shift == SIZE_MAX) return q;
    const Poly x_power = Poly::monomial(q.field(), q.field().one(), shift);
    std::vector<Poly> out;
    out.reserve(q.y_count());
    for (std::size_t t = 0; t < q.y_count(); ++t) {
        out.push_back(q.y_coeff(t) / x_power);
    }
    return BivarPoly(q.field(), std::move(out));
}

/// Q(X, X*Y + gamma): the Y^t coefficient picks up X^t and the binomial
/// re-expansion of the shift by gamma.
BivarPoly compose_shift(const BivarPoly& q, const FieldElement& gamma) {
    const PrimeField field = q.field();
    const std::size_t count = q.y_count();
    std::vector<Poly> out;
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        Poly ct(field);
        FieldElement gamma_power = field.one();
        for (std::size_t v = t; v < count; ++v) {
            ct += q.y_coeff(v) * (binomial(field, static_cast<unsigned>(v),
                                           static_cast<unsigned>(t)) *
                                  gamma_power);
            gamma_power *= gamma;
        }
        out.push_back(ct.times_x_power(t));
    }
    return BivarPoly(field, std::move(out));
}

struct RootSearch {
    const PrimeField field;
    const int k;
    std::vector<std::uint64_t> path;
    std::vector<Poly> found;

    void record() {
        found.push_back(Poly(field, path));
    }

    void recurse(const BivarPoly& q, int depth) {
        const BivarPoly stripped = strip_x(q);
        // Gamma candidates are the roots of Q(0, Y). After stripping this
        // restriction is nonzero for nonzero Q, but a degenerate all-gamma
        // branch is kept for safety rather than asserted away.
        Poly restriction(field);
        {
            std::vector<std::uint64_t> coeffs;
            coeffs.reserve(stripped.y_count());
            for (std::size_t t = 0; t < stripped.y_count(); ++t) {
                coeffs.push_back(stripped.y_coeff(t).coeff(0).value());
            }
            restriction = Poly(field, coeffs);
        }
        std::vector<FieldElement> gammas;
        for (std::uint64_t v = 0; v < field.modulus(); ++v) {
            const FieldElement g = field.element(v);
            if (restriction.is_zero() || restriction(g).is_zero()) gammas.push_back(g);
        }

        for (const FieldElement& gamma : gammas) {
            path.push_back(gamma.value());
            const BivarPoly next = compose_shift(stripped, gamma);
            if (next.y_coeff(0).is_zero()) record();
            if (depth + 1 < k) recurse(next, depth + 1);
            path.pop_back();
        }
    }
};

}  // namespace

std::vector<Poly> y_roots(const BivarPoly& q, int k) {
    if (q.is_zero()) throw std::invalid_argument("y_roots: zero polynomial");
    if (k < 1) throw std::invalid_argument("y_roots: k must be positive");

    RootSearch search{q.field(), k, {}, {}};
    search.recurse(q, 0);

    std::sort(search.found.begin(), search.found.end(), Poly::lex_less);
    search.found.erase(std::unique(search.found.begin(), search.found.end()),
                       search.found.end());
    for (const Poly& f : search.found) {
        if (!q.substitute_y(f).is_zero()) {
            throw std::logic_error("y_roots: candidate failed substitution check");
        }
    }
    return search.found;
}

bool candidate_less(const RootCandidate& a, const RootCandidate& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return Poly::lex_less(a.f, b.f);
}

std::vector<RootCandidate> filter_candidates(std::span<const Poly> roots, const GrsCode& code,
                                             std::span<const FieldElement> received, int tau) {
    if (received.size() != static_cast<std::size_t>(code.length())) {
        throw std::invalid_argument("filter_candidates: received length mismatch");
    }
    if (tau < 0) throw std::invalid_argument("filter_candidates: negative radius");
    std::vector<RootCandidate> out;
    for (const Poly& f : roots) {
        if (!(f.degree() < Degree(code.dimension()))) continue;
        Word c = encode(code, f);
        const int d = hamming_distance(c, received);
        if (d <= tau) out.push_back({f, std::move(c), d});
    }
    std::sort(out.begin(), out.end(), candidate_less);
    return out;
}

}  // namespace listdec
