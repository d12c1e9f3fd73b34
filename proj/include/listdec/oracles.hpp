#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "listdec/codec.hpp"
#include "listdec/gsmodule.hpp"
#include "listdec/rootfind.hpp"

namespace listdec {

/// Enumeration cap for the reference implementations below. They are
/// deliberately naive and refuse inputs whose search space exceeds the cap
/// instead of silently taking forever.
struct OracleBudget {
    std::uint64_t max_enumeration = 1'000'000;
};

/// Every codeword within distance tau of the received word, by enumerating
/// all q^k messages. Sorted by candidate_less, so a correct decoder's output
/// compares equal directly.
std::vector<RootCandidate> brute_force_nearest(const GrsCode& code,
                                               std::span<const FieldElement> received, int tau,
                                               const OracleBudget& budget = {});

struct OracleInterpolation {
    BivarPoly q;
    std::int64_t weighted_degree;
    std::size_t constraint_count;
};

/// Minimal-weighted-degree nonzero element of the (s, ell) interpolation
/// module, found independently of the basis machinery: for growing degree
/// bounds, set up the multiplicity constraints as a linear system over F_q
/// (C(s+1,2) equations per point) and return the first nonzero kernel
/// element. Refuses systems larger than the budget.
OracleInterpolation oracle_min_interpolation(const InterpolationContext& ctx, int s, int ell,
                                             const OracleBudget& budget = {});

/// All Y-roots of degree < k by enumerating all q^k candidate polynomials.
/// Sorted by Poly::lex_less.
std::vector<Poly> brute_force_roots(const BivarPoly& q, int k, const OracleBudget& budget = {});

}  // namespace listdec
