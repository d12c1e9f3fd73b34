#pragma once

#include <span>
#include <vector>

#include "listdec/codec.hpp"
#include "listdec/gsmodule.hpp"
#include "listdec/poly.hpp"

namespace listdec {

/// All f with deg f < k and Q(X, f(X)) = 0, by the Roth-Ruckenstein
/// recursion: strip common X powers, branch on the roots of Q(0, Y) found by
/// exhaustive scan, substitute Y <- X*Y + gamma, recurse to depth k. Every
/// returned root is re-verified by substitution before the call returns.
/// The result is duplicate-free and sorted by Poly::lex_less; its size never
/// exceeds the Y-degree of Q. Q must be nonzero and k >= 1.
std::vector<Poly> y_roots(const BivarPoly& q, int k);

struct RootCandidate {
    Poly f;
    Word codeword;
    int distance;

    friend bool operator==(const RootCandidate& a, const RootCandidate& b) {
        return a.f == b.f && a.codeword == b.codeword && a.distance == b.distance;
    }
};

/// Deterministic candidate order: by distance, then by the lexicographic
/// order of the message coefficients.
bool candidate_less(const RootCandidate& a, const RootCandidate& b);

/// Encode each root and keep those within distance tau of the received word,
/// sorted by candidate_less.
std::vector<RootCandidate> filter_candidates(std::span<const Poly> roots, const GrsCode& code,
                                             std::span<const FieldElement> received, int tau);

}  // namespace listdec
