#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "listdec/codec.hpp"
#include "listdec/field.hpp"
#include "listdec/gsmodule.hpp"
#include "listdec/poly.hpp"
#include "listdec/polymat.hpp"
#include "listdec/rng.hpp"

namespace testutil {

inline listdec::Poly random_message(const listdec::GrsCode& code, listdec::Rng& rng) {
    std::vector<std::uint64_t> coeffs;
    coeffs.reserve(static_cast<std::size_t>(code.dimension()));
    for (int i = 0; i < code.dimension(); ++i) {
        coeffs.push_back(rng.below(code.field().modulus()));
    }
    return listdec::Poly(code.field(), coeffs);
}

inline listdec::Poly random_poly(const listdec::PrimeField& field, int max_degree,
                                 listdec::Rng& rng) {
    std::vector<std::uint64_t> coeffs;
    coeffs.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int i = 0; i <= max_degree; ++i) coeffs.push_back(rng.below(field.modulus()));
    return listdec::Poly(field, coeffs);
}

struct GsInstance {
    listdec::GrsCode code;
    listdec::Poly f;
    listdec::Word sent;
    listdec::Word received;
    int weight;
};

/// Random standard code with a corrupted transmission. The error weight stays
/// in [1, n - k], which keeps the received word strictly closer to the sent
/// codeword than half of what any other codeword could manage, so it is never
/// itself a codeword and deg R >= k holds.
inline GsInstance random_noncode_instance(listdec::Rng& rng,
                                          std::span<const std::uint64_t> moduli, int n_lo,
                                          int n_hi) {
    const std::uint64_t q = moduli[rng.below(moduli.size())];
    const int max_n = std::min<int>(static_cast<int>(q) - 1, n_hi);
    if (max_n < n_lo) throw std::invalid_argument("random_noncode_instance: empty n range");
    const int n = n_lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - n_lo + 1)));
    const int k = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
    const int weight = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - k)));

    const listdec::PrimeField field(q);
    listdec::GrsCode code(field, n, k);
    listdec::Poly f = random_message(code, rng);
    listdec::Word sent = listdec::encode(code, f);
    listdec::Word received = listdec::inject_errors(sent, weight, rng.next()).word;
    return {std::move(code), std::move(f), std::move(sent), std::move(received), weight};
}

/// The four 3x3 matrices of the worked reduction chain, over any field. Every
/// entry has coefficients in {0, 1}, so the defect and leading-position facts
/// they are used to check do not depend on the characteristic.
inline listdec::PolyMatrix chain_matrix(const listdec::PrimeField& field, int which) {
    using listdec::Poly;
    auto p = [&](std::vector<std::uint64_t> c) { return Poly(field, c); };
    listdec::PolyMatrix m(field, 3, 3);
    switch (which) {
        case 0:
            m.at(0, 0) = p({1}); m.at(0, 1) = p({0, 0, 1}); m.at(0, 2) = p({0, 1});
            m.at(1, 0) = p({});  m.at(1, 1) = p({0, 0, 0, 1}); m.at(1, 2) = p({0, 0, 1});
            m.at(2, 0) = p({0, 1}); m.at(2, 1) = p({1}); m.at(2, 2) = p({});
            return m;
        case 1:
            m.at(0, 0) = p({1}); m.at(0, 1) = p({0, 0, 1}); m.at(0, 2) = p({0, 1});
            m.at(1, 0) = p({0, 1}); m.at(1, 1) = p({}); m.at(1, 2) = p({});
            m.at(2, 0) = p({0, 1}); m.at(2, 1) = p({1}); m.at(2, 2) = p({});
            return m;
        case 2:
            m.at(0, 0) = p({1}); m.at(0, 1) = p({0, 0, 1}); m.at(0, 2) = p({0, 1});
            m.at(1, 0) = p({0, 1}); m.at(1, 1) = p({}); m.at(1, 2) = p({});
            m.at(2, 0) = p({}); m.at(2, 1) = p({1}); m.at(2, 2) = p({});
            return m;
        case 3:
            m.at(0, 0) = p({1}); m.at(0, 1) = p({}); m.at(0, 2) = p({0, 1});
            m.at(1, 0) = p({0, 1}); m.at(1, 1) = p({}); m.at(1, 2) = p({});
            m.at(2, 0) = p({}); m.at(2, 1) = p({1}); m.at(2, 2) = p({});
            return m;
        default:
            throw std::invalid_argument("chain_matrix: index out of range");
    }
}

}  // namespace testutil
