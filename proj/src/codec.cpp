#include "listdec/codec.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "listdec/rng.hpp"

namespace listdec {

GrsCode::GrsCode(const PrimeField& field, int n, int k)
    : field_(field), n_(n), k_(k) {
    if (n < 1 || static_cast<std::uint64_t>(n) >= field.modulus()) {
        throw std::invalid_argument("GrsCode: length " + std::to_string(n) +
                                    " needs 1 <= n < q = " + std::to_string(field.modulus()));
    }
    alphas_.reserve(n);
    ws_.reserve(n);
    for (int i = 1; i <= n; ++i) {
        alphas_.push_back(field.element(static_cast<std::uint64_t>(i)));
        ws_.push_back(field.one());
    }
    validate();
}

GrsCode::GrsCode(const PrimeField& field, int n, int k, std::vector<FieldElement> alphas,
                 std::vector<FieldElement> ws)
    : field_(field), n_(n), k_(k), alphas_(std::move(alphas)), ws_(std::move(ws)) {
    validate();
}

void GrsCode::validate() const {
    if (n_ < 1 || static_cast<std::uint64_t>(n_) >= field_.modulus()) {
        throw std::invalid_argument("GrsCode: length " + std::to_string(n_) +
                                    " needs 1 <= n < q = " + std::to_string(field_.modulus()));
    }
    if (k_ < 1 || k_ > n_) {
        throw std::invalid_argument("GrsCode: dimension " + std::to_string(k_) +
                                    " needs 1 <= k <= n = " + std::to_string(n_));
    }
    if (alphas_.size() != static_cast<std::size_t>(n_) ||
        ws_.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("GrsCode: locator/multiplier counts must equal n");
    }
    std::vector<bool> seen(field_.modulus(), false);
    for (const FieldElement& a : alphas_) {
        if (a.field() != field_) throw std::invalid_argument("GrsCode: locator field mismatch");
        if (a.is_zero()) throw std::invalid_argument("GrsCode: locators must be nonzero");
        if (seen[a.value()]) {
            throw std::invalid_argument("GrsCode: duplicate locator " +
                                        std::to_string(a.value()));
        }
        seen[a.value()] = true;
    }
    for (const FieldElement& w : ws_) {
        if (w.field() != field_) {
            throw std::invalid_argument("GrsCode: multiplier field mismatch");
        }
        if (w.is_zero()) throw std::invalid_argument("GrsCode: multipliers must be nonzero");
    }
}

Word encode(const GrsCode& code, const Poly& f) {
    if (f.field() != code.field()) {
        throw std::invalid_argument("encode: message from a different field");
    }
    if (f.degree() >= Degree(code.dimension())) {
        throw std::invalid_argument("encode: message degree " +
                                    std::to_string(f.degree().value()) + " exceeds k - 1 = " +
                                    std::to_string(code.dimension() - 1));
    }
    Word c;
    c.reserve(code.length());
    for (int i = 0; i < code.length(); ++i) {
        c.push_back(code.ws()[i] * f(code.alphas()[i]));
    }
    return c;
}

CorruptionResult inject_errors(std::span<const FieldElement> word, int weight,
                               std::uint64_t seed) {
    const std::size_t n = word.size();
    if (n == 0) throw std::invalid_argument("inject_errors: empty word");
    if (weight < 0 || static_cast<std::size_t>(weight) > n) {
        throw std::invalid_argument("inject_errors: weight " + std::to_string(weight) +
                                    " outside [0, " + std::to_string(n) + "]");
    }
    const PrimeField field = word[0].field();
    const std::uint64_t q = field.modulus();

    Rng rng(seed);
    // Partial Fisher-Yates picks the error support uniformly.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < weight; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<std::size_t> positions(idx.begin(), idx.begin() + weight);
    std::sort(positions.begin(), positions.end());

    CorruptionResult out{Word(word.begin(), word.end()), std::move(positions)};
    for (std::size_t p : out.positions) {
        // Adding a uniform nonzero offset is uniform over the other symbols.
        const FieldElement offset = field.element(1 + rng.below(q - 1));
        out.word[p] += offset;
    }
    return out;
}

int hamming_distance(std::span<const FieldElement> a, std::span<const FieldElement> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming_distance: length mismatch");
    }
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) ++d;
    }
    return d;
}

}  // namespace listdec
