#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "listdec/field.hpp"
#include "listdec/poly.hpp"

namespace listdec {

using Word = std::vector<FieldElement>;

/// Generalised Reed-Solomon code: codewords (w_0 f(a_0), ..., w_{n-1}
/// f(a_{n-1})) for deg f < k, with distinct nonzero evaluation points a_i and
/// nonzero column multipliers w_i. Minimum distance n - k + 1.
class GrsCode {
public:
    /// Standard instance: a_i the first n nonzero elements in natural order,
    /// all multipliers 1.
    GrsCode(const PrimeField& field, int n, int k);
    GrsCode(const PrimeField& field, int n, int k, std::vector<FieldElement> alphas,
            std::vector<FieldElement> ws);

    PrimeField field() const noexcept { return field_; }
    int length() const noexcept { return n_; }
    int dimension() const noexcept { return k_; }
    int min_distance() const noexcept { return n_ - k_ + 1; }
    std::span<const FieldElement> alphas() const noexcept { return alphas_; }
    std::span<const FieldElement> ws() const noexcept { return ws_; }

private:
    void validate() const;

    PrimeField field_;
    int n_;
    int k_;
    std::vector<FieldElement> alphas_;
    std::vector<FieldElement> ws_;
};

/// Evaluate the message polynomial at the code locators; deg f >= k is an
/// error.
Word encode(const GrsCode& code, const Poly& f);

struct CorruptionResult {
    Word word;
    std::vector<std::size_t> positions;  // ascending
};

/// Corrupt exactly `weight` distinct positions, each to a uniformly random
/// different symbol. Fully determined by the seed.
CorruptionResult inject_errors(std::span<const FieldElement> word, int weight,
                               std::uint64_t seed);

int hamming_distance(std::span<const FieldElement> a, std::span<const FieldElement> b);

}  // namespace listdec
