#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "listdec/codec.hpp"
#include "listdec/gsmodule.hpp"
#include "listdec/rootfind.hpp"

namespace listdec {

/// One move of the multi-trial walk: S1 grows the list size, S2 grows both
/// multiplicity and list size, Root attempts decoding at the current
/// parameters.
enum class StepToken { S1, S2, Root };

std::string to_string(StepToken token);
StepToken token_from_string(const std::string& text);

/// Refinement walk from (1, 1) to a target (s, ell). Exactly ell - s S1
/// tokens and s - 1 S2 tokens, in any order, with Root attempts interleaved;
/// an implicit initial Root at (1, 1) always runs before the list.
class Schedule {
public:
    Schedule(std::vector<StepToken> tokens, int target_s, int target_ell);

    const std::vector<StepToken>& tokens() const noexcept { return tokens_; }
    int target_s() const noexcept { return target_s_; }
    int target_ell() const noexcept { return target_ell_; }

private:
    std::vector<StepToken> tokens_;
    int target_s_;
    int target_ell_;
};

/// Default schedule: enumerate the radii above tau(1,1) up to tau(s, ell);
/// for each, take the minimal (by s, then ell) pair within the target that
/// supports it, emit (delta_ell - delta_s) S1 then delta_s S2 tokens, and a
/// Root. Unreachable intermediate pairs raise an error rather than being
/// reordered. If the target improves nothing over (1, 1) the schedule is a
/// lone Root.
Schedule make_default_schedule(int n, int k, int target_s, int target_ell);

/// Parameters and radius at every root attempt the schedule performs,
/// including the implicit initial one. Validates that each attempt sits at
/// parameters that support some radius.
std::vector<ParamTriple> schedule_attempts(const Schedule& schedule, int n, int k);

enum class DecodeStatus { Found, Exhausted };

std::string to_string(DecodeStatus status);

/// One executed step. Micro-steps carry the weighted orthogonality defect of
/// the stacked matrix before reduction and the number of simple
/// transformations the reduction spent; root attempts carry the weighted
/// degree of the interpolation polynomial, the radius tried, and the number
/// of candidates found. micros is wall time, kept out of serialized output.
struct TraceEntry {
    std::string step;
    int s;
    int ell;
    std::optional<std::int64_t> od_before;
    std::optional<std::uint64_t> transforms;
    std::optional<std::int64_t> q_weighted_degree;
    std::optional<int> tau;
    std::optional<std::size_t> found;
    std::int64_t micros = 0;
};

struct DecodeResult {
    DecodeStatus status;
    /// Parameters and radius of the root attempt that produced `candidates`
    /// (the last one executed when status is Exhausted).
    int s;
    int ell;
    int tau;
    std::vector<RootCandidate> candidates;
    std::vector<TraceEntry> trace;
};

/// Multi-trial Guruswami-Sudan list decoding. Builds the (1, 1) module basis,
/// reduces it, attempts decoding, then walks the schedule: refinement tokens
/// update the reduced basis incrementally, root tokens attempt decoding at
/// the current radius, and the first nonempty candidate list wins. A received
/// word that is already a codeword short-circuits to that single candidate.
DecodeResult multi_trial_decode(const GrsCode& code, std::span<const FieldElement> received,
                                const Schedule& schedule);

}  // namespace listdec
