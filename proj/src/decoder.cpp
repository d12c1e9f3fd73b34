#include "listdec/decoder.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>

namespace listdec {

std::string to_string(StepToken token) {
    switch (token) {
        case StepToken::S1: return "S1";
        case StepToken::S2: return "S2";
        case StepToken::Root: return "ROOT";
    }
    throw std::logic_error("to_string: unknown token");
}

StepToken token_from_string(const std::string& text) {
    if (text == "S1") return StepToken::S1;
    if (text == "S2") return StepToken::S2;
    if (text == "ROOT") return StepToken::Root;
    throw std::invalid_argument("unknown schedule token \"" + text +
                                "\" (expected S1, S2 or ROOT)");
}

std::string to_string(DecodeStatus status) {
    return status == DecodeStatus::Found ? "FOUND" : "EXHAUSTED";
}

Schedule::Schedule(std::vector<StepToken> tokens, int target_s, int target_ell)
    : tokens_(std::move(tokens)), target_s_(target_s), target_ell_(target_ell) {
    if (target_s_ < 1 || target_ell_ < target_s_) {
        throw std::invalid_argument("Schedule: needs 1 <= s <= ell, got (" +
                                    std::to_string(target_s_) + ", " +
                                    std::to_string(target_ell_) + ")");
    }
    int s1 = 0, s2 = 0;
    for (StepToken t : tokens_) {
        if (t == StepToken::S1) ++s1;
        if (t == StepToken::S2) ++s2;
        // Prefix feasibility: s-hat = 1 + #S2 never exceeds
        // ell-hat = 1 + #S1 + #S2.
        if (1 + s2 > 1 + s1 + s2) {
            throw std::invalid_argument("Schedule: infeasible prefix");
        }
    }
    if (s1 != target_ell_ - target_s_ || s2 != target_s_ - 1) {
        throw std::invalid_argument(
            "Schedule: token counts (" + std::to_string(s1) + " S1, " + std::to_string(s2) +
            " S2) do not reach (" + std::to_string(target_s_) + ", " +
            std::to_string(target_ell_) + "); need " +
            std::to_string(target_ell_ - target_s_) + " S1 and " +
            std::to_string(target_s_ - 1) + " S2");
    }
}

Schedule make_default_schedule(int n, int k, int target_s, int target_ell) {
    if (target_s < 1 || target_ell < target_s) {
        throw std::invalid_argument("make_default_schedule: needs 1 <= s <= ell");
    }
    const std::optional<int> target_tau = decoding_radius(target_s, target_ell, n, k);
    if (!target_tau) {
        throw std::invalid_argument("make_default_schedule: target (" +
                                    std::to_string(target_s) + ", " +
                                    std::to_string(target_ell) +
                                    ") supports no radius for this code");
    }
    const int base_tau = *decoding_radius(1, 1, n, k);

    std::vector<StepToken> tokens;
    int cur_s = 1, cur_ell = 1;
    for (int tau = base_tau + 1; tau <= *target_tau; ++tau) {
        // Minimal pair (by s, then ell) within the target that supports tau.
        int best_s = -1, best_ell = -1;
        for (int s = 1; s <= target_s && best_s < 0; ++s) {
            for (int ell = s; ell <= target_ell; ++ell) {
                if (compute_E(s, ell, tau, n, k) > 0) {
                    best_s = s;
                    best_ell = ell;
                    break;
                }
            }
        }
        if (best_s < 0) {
            throw std::logic_error("make_default_schedule: no pair for radius " +
                                   std::to_string(tau));
        }
        const int ds = best_s - cur_s, dl = best_ell - cur_ell;
        if (ds < 0 || dl < ds) {
            throw std::invalid_argument(
                "make_default_schedule: pair (" + std::to_string(best_s) + ", " +
                std::to_string(best_ell) + ") for radius " + std::to_string(tau) +
                " is unreachable from (" + std::to_string(cur_s) + ", " +
                std::to_string(cur_ell) + ")");
        }
        for (int i = 0; i < dl - ds; ++i) tokens.push_back(StepToken::S1);
        for (int i = 0; i < ds; ++i) tokens.push_back(StepToken::S2);
        tokens.push_back(StepToken::Root);
        cur_s = best_s;
        cur_ell = best_ell;
    }
    // Finish the walk to the target if the radius enumeration stopped short
    // of it; no Root follows, because the radius would only repeat.
    const int ds = target_s - cur_s, dl = target_ell - cur_ell;
    if (ds < 0 || dl < ds) {
        throw std::invalid_argument("make_default_schedule: target unreachable from (" +
                                    std::to_string(cur_s) + ", " + std::to_string(cur_ell) +
                                    ")");
    }
    for (int i = 0; i < dl - ds; ++i) tokens.push_back(StepToken::S1);
    for (int i = 0; i < ds; ++i) tokens.push_back(StepToken::S2);
    if (tokens.empty()) tokens.push_back(StepToken::Root);
    return Schedule(std::move(tokens), target_s, target_ell);
}

std::vector<ParamTriple> schedule_attempts(const Schedule& schedule, int n, int k) {
    std::vector<ParamTriple> attempts;
    int s = 1, ell = 1;
    auto push = [&](int at_s, int at_ell) {
        const std::optional<int> tau = decoding_radius(at_s, at_ell, n, k);
        if (!tau) {
            throw std::invalid_argument("schedule attempts root-finding at (" +
                                        std::to_string(at_s) + ", " + std::to_string(at_ell) +
                                        "), which supports no radius");
        }
        attempts.push_back({at_s, at_ell, *tau});
    };
    push(1, 1);
    for (StepToken t : schedule.tokens()) {
        switch (t) {
            case StepToken::S1: ++ell; break;
            case StepToken::S2: ++s; ++ell; break;
            case StepToken::Root: push(s, ell); break;
        }
    }
    return attempts;
}

namespace {

std::int64_t micros_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

DecodeResult multi_trial_decode(const GrsCode& code, std::span<const FieldElement> received,
                                const Schedule& schedule) {
    const int n = code.length(), k = code.dimension();
    // Validates every root position up front, the implicit (1, 1) included.
    schedule_attempts(schedule, n, k);
    const int base_tau = *decoding_radius(1, 1, n, k);

    DecodeResult result;
    result.status = DecodeStatus::Exhausted;

    const InterpolationContext ctx = make_context(code, received);

    // A received word that already is a codeword decodes to itself.
    if (ctx.R.degree() < Degree(k)) {
        Word codeword = encode(code, ctx.R);
        if (hamming_distance(codeword, received) != 0) {
            throw std::logic_error("multi_trial_decode: low-degree R is not the received word");
        }
        result.status = DecodeStatus::Found;
        result.s = 1;
        result.ell = 1;
        result.tau = base_tau;
        result.candidates.push_back({ctx.R, std::move(codeword), 0});
        TraceEntry entry{"CODEWORD", 1, 1, {}, {}, {}, {}, {}, 0};
        entry.tau = base_tau;
        entry.found = 1;
        result.trace.push_back(std::move(entry));
        return result;
    }

    auto start = std::chrono::steady_clock::now();
    MinimiseResult init = minimise(ctx, basis_matrix(ctx, 1, 1), 1, 1);
    {
        TraceEntry entry{"INIT", 1, 1, {}, {}, {}, {}, {}, micros_since(start)};
        entry.od_before = init.od_before;
        entry.transforms = init.transform_count;
        result.trace.push_back(std::move(entry));
    }
    InterpolationState state = std::move(init.state);

    auto attempt = [&](const InterpolationState& st) {
        const auto t0 = std::chrono::steady_clock::now();
        const int tau = *decoding_radius(st.s(), st.ell(), n, k);
        const BivarPoly q = minimal_weighted_row(st);
        const std::vector<Poly> roots = y_roots(q, k);
        std::vector<RootCandidate> candidates = filter_candidates(roots, code, received, tau);
        TraceEntry entry{"ROOT", st.s(), st.ell(), {}, {}, {}, {}, {}, micros_since(t0)};
        entry.q_weighted_degree = q.weighted_degree(k).value();
        entry.tau = tau;
        entry.found = candidates.size();
        result.trace.push_back(std::move(entry));
        result.s = st.s();
        result.ell = st.ell();
        result.tau = tau;
        result.candidates = std::move(candidates);
        return !result.candidates.empty();
    };

    if (attempt(state)) {
        result.status = DecodeStatus::Found;
        return result;
    }

    for (StepToken token : schedule.tokens()) {
        if (token == StepToken::Root) {
            if (attempt(state)) {
                result.status = DecodeStatus::Found;
                return result;
            }
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        MinimiseResult step =
            token == StepToken::S1 ? microstep1(state) : microstep2(state);
        TraceEntry entry{to_string(token), step.state.s(), step.state.ell(),
                         {},               {},             {},
                         {},               {},             micros_since(t0)};
        entry.od_before = step.od_before;
        entry.transforms = step.transform_count;
        result.trace.push_back(std::move(entry));
        state = std::move(step.state);
    }
    return result;
}

}  // namespace listdec
