#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "listdec/codec.hpp"
#include "listdec/decoder.hpp"
#include "listdec/oracles.hpp"
#include "listdec/rng.hpp"

using namespace listdec;

namespace {

std::vector<std::string> step_names(const DecodeResult& result) {
    std::vector<std::string> names;
    for (const TraceEntry& entry : result.trace) names.push_back(entry.step);
    return names;
}

}  // namespace

TEST_CASE("tokens map to their names and back") {
    CHECK(to_string(StepToken::S1) == "S1");
    CHECK(to_string(StepToken::S2) == "S2");
    CHECK(to_string(StepToken::Root) == "ROOT");
    for (StepToken t : {StepToken::S1, StepToken::S2, StepToken::Root}) {
        CHECK(token_from_string(to_string(t)) == t);
    }
    CHECK_THROWS_AS(token_from_string("root"), std::invalid_argument);
    CHECK_THROWS_AS(token_from_string(""), std::invalid_argument);
    CHECK(to_string(DecodeStatus::Found) == "FOUND");
    CHECK(to_string(DecodeStatus::Exhausted) == "EXHAUSTED");
}

TEST_CASE("schedules enforce token counts but not token order") {
    using enum StepToken;
    CHECK_NOTHROW(Schedule({}, 1, 1));
    CHECK_NOTHROW(Schedule({S1, Root, S1, S2, Root}, 2, 4));
    CHECK_NOTHROW(Schedule({S2, S1, Root}, 2, 3));
    CHECK_NOTHROW(Schedule({Root, Root, S1}, 1, 2));

    CHECK_THROWS_AS(Schedule({S1}, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Schedule({}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Schedule({S2}, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Schedule({}, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Schedule({}, 2, 1), std::invalid_argument);
}

TEST_CASE("default schedules walk through the intermediate radii") {
    using enum StepToken;
    const Schedule full = make_default_schedule(16, 4, 2, 4);
    CHECK(full.tokens() == std::vector<StepToken>{S1, Root, S1, S2, Root});
    const std::vector<ParamTriple> attempts = schedule_attempts(full, 16, 4);
    REQUIRE(attempts.size() == 3);
    CHECK(attempts[0].s == 1);
    CHECK(attempts[0].ell == 1);
    CHECK(attempts[0].tau == 6);
    CHECK(attempts[1].s == 1);
    CHECK(attempts[1].ell == 2);
    CHECK(attempts[1].tau == 7);
    CHECK(attempts[2].s == 2);
    CHECK(attempts[2].ell == 4);
    CHECK(attempts[2].tau == 8);
    for (std::size_t i = 1; i < attempts.size(); ++i) {
        CHECK(attempts[i - 1].tau < attempts[i].tau);
    }

    CHECK(make_default_schedule(16, 4, 1, 1).tokens() == std::vector<StepToken>{Root});
    CHECK(make_default_schedule(16, 4, 1, 2).tokens() == std::vector<StepToken>{S1, Root});

    CHECK_THROWS_AS(make_default_schedule(16, 4, 1, 12), std::invalid_argument);
    CHECK_THROWS_AS(make_default_schedule(16, 4, 0, 1), std::invalid_argument);
}

TEST_CASE("only explicit root attempts are validated against the radius table") {
    using enum StepToken;
    // Walking to a pair that supports no radius is allowed while nothing is
    // attempted there.
    const Schedule walk_only(std::vector<StepToken>(11, S1), 1, 12);
    const std::vector<ParamTriple> attempts = schedule_attempts(walk_only, 16, 4);
    REQUIRE(attempts.size() == 1);
    CHECK(attempts[0].tau == 6);

    std::vector<StepToken> with_attempt(11, S1);
    with_attempt.push_back(Root);
    const Schedule bad(with_attempt, 1, 12);
    CHECK_THROWS_AS(schedule_attempts(bad, 16, 4), std::invalid_argument);

    const PrimeField f17(17);
    const GrsCode code(f17, 16, 4);
    const Word zero(16, f17.zero());
    CHECK_THROWS_AS(multi_trial_decode(code, zero, bad), std::invalid_argument);
}

TEST_CASE("a clean codeword short-circuits the walk") {
    const PrimeField f17(17);
    const GrsCode code(f17, 16, 4);
    Rng rng(700);
    const Poly f = testutil::random_message(code, rng);
    const Word sent = encode(code, f);
    const Schedule schedule = make_default_schedule(16, 4, 2, 4);

    const DecodeResult result = multi_trial_decode(code, sent, schedule);
    CHECK(result.status == DecodeStatus::Found);
    CHECK(result.s == 1);
    CHECK(result.ell == 1);
    CHECK(result.tau == 6);
    REQUIRE(result.candidates.size() == 1);
    CHECK(result.candidates[0].f == f);
    CHECK(result.candidates[0].distance == 0);
    CHECK(result.candidates[0].codeword == sent);
    REQUIRE(result.trace.size() == 1);
    CHECK(result.trace[0].step == "CODEWORD");
    CHECK(result.trace[0].found == 1);
    CHECK(result.trace[0].tau == 6);
}

TEST_CASE("few errors stop at the first attempt") {
    const PrimeField f17(17);
    const GrsCode code(f17, 16, 4);
    const Schedule schedule = make_default_schedule(16, 4, 2, 4);
    Rng rng(701);
    for (int weight : {1, 3, 6}) {
        const Poly f = testutil::random_message(code, rng);
        const Word sent = encode(code, f);
        const Word received = inject_errors(sent, weight, rng.next()).word;

        const DecodeResult result = multi_trial_decode(code, received, schedule);
        CHECK(result.status == DecodeStatus::Found);
        CHECK(result.s == 1);
        CHECK(result.ell == 1);
        CHECK(result.tau == 6);
        REQUIRE(result.candidates.size() == 1);
        CHECK(result.candidates[0].f == f);
        CHECK(result.candidates[0].distance == weight);
        CHECK(step_names(result) == std::vector<std::string>{"INIT", "ROOT"});
    }
}

TEST_CASE("trace entries carry the fields of their step type") {
    const PrimeField f17(17);
    const GrsCode code(f17, 16, 4);
    const Schedule schedule = make_default_schedule(16, 4, 2, 4);
    Rng rng(702);
    const Poly f = testutil::random_message(code, rng);
    const Word received = inject_errors(encode(code, f), 8, 909).word;

    const DecodeResult result = multi_trial_decode(code, received, schedule);
    REQUIRE(!result.trace.empty());
    for (const TraceEntry& entry : result.trace) {
        CHECK(entry.micros >= 0);
        if (entry.step == "ROOT") {
            CHECK(entry.q_weighted_degree.has_value());
            CHECK(entry.tau.has_value());
            CHECK(entry.found.has_value());
            CHECK_FALSE(entry.od_before.has_value());
            CHECK_FALSE(entry.transforms.has_value());
        } else {
            CHECK(entry.od_before.has_value());
            CHECK(entry.transforms.has_value());
            CHECK_FALSE(entry.tau.has_value());
        }
    }
}

TEST_CASE("eight errors need the full refinement walk") {
    const PrimeField f17(17);
    const GrsCode code(f17, 16, 4);
    const Schedule schedule = make_default_schedule(16, 4, 2, 4);
    Rng rng(703);
    for (int trial = 0; trial < 3; ++trial) {
        const Poly f = testutil::random_message(code, rng);
        const Word sent = encode(code, f);
        const Word received = inject_errors(sent, 8, rng.next()).word;

        const DecodeResult result = multi_trial_decode(code, received, schedule);
        CHECK(result.status == DecodeStatus::Found);
        CHECK(result.s == 2);
        CHECK(result.ell == 4);
        CHECK(result.tau == 8);
        bool has_f = false;
        for (const RootCandidate& c : result.candidates) has_f |= c.f == f;
        CHECK(has_f);
        CHECK(result.candidates == brute_force_nearest(code, received, 8));
        CHECK(step_names(result) ==
              std::vector<std::string>{"INIT", "ROOT", "S1", "ROOT", "S1", "S2", "ROOT"});
    }
}

TEST_CASE("seven errors stop at the intermediate radius") {
    const PrimeField f17(17);
    const GrsCode code(f17, 16, 4);
    const Schedule schedule = make_default_schedule(16, 4, 2, 4);
    Rng rng(704);
    const Poly f = testutil::random_message(code, rng);
    const Word received = inject_errors(encode(code, f), 7, rng.next()).word;

    const DecodeResult result = multi_trial_decode(code, received, schedule);
    CHECK(result.status == DecodeStatus::Found);
    CHECK(result.s == 1);
    CHECK(result.ell == 2);
    CHECK(result.tau == 7);
    bool has_f = false;
    for (const RootCandidate& c : result.candidates) has_f |= c.f == f;
    CHECK(has_f);
    CHECK(step_names(result) == std::vector<std::string>{"INIT", "ROOT", "S1", "ROOT"});
}

TEST_CASE("the candidate list always equals the exhaustive ball search") {
    const PrimeField f17(17);
    const GrsCode code(f17, 16, 4);
    const Schedule schedule = make_default_schedule(16, 4, 2, 4);
    Rng rng(705);
    for (int trial = 0; trial < 3; ++trial) {
        const Poly f = testutil::random_message(code, rng);
        const Word received = inject_errors(encode(code, f), 10, rng.next()).word;

        // Ten errors sit beyond every radius of the schedule; whatever the
        // outcome, the reported list must match the ball around the reported
        // radius exactly.
        const DecodeResult result = multi_trial_decode(code, received, schedule);
        CHECK(result.candidates == brute_force_nearest(code, received, result.tau));
        if (result.status == DecodeStatus::Exhausted) {
            CHECK(result.s == 2);
            CHECK(result.ell == 4);
            CHECK(result.tau == 8);
            CHECK(result.candidates.empty());
        }
    }
}

TEST_CASE("refinement tokens run even when no attempt concludes them") {
    using enum StepToken;
    const PrimeField f17(17);
    const GrsCode code(f17, 16, 4);
    const Schedule walk({S1, S1, S2}, 2, 4);
    Rng rng(706);
    const Poly f = testutil::random_message(code, rng);
    const Word received = inject_errors(encode(code, f), 8, rng.next()).word;

    const DecodeResult result = multi_trial_decode(code, received, walk);
    CHECK(result.status == DecodeStatus::Exhausted);
    CHECK(result.s == 1);
    CHECK(result.ell == 1);
    CHECK(result.tau == 6);
    CHECK(step_names(result) ==
          std::vector<std::string>{"INIT", "ROOT", "S1", "S1", "S2"});
    const TraceEntry& last = result.trace.back();
    CHECK(last.s == 2);
    CHECK(last.ell == 4);
}
