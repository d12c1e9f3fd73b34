#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "listdec/codec.hpp"
#include "listdec/decoder.hpp"
#include "listdec/gsmodule.hpp"
#include "listdec/json_io.hpp"
#include "listdec/oracles.hpp"
#include "listdec/rng.hpp"

using namespace listdec;
using nlohmann::json;

namespace {

Word word_from_values(const PrimeField& field, const std::vector<std::uint64_t>& values) {
    Word out;
    out.reserve(values.size());
    for (std::uint64_t v : values) out.push_back(field.element(v));
    return out;
}

GrsCode build_code(std::uint64_t q, int n, int k, const std::vector<std::uint64_t>& alphas,
                   const std::vector<std::uint64_t>& ws) {
    const PrimeField field(q);
    if (alphas.empty() && ws.empty()) return GrsCode(field, n, k);
    Word a = alphas.empty() ? Word{} : word_from_values(field, alphas);
    if (a.empty()) {
        for (int i = 1; i <= n; ++i) a.push_back(field.element(static_cast<std::uint64_t>(i)));
    }
    Word w = ws.empty() ? Word(static_cast<std::size_t>(n), field.one())
                        : word_from_values(field, ws);
    return GrsCode(field, n, k, std::move(a), std::move(w));
}

Schedule build_schedule(int n, int k, int s, int ell, const std::vector<std::string>& tokens) {
    if (tokens.empty()) return make_default_schedule(n, k, s, ell);
    std::vector<StepToken> parsed;
    parsed.reserve(tokens.size());
    for (const std::string& t : tokens) parsed.push_back(token_from_string(t));
    return Schedule(std::move(parsed), s, ell);
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

std::string word_text(std::span<const FieldElement> word) {
    std::string out;
    for (const FieldElement& s : word) {
        if (!out.empty()) out += ' ';
        out += std::to_string(s.value());
    }
    return out;
}

std::int64_t micros_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

std::uint64_t median(std::vector<std::uint64_t> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty sample");
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

int cmd_encode(std::uint64_t q, int n, int k, const std::vector<std::uint64_t>& alphas,
               const std::vector<std::uint64_t>& ws, const std::vector<std::uint64_t>& info,
               const std::string& format) {
    const GrsCode code = build_code(q, n, k, alphas, ws);
    const Poly f(code.field(), info);
    const Word codeword = encode(code, f);
    if (format == "text") {
        std::cout << word_text(codeword) << "\n";
    } else {
        print_json(word_to_json(codeword));
    }
    return 0;
}

int cmd_corrupt(std::uint64_t q, const std::vector<std::uint64_t>& word, int weight,
                std::uint64_t seed, const std::string& format) {
    const PrimeField field(q);
    const Word in = word_from_values(field, word);
    const CorruptionResult out = inject_errors(in, weight, seed);
    if (format == "text") {
        std::cout << "word " << word_text(out.word) << "\n";
        std::string pos;
        for (int p : out.positions) {
            if (!pos.empty()) pos += ' ';
            pos += std::to_string(p);
        }
        std::cout << "positions " << pos << "\n";
    } else {
        print_json(json{{"word", word_to_json(out.word)}, {"positions", out.positions}});
    }
    return 0;
}

int cmd_decode(std::uint64_t q, int n, int k, const std::vector<std::uint64_t>& alphas,
               const std::vector<std::uint64_t>& ws, const std::vector<std::uint64_t>& received,
               int s, int ell, const std::vector<std::string>& tokens, bool verify,
               const std::string& format) {
    const GrsCode code = build_code(q, n, k, alphas, ws);
    const Word word = word_from_values(code.field(), received);
    const Schedule schedule = build_schedule(n, k, s, ell, tokens);
    const DecodeResult result = multi_trial_decode(code, word, schedule);

    if (format == "text") {
        std::cout << "status " << to_string(result.status) << " at (" << result.s << ", "
                  << result.ell << ") tau " << result.tau << "\n";
        for (const RootCandidate& c : result.candidates) {
            std::cout << "candidate f = " << c.f.to_string() << " distance " << c.distance
                      << "\n";
        }
        for (const TraceEntry& e : result.trace) {
            std::cout << "trace " << e.step << " (" << e.s << ", " << e.ell << ")";
            if (e.od_before) std::cout << " od " << *e.od_before;
            if (e.transforms) std::cout << " transforms " << *e.transforms;
            if (e.q_weighted_degree) std::cout << " wdeg " << *e.q_weighted_degree;
            if (e.tau) std::cout << " tau " << *e.tau;
            if (e.found) std::cout << " found " << *e.found;
            std::cout << " " << e.micros << "us\n";
        }
    } else {
        print_json(decode_result_to_json(result));
    }

    if (verify) {
        const std::vector<RootCandidate> expected = brute_force_nearest(code, word, result.tau);
        if (expected != result.candidates) {
            std::cerr << "verification failed: decoder returned " << result.candidates.size()
                      << " candidates but the ball of radius " << result.tau << " holds "
                      << expected.size() << "\n";
            return 3;
        }
        std::cerr << "verified against exhaustive search\n";
    }
    return 0;
}

int cmd_schedule(int n, int k, int s, int ell, const std::vector<std::string>& tokens,
                 const std::string& format) {
    const Schedule schedule = build_schedule(n, k, s, ell, tokens);
    const std::vector<ParamTriple> attempts = schedule_attempts(schedule, n, k);
    if (format == "text") {
        std::cout << "target (" << schedule.target_s() << ", " << schedule.target_ell() << ")\n";
        std::string toks;
        for (StepToken t : schedule.tokens()) {
            if (!toks.empty()) toks += ' ';
            toks += to_string(t);
        }
        std::cout << "tokens " << toks << "\n";
        for (const ParamTriple& a : attempts) {
            std::cout << "attempt (" << a.s << ", " << a.ell << ") tau " << a.tau << "\n";
        }
    } else {
        print_json(schedule_to_json(schedule, attempts));
    }
    return 0;
}

json trace_entry_to_json_with_micros(const TraceEntry& e) {
    json entry{{"step", e.step}, {"s", e.s}, {"ell", e.ell}, {"micros", e.micros}};
    if (e.od_before) entry["od_before"] = *e.od_before;
    if (e.transforms) entry["transforms"] = *e.transforms;
    if (e.q_weighted_degree) entry["q_weighted_degree"] = *e.q_weighted_degree;
    if (e.tau) entry["tau"] = *e.tau;
    if (e.found) entry["found"] = *e.found;
    return entry;
}

int cmd_bench(std::uint64_t q, int n, int k, const std::vector<std::uint64_t>& alphas,
              const std::vector<std::uint64_t>& ws, int s, int ell,
              const std::vector<int>& weights, int trials, std::uint64_t seed,
              const std::string& format) {
    if (trials < 1) throw std::invalid_argument("bench needs at least one trial");
    const GrsCode code = build_code(q, n, k, alphas, ws);
    const Schedule schedule = make_default_schedule(n, k, s, ell);

    json trial_rows = json::array();
    json per_weight = json::array();
    std::vector<std::uint64_t> all_multi, all_single;

    for (int weight : weights) {
        std::vector<std::uint64_t> multi_counts, single_counts;
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng(mix_seed(seed, static_cast<std::uint64_t>(weight) * 1000003ULL +
                                       static_cast<std::uint64_t>(trial)));
            Poly f(code.field());
            for (int d = 0; d < k; ++d) {
                f += Poly::monomial(code.field(),
                                    code.field().element(rng.below(code.field().modulus())),
                                    static_cast<std::size_t>(d));
            }
            const Word sent = encode(code, f);
            const Word received =
                weight == 0 ? sent : inject_errors(sent, weight, rng.next()).word;

            const DecodeResult result = multi_trial_decode(code, received, schedule);
            std::uint64_t total = 0;
            json steps = json::array();
            for (const TraceEntry& e : result.trace) {
                if (e.transforms) total += *e.transforms;
                steps.push_back(trace_entry_to_json_with_micros(e));
            }

            const auto t0 = std::chrono::steady_clock::now();
            const InterpolationContext ctx = make_context(code, received);
            const MinimiseResult one_shot = minimise(ctx, basis_matrix(ctx, s, ell), s, ell);
            const std::int64_t one_shot_micros = micros_since(t0);

            multi_counts.push_back(total);
            single_counts.push_back(one_shot.transform_count);
            trial_rows.push_back(
                json{{"weight", weight},
                     {"trial", trial},
                     {"steps", std::move(steps)},
                     {"total_transforms", total},
                     {"one_shot", json{{"od_before", one_shot.od_before},
                                       {"transforms", one_shot.transform_count},
                                       {"micros", one_shot_micros}}}});
        }
        all_multi.insert(all_multi.end(), multi_counts.begin(), multi_counts.end());
        all_single.insert(all_single.end(), single_counts.begin(), single_counts.end());
        per_weight.push_back(json{{"weight", weight},
                                  {"multi_trial_median", median(multi_counts)},
                                  {"one_shot_median", median(single_counts)}});
    }

    const json out{{"target", json{{"s", s}, {"ell", ell}}},
                   {"medians", json{{"multi_trial", median(all_multi)},
                                    {"one_shot", median(all_single)}}},
                   {"per_weight", std::move(per_weight)},
                   {"trials", std::move(trial_rows)}};

    if (format == "text") {
        for (const json& row : out["per_weight"]) {
            std::cout << "weight " << row["weight"] << " multi_trial median "
                      << row["multi_trial_median"] << " one_shot median "
                      << row["one_shot_median"] << "\n";
        }
        std::cout << "overall multi_trial " << out["medians"]["multi_trial"] << " one_shot "
                  << out["medians"]["one_shot"] << "\n";
    } else {
        print_json(out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalised Reed-Solomon list decoding"};
    app.require_subcommand(1);

    std::uint64_t q = 0, seed = 0;
    int n = 0, k = 0, s = 0, ell = 0, weight = 0, trials = 20;
    std::vector<std::uint64_t> alphas, ws, info, word, received;
    std::vector<std::string> tokens;
    std::vector<int> weights{0, 1, 2, 3, 4, 5, 6, 7, 8};
    bool verify = false;
    std::string format = "json";

    const auto add_code_flags = [&](CLI::App* cmd) {
        cmd->add_option("--q", q, "field size (prime)")->required();
        cmd->add_option("--n", n, "code length")->required();
        cmd->add_option("--k", k, "code dimension")->required();
        cmd->add_option("--alphas", alphas, "evaluation points, comma separated")
            ->delimiter(',');
        cmd->add_option("--ws", ws, "column multipliers, comma separated")->delimiter(',');
    };
    const auto add_format_flag = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
    };
    const auto add_target_flags = [&](CLI::App* cmd) {
        cmd->add_option("--s", s, "target multiplicity")->required();
        cmd->add_option("--ell", ell, "target list size")->required();
        cmd->add_option("--tokens", tokens, "explicit schedule tokens, comma separated")
            ->delimiter(',');
    };

    CLI::App* enc = app.add_subcommand("encode", "evaluate an information polynomial");
    add_code_flags(enc);
    add_format_flag(enc);
    enc->add_option("--info", info, "information polynomial, ascending coefficients")
        ->delimiter(',')
        ->required();

    CLI::App* cor = app.add_subcommand("corrupt", "inject errors of an exact weight");
    cor->add_option("--q", q, "field size (prime)")->required();
    cor->add_option("--word", word, "word to corrupt, comma separated")
        ->delimiter(',')
        ->required();
    cor->add_option("--weight", weight, "number of positions to corrupt")->required();
    cor->add_option("--seed", seed, "deterministic seed")->required();
    add_format_flag(cor);

    CLI::App* dec = app.add_subcommand("decode", "multi-trial list decoding");
    add_code_flags(dec);
    add_target_flags(dec);
    add_format_flag(dec);
    dec->add_option("--received", received, "received word, comma separated")
        ->delimiter(',')
        ->required();
    dec->add_flag("--verify", verify, "cross-check the candidate list exhaustively");

    CLI::App* sch = app.add_subcommand("schedule", "inspect a refinement schedule");
    sch->add_option("--n", n, "code length")->required();
    sch->add_option("--k", k, "code dimension")->required();
    add_target_flags(sch);
    add_format_flag(sch);

    CLI::App* ben = app.add_subcommand("bench", "compare refinement against one-shot reduction");
    add_code_flags(ben);
    add_target_flags(ben);
    add_format_flag(ben);
    ben->add_option("--weights", weights, "error weights to sample, comma separated")
        ->delimiter(',');
    ben->add_option("--trials", trials, "trials per weight");
    ben->add_option("--seed", seed, "deterministic seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enc) return cmd_encode(q, n, k, alphas, ws, info, format);
        if (*cor) return cmd_corrupt(q, word, weight, seed, format);
        if (*dec) return cmd_decode(q, n, k, alphas, ws, received, s, ell, tokens, verify,
                                    format);
        if (*sch) return cmd_schedule(n, k, s, ell, tokens, format);
        if (*ben) return cmd_bench(q, n, k, alphas, ws, s, ell, weights, trials, seed, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
