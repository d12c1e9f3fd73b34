#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "listdec/codec.hpp"
#include "listdec/decoder.hpp"
#include "listdec/json_io.hpp"

using namespace listdec;
using nlohmann::json;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(LISTDEC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string csv(const json& array) {
    std::string out;
    for (const json& v : array) {
        if (!out.empty()) out += ',';
        out += v.dump();
    }
    return out;
}

}  // namespace

TEST_CASE("encode prints the codeword") {
    const CliRun run = run_cli("encode --q 17 --n 16 --k 4 --info 1,0,0,0");
    CHECK(run.exit_code == 0);
    CHECK(run.out == "[1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1]\n");

    const CliRun text = run_cli("encode --q 17 --n 16 --k 4 --info 1,0,0,0 --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.out == "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1\n");
}

TEST_CASE("validation failures exit with code two") {
    CHECK(run_cli("encode --q 17 --n 16 --k 4").exit_code == 2);
    CHECK(run_cli("encode --q 17 --n 16 --k 4 --info 1,0,0,0,1").exit_code == 2);
    CHECK(run_cli("corrupt --q 17 --word 1,2,3 --weight 1").exit_code == 2);
    CHECK(run_cli("bench --q 17 --n 16 --k 4 --s 2 --ell 4").exit_code == 2);
    CHECK(run_cli("decode --q 16 --n 8 --k 2 --received 1,2,3,4,5,6,7,0 --s 1 --ell 1")
              .exit_code == 2);
    CHECK(run_cli("decode --q 17 --n 8 --k 9 --received 1,2,3,4,5,6,7,0 --s 1 --ell 1")
              .exit_code == 2);
    CHECK(run_cli("decode --q 17 --n 16 --k 4 --received 1,2,3 --s 1 --ell 1").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("the pipeline round-trips through encode, corrupt and decode") {
    const CliRun enc = run_cli("encode --q 17 --n 16 --k 4 --info 5,1,2,3");
    REQUIRE(enc.exit_code == 0);
    const json sent = json::parse(enc.out);

    const CliRun cor =
        run_cli("corrupt --q 17 --word " + csv(sent) + " --weight 8 --seed 1");
    REQUIRE(cor.exit_code == 0);
    const json corrupted = json::parse(cor.out);
    REQUIRE(corrupted.contains("word"));
    REQUIRE(corrupted.contains("positions"));
    CHECK(corrupted["positions"].size() == 8);

    const CliRun dec = run_cli("decode --q 17 --n 16 --k 4 --received " +
                               csv(corrupted["word"]) + " --s 2 --ell 4 --verify");
    REQUIRE(dec.exit_code == 0);
    const json result = json::parse(dec.out);
    CHECK(result["status"] == "FOUND");
    bool transmitted_present = false;
    for (const json& c : result["candidates"]) {
        if (c["codeword"] == sent) {
            transmitted_present = true;
            CHECK(c["distance"] == 8);
            CHECK(c["f"] == json::array({5, 1, 2, 3}));
        }
    }
    CHECK(transmitted_present);
}

TEST_CASE("a light corruption stops at the first attempt with one candidate") {
    const CliRun enc = run_cli("encode --q 17 --n 16 --k 4 --info 2,0,7,1");
    REQUIRE(enc.exit_code == 0);
    const CliRun cor = run_cli("corrupt --q 17 --word " + csv(json::parse(enc.out)) +
                               " --weight 6 --seed 3");
    REQUIRE(cor.exit_code == 0);
    const json corrupted = json::parse(cor.out);

    const CliRun dec = run_cli("decode --q 17 --n 16 --k 4 --received " +
                               csv(corrupted["word"]) + " --s 2 --ell 4");
    REQUIRE(dec.exit_code == 0);
    const json result = json::parse(dec.out);
    CHECK(result["status"] == "FOUND");
    CHECK(result["stopped_at"] == json({{"s", 1}, {"ell", 1}, {"tau", 6}}));
    CHECK(result["candidates"].size() == 1);
    REQUIRE(result["trace"].size() == 2);
    CHECK(result["trace"][0]["step"] == "INIT");
    CHECK(result["trace"][1]["step"] == "ROOT");
}

TEST_CASE("identical flags produce byte-identical output") {
    const std::string args =
        "decode --q 17 --n 16 --k 4 --received 7,4,9,16,4,16,0,10,14,7,7,7,7,10,12,0 "
        "--s 2 --ell 4";
    const CliRun first = run_cli(args);
    const CliRun second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
}

TEST_CASE("the schedule subcommand matches the library serialization") {
    const CliRun run = run_cli("schedule --n 16 --k 4 --s 2 --ell 4");
    REQUIRE(run.exit_code == 0);
    const Schedule schedule = make_default_schedule(16, 4, 2, 4);
    const std::vector<ParamTriple> attempts = schedule_attempts(schedule, 16, 4);
    CHECK(json::parse(run.out) == schedule_to_json(schedule, attempts));

    CHECK(run_cli("schedule --n 16 --k 4 --s 1 --ell 12").exit_code == 2);

    const CliRun manual = run_cli("schedule --n 16 --k 4 --s 2 --ell 4 --tokens S1,S1,S2");
    REQUIRE(manual.exit_code == 0);
    CHECK(json::parse(manual.out)["tokens"] == json::array({"S1", "S1", "S2"}));
    CHECK(run_cli("schedule --n 16 --k 4 --s 2 --ell 4 --tokens S1,S1").exit_code == 2);
    CHECK(run_cli("schedule --n 16 --k 4 --s 2 --ell 4 --tokens S1,S1,XX").exit_code == 2);
}

TEST_CASE("bench reports per-step counts and the one-shot comparison") {
    const CliRun run =
        run_cli("bench --q 17 --n 16 --k 4 --s 2 --ell 4 --weights 0,4,8 --trials 2 --seed 5");
    REQUIRE(run.exit_code == 0);
    const json report = json::parse(run.out);
    CHECK(report.contains("medians"));
    CHECK(report["medians"].contains("multi_trial"));
    CHECK(report["medians"].contains("one_shot"));
    REQUIRE(report["per_weight"].size() == 3);
    CHECK(report["trials"].size() == 6);
    for (const json& trial : report["trials"]) {
        CHECK(trial.contains("steps"));
        CHECK(trial.contains("total_transforms"));
        CHECK(trial["one_shot"].contains("transforms"));
        if (trial["weight"] == 0) {
            CHECK(trial["total_transforms"] == 0);
            CHECK(trial["steps"].size() == 1);
            CHECK(trial["steps"][0]["step"] == "CODEWORD");
        }
    }
}
