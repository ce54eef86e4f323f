/* End-to-end checks against the installed CLI binary (path injected by
 * the build as SYMPART_CLI_PATH). Exit contract: 0 success, 1 identity
 * or cross-check failure, 2 usage error.
 *
 * Mutation note: the exit-1 path of `verify` fires when any residual is
 * nonzero. That was exercised manually by flipping the sign of one term
 * of the Newton recurrence in symmetric.hpp and rebuilding; a healthy
 * tree cannot trigger it, so no automated test asserts it. */

#include <cstdio>
#include <string>

#include <sys/wait.h>

#include "catch2/catch_amalgamated.hpp"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SYMPART_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) {
    const auto pos = s.find('\n');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

TEST_CASE("cli count answers the two headline queries") {
    auto distinct = run_cli("count --m 50 --mu 7 --distinct");
    CHECK(distinct.exit_code == 0);
    CHECK(first_line(distinct.out) == "522");
    CHECK(distinct.out.find("cross-check ok") != std::string::npos);

    auto any = run_cli("count --m 50 --mu 7");
    CHECK(any.exit_code == 0);
    CHECK(first_line(any.out) == "8946");

    auto zero = run_cli("count --m 0 --mu 0");
    CHECK(zero.exit_code == 0);
    CHECK(first_line(zero.out) == "1");
}

TEST_CASE("cli count single-method routes") {
    for (const char* method : {"recurrence", "series", "denumerant", "conversion"}) {
        auto res = run_cli(std::string("count --m 50 --mu 7 --distinct --method ") + method);
        CHECK(res.exit_code == 0);
        CHECK(first_line(res.out) == "522");
    }
}

TEST_CASE("cli handles part counts far beyond the target") {
    auto res = run_cli("count --m 5 --mu 99999999999999");
    CHECK(res.exit_code == 0);
    CHECK(first_line(res.out) == "0");
    auto series = run_cli("series distinct --mu 99999999999 --order 6");
    CHECK(series.exit_code == 0);
    CHECK(first_line(series.out) == "0,0,0,0,0,0,0");
}

TEST_CASE("cli usage errors exit with code 2") {
    CHECK(run_cli("count --mu 7").exit_code == 2);                    // missing --m
    CHECK(run_cli("count --m -4 --mu 2").exit_code == 2);             // negative
    CHECK(run_cli("count --m 5 --mu 2 --method sorcery").exit_code == 2);
    CHECK(run_cli("count --m 5 --mu 0 --method series").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("series pentagonal").exit_code == 2);               // missing --order
    CHECK(run_cli("series distinct --order 5").exit_code == 2);       // missing --mu
    CHECK(run_cli("series pentagonal --order 5 --mu 2").exit_code == 2);
    CHECK(run_cli("table --max-m 3 --max-mu 9").exit_code == 2);      // mu above m
    CHECK(run_cli("table --max-m 20000 --max-mu 3").exit_code == 2);  // m above cap
    CHECK(run_cli("verify --order 1").exit_code == 2);
}

TEST_CASE("cli series emission") {
    auto pent = run_cli("series pentagonal --order 26");
    CHECK(pent.exit_code == 0);
    CHECK(first_line(pent.out) == "1,-1,-1,0,0,1,0,1,0,0,0,0,-1,0,0,-1,0,0,0,0,0,0,1,0,0,0,1");

    auto part = run_cli("series partition --order 8");
    CHECK(first_line(part.out) == "1,1,2,3,5,7,11,15,22");

    auto dist = run_cli("series distinct --mu 1 --order 3");
    CHECK(first_line(dist.out) == "0,1,1,1");

    auto csv = run_cli("series distinct --mu 2 --order 5 --format csv");
    CHECK(csv.out == "k,coefficient\n0,0\n1,0\n2,0\n3,1\n4,1\n5,2\n");
}

TEST_CASE("cli json output round-trips byte for byte") {
    for (const char* invocation :
         {"count --m 50 --mu 7 --distinct --format json",
          "series partition --order 8 --format json",
          "table --max-m 9 --max-mu 3 --format json",
          "verify --order 3 --trials 2 --seed 7 --format json"}) {
        auto res = run_cli(invocation);
        REQUIRE(res.exit_code == 0);
        REQUIRE(!res.out.empty());
        REQUIRE(res.out.back() == '\n');
        const std::string payload = res.out.substr(0, res.out.size() - 1);
        const auto parsed = nlohmann::json::parse(payload);
        CHECK(parsed.dump() == payload);
    }
}

TEST_CASE("cli format changes serialization only") {
    const auto text = run_cli("count --m 30 --mu 4 --distinct");
    const auto csv = run_cli("count --m 30 --mu 4 --distinct --format csv");
    const auto js = run_cli("count --m 30 --mu 4 --distinct --format json");
    const std::string value = first_line(text.out);
    CHECK(value == "108");  // confirmed against the enumeration oracle
    CHECK(csv.out.find("," + value + ",") != std::string::npos);
    const auto parsed = nlohmann::json::parse(js.out);
    CHECK(parsed["result"].get<std::string>() == value);
    CHECK(parsed["cross_check"].get<std::string>() == "ok");
}

TEST_CASE("cli table layout") {
    auto res = run_cli("table --max-m 10 --max-mu 3 --distinct --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("m,1,2,3\n") == 0);
    CHECK(res.out.find("\n6,1,2,1\n") != std::string::npos);

    /* row values confirmed against the enumeration oracle */
    auto row50 = run_cli("table --max-m 50 --max-mu 7 --distinct --format csv");
    CHECK(row50.out.find("\n50,1,24,184,632,1115,1057,522\n") != std::string::npos);

    auto any = run_cli("table --max-m 9 --max-mu 3 --format csv");
    CHECK(any.out.find("\n9,1,4,7\n") != std::string::npos);
}

TEST_CASE("cli verify passes and is deterministic") {
    auto a = run_cli("verify --order 4 --trials 3 --seed 9");
    auto b = run_cli("verify --order 4 --trials 3 --seed 9");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
    CHECK(run_cli("verify --order 2 --trials 1").exit_code == 0);
}
