// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary_path() {
    const char* bin = std::getenv("BCTFORGE_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "BCTFORGE_BIN must point at the CLI binary");
    return bin;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("field-info") {
    const auto res = run("--p 7 --k 1 field-info");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["meta"]["q"] == 7);
    CHECK(doc["result"]["q_squared"] == 49);
    CHECK(doc["result"]["modulus"] == json::array({1, 0, 1}));

    CHECK(run("--p 4 --k 1 field-info").exit_code == 2);
    CHECK(run("--p 9 --k 1 field-info").exit_code == 2);

    const auto big = run("--p 3 --k 3 field-info");
    REQUIRE(big.exit_code == 0);
    CHECK(json::parse(big.out)["result"]["q_squared"] == 729);
}

TEST_CASE("spectrum") {
    const auto res = run("--p 7 --k 1 --map f1 spectrum");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["result"]["omega"]["5"] == 1);
    CHECK(doc["result"]["max_delta"] == 5);
    CHECK(doc["meta"]["d"] == 6);

    const auto naive = run("--p 7 --k 1 --map f2 spectrum --naive");
    REQUIRE(naive.exit_code == 0);
    CHECK(json::parse(naive.out)["result"]["oracle_checked"] == true);
}

TEST_CASE("bct") {
    const auto res = run("--p 7 --k 1 --map f1 bct");
    REQUIRE(res.exit_code == 0);
    CHECK(json::parse(res.out)["result"]["beta"] == 2);

    const auto naive = run("--p 7 --k 1 --map f2 bct --naive");
    REQUIRE(naive.exit_code == 0);
    const json doc = json::parse(naive.out);
    CHECK(doc["result"]["beta"] == 2);
    CHECK(doc["result"]["oracle_checked"] == true);

    // custom exponent d = q-1 reproduces the f1 row set
    const auto custom = run("--p 7 --k 1 --map custom --d 6 bct");
    REQUIRE(custom.exit_code == 0);
    CHECK(json::parse(custom.out)["result"]["per_b"] == json::parse(res.out)["result"]["per_b"]);

    CHECK(run("--p 7 --k 1 --map custom bct").exit_code == 2);        // missing --d
    CHECK(run("--p 7 --k 1 --map custom --d 48 bct").exit_code == 2); // out of range
}

TEST_CASE("csv output") {
    const auto res = run("--p 7 --k 1 --map f1 spectrum --format csv");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.rfind("b,delta\n", 0) == 0);
    int rows = -1;  // discount the header
    for (char c : res.out)
        if (c == '\n') ++rows;
    CHECK(rows == 49);
}

TEST_CASE("verify") {
    const auto ok = run("verify --subjects theorem1,theorem2 --q 7,19,27");
    REQUIRE(ok.exit_code == 0);
    const json doc = json::parse(ok.out);
    REQUIRE(doc["result"].size() == 6);
    for (const auto& rep : doc["result"]) CHECK(rep["overall"] == "pass");

    const auto skipped = run("verify --subjects lemma1 --q 5");
    REQUIRE(skipped.exit_code == 0);
    CHECK(json::parse(skipped.out)["result"][0]["overall"] == "hypotheses_not_met");

    CHECK(run("verify --subjects theorem1 --q 3").exit_code == 1);
    CHECK(run("verify --subjects theorem1 --q 3 --allow-unattained").exit_code == 0);

    CHECK(run("verify --subjects theorem1 --q 7,x").exit_code == 2);
    CHECK(run("verify --subjects theorem3 --q 7").exit_code == 2);
    CHECK(run("verify --subjects lemma1 --q 12").exit_code == 2);
    CHECK(run("verify --subjects lemma1 --q 4").exit_code == 2);
}

TEST_CASE("atomic --out") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "bctforge_cli_test";
    fs::create_directories(dir);
    const fs::path out = dir / "report.json";
    fs::remove(out);

    const auto res = run("--p 7 --k 1 --map f1 bct --out " + out.string());
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.empty());
    REQUIRE(fs::exists(out));
    CHECK(!fs::exists(out.string() + ".tmp"));

    std::ifstream f(out);
    json doc;
    f >> doc;
    CHECK(doc["result"]["beta"] == 2);
    fs::remove_all(dir);
}

TEST_CASE("size cap from the environment") {
    CHECK(run("--p 3 --k 3 field-info", "BCTFORGE_SIZE_CAP=100 ").exit_code == 2);
    CHECK(run("--p 3 --k 3 field-info", "BCTFORGE_SIZE_CAP=1000 ").exit_code == 0);
    CHECK(run("verify --subjects lemma1 --q 27", "BCTFORGE_SIZE_CAP=100 ").exit_code == 2);
    CHECK(run("--p 3 --k 1 field-info", "BCTFORGE_SIZE_CAP=abc ").exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").exit_code == 2);                       // missing subcommand
    CHECK(run("spectrum").exit_code == 2);               // missing --p
    CHECK(run("--p 7 --k 1 --map f3 spectrum").exit_code == 2);
    CHECK(run("--p 7 --k 1 --format xml spectrum").exit_code == 2);
}
