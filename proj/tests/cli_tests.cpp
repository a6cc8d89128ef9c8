#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cmd(const std::string& args) {
    std::string cmd = std::string(CERTIFY_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

nlohmann::json parse(const std::string& text) {
    return nlohmann::json::parse(text);
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    return lines;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("odd grassmannian certify") {
        CmdResult r = run_cmd("--k 1 --n 3");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = parse(r.out);
        CHECK(j["schema"] == 1);
        CHECK(j["command"] == "certify");
        CHECK(j["count"].get<int>() >= 1);
        const auto& c = j["certificates"][0];
        CHECK(c["strategy"] == "oddG");
        CHECK(c["family"]["base"] == 2);
        CHECK(c["family"]["step"] == 1);
    }

    TEST_CASE("usage errors exit with one") {
        CHECK(run_cmd("").exit_code == 1);
        CHECK(run_cmd("--k 1").exit_code == 1);
        CHECK(run_cmd("--k 2 --n 4").exit_code == 1);  // certify the dual side
        CHECK(run_cmd("--k 0 --n 4").exit_code == 1);
        CHECK(run_cmd("--k 1 --n 7 --strategy nope").exit_code == 1);
        CHECK(run_cmd("--k 1 --n 4 --strategy alphabeta").exit_code == 1);
        CHECK(run_cmd("--k 1 --n 7 --strategy oddG").exit_code == 1);
        CHECK(run_cmd("--k 2 --n 8 --strategy k1").exit_code == 1);
        CHECK(run_cmd("--format yaml --k 1 --n 3").exit_code == 1);
    }

    TEST_CASE("help exits cleanly") {
        CmdResult r = run_cmd("--help");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("certify") != std::string::npos);
    }

    TEST_CASE("beta family strategy") {
        CmdResult r = run_cmd("--k 3 --n 8 --strategy beta-family --beta 3");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = parse(r.out);
        REQUIRE(j["count"] == 1);
        CHECK(j["certificates"][0]["degree"] == 5);
        CHECK(j["certificates"][0]["family"]["step"] == 10);
        CHECK(j["config"]["beta"] == 3);
    }

    TEST_CASE("alphabeta strategy") {
        CmdResult r =
            run_cmd("--k 1 --n 4 --strategy alphabeta --alpha 0 --beta 2 "
                    "--max-e0 6");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = parse(r.out);
        CHECK(j["count"].get<int>() >= 1);
        CHECK(j["certificates"][0]["cycle"]["alpha"] == 0);
        CHECK(j["certificates"][0]["cycle"]["beta"] == 2);
    }

    TEST_CASE("nothing found exits with two") {
        // the kernel bound excludes every floor match for this cycle
        CmdResult r =
            run_cmd("--k 1 --n 4 --strategy alphabeta --alpha 1 --beta 1");
        CHECK(r.exit_code == 2);
    }

    TEST_CASE("deterministic output") {
        const std::string args = "--k 1 --n 7 --strategy k1 --max-e0 12";
        CmdResult a = run_cmd(args);
        CmdResult b = run_cmd(args);
        REQUIRE(a.exit_code == 0);
        CHECK(a.out == b.out);
    }

    TEST_CASE("csv rendering matches json count") {
        const std::string args = "--k 1 --n 7 --strategy k1 --max-e0 12";
        CmdResult js = run_cmd(args);
        REQUIRE(js.exit_code == 0);
        std::size_t count = parse(js.out)["count"].get<std::size_t>();
        REQUIRE(count >= 1);
        CmdResult csv = run_cmd(args + " --format csv");
        REQUIRE(csv.exit_code == 0);
        CHECK(count_lines(csv.out) == count + 1);
        CHECK(csv.out.rfind("k,n,strategy,degree,partition,e,e_plus,reading,"
                            "family_base,family_step,certificate\n", 0) == 0);
        std::size_t eol = csv.out.find('\n');
        std::string second = csv.out.substr(eol + 1, csv.out.find('\n', eol + 1) - eol - 1);
        CHECK(second.rfind("1,7,k1-odd,", 0) == 0);
    }

    TEST_CASE("out file redirects the report") {
        std::string path = "cli_out_test.json";
        CmdResult r = run_cmd("--k 1 --n 3 --out " + path);
        REQUIRE(r.exit_code == 0);
        CHECK(r.out.empty());
        std::ifstream in(path);
        REQUIRE(in.good());
        std::stringstream ss;
        ss << in.rdbuf();
        nlohmann::json j = parse(ss.str());
        CHECK(j["command"] == "certify");
        in.close();
        std::remove(path.c_str());
    }

    TEST_CASE("worked examples battery") {
        CmdResult all = run_cmd("examples");
        CHECK(all.exit_code == 0);
        nlohmann::json j = parse(all.out);
        CHECK(j["ok"] == true);
        CHECK(j["blocks"].size() >= 8);
        CmdResult one = run_cmd("examples --only quadric");
        CHECK(one.exit_code == 0);
        CHECK(parse(one.out)["blocks"].size() == 1);
        CHECK(run_cmd("examples --only bogus").exit_code == 1);
    }

    TEST_CASE("oracle suite on a reduced box") {
        CmdResult r = run_cmd(
            "oracle-suite --max-rank 3 --deg-hi 2 --max-m 4 --max-ell 8 "
            "--max-a 2 --max-b 6 --trials 1");
        REQUIRE(r.exit_code == 0);
        nlohmann::json j = parse(r.out);
        CHECK(j["command"] == "oracle-suite");
        CHECK(j["ok"] == true);
        CHECK(j["checks_run"].get<long long>() > 0);
        CHECK(j["failures"].empty());
        CHECK(j["config"]["trials"] == 1);
    }
}
