#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef VERONESE_BIN_PATH
#error "VERONESE_BIN_PATH must point at the built CLI"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_path = "cli_stdout.tmp";
    const std::string err_path = "cli_stderr.tmp";
    const std::string cmd = env_prefix + std::string(VERONESE_BIN_PATH) + " " + args + " >" +
                            out_path + " 2>" + err_path;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

} // namespace

TEST_CASE("bott subcommand") {
    const auto r = run_cli("bott --n 3 --mu 2,0 --r m3");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"l\":2,\"lambda\":[1,-1,-1],\"vanishing\":false}\n");
}

TEST_CASE("nu and m subcommands") {
    CHECK(run_cli("nu --n 2 --d 3 --mu 6").out == "2\n");
    CHECK(run_cli("m --n 2 --d 2 --lambda 3,3").out == "-1\n");
    CHECK(run_cli("m --n 2 --d 2 --lambda 4,2").out == "1\n");
}

TEST_CASE("character subcommand produces the expected slices") {
    const auto d0 = run_cli("character --target D0 --n 2 --d 2 --l1max 4 --lnmin 0");
    REQUIRE(d0.code == 0);
    const auto j = nlohmann::json::parse(d0.out);
    CHECK(j["kind"] == "D0");
    CHECK(j["j"] == 0);
    std::vector<std::vector<int>> lambdas;
    for (const auto& e : j["entries"]) {
        CHECK(e["mult"] == 1);
        lambdas.push_back(e["lambda"].get<std::vector<int>>());
    }
    const std::vector<std::vector<int>> expected{{4, 4}, {4, 2}, {4, 0}, {2, 2}, {2, 0}};
    CHECK(lambdas == expected);

    const auto e_run = run_cli("character --target E --n 2 --d 2 --l1max 5 --lnmin 0");
    REQUIRE(e_run.code == 0);
    const auto je = nlohmann::json::parse(e_run.out);
    std::vector<std::vector<int>> e_lams;
    for (const auto& e : je["entries"]) e_lams.push_back(e["lambda"].get<std::vector<int>>());
    CHECK(e_lams == std::vector<std::vector<int>>{{5, 5}, {5, 3}, {3, 3}});
}

TEST_CASE("character output is byte-deterministic and thread-independent") {
    const std::string base = "character --target D0 --n 3 --d 2 --l1max 6 --lnmin m2";
    const auto a = run_cli(base);
    const auto b = run_cli(base);
    const auto c = run_cli(base + " --threads 3");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("character csv format") {
    const auto r = run_cli("character --target D1 --n 2 --d 2 --l1max 4 --lnmin 0 --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "lambda_1,lambda_2,mult\n"
          "4,1,1\n"
          "2,1,1\n");
}

TEST_CASE("empty window exits cleanly") {
    const auto r = run_cli("character --target D0 --n 2 --d 2 --l1max 0 --lnmin 2");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["entries"].empty());
}

TEST_CASE("verify subcommand") {
    const auto pass = run_cli("verify hooks --d 3 --sizemax 12");
    CHECK(pass.code == 0);
    CHECK(pass.out.rfind("PASS hooks", 0) == 0);

    const auto d2 = run_cli("verify d2-table --n 3 --l1max 8 --lnmin m4");
    CHECK(d2.code == 0);
    CHECK(d2.out.rfind("PASS d2-table", 0) == 0);

    const auto unknown = run_cli("verify no-such-suite");
    CHECK(unknown.code == 2);
}

TEST_CASE("exit code contract") {
    CHECK(run_cli("nonsense").code == 2);
    CHECK(run_cli("character --target D7 --n 2 --d 2 --l1max 4 --lnmin 0").code == 2);
    CHECK(run_cli("character --target D0 --n 99 --d 2 --l1max 4 --lnmin 0").code == 2);
    // resource cap maps to exit 3, distinct from usage errors
    const auto capped = run_cli("verify stabilization --n 4 --d 4 --musize 8",
                                "VERONESE_CACHE_CAP=1000 ");
    CHECK(capped.code == 3);
    CHECK(capped.err.find("resource limit") != std::string::npos);
}

TEST_CASE("ext subcommand") {
    const auto r = run_cli("ext --n 2 --d 2 --mu 2,2 --l1max 8 --lnmin m4");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "ext");
    REQUIRE(j["entries"].size() == 5);
    for (const auto& e : j["entries"]) {
        CHECK(e["degree"] == 1);
        CHECK(e["lambda"][0] == 4);
    }
}
