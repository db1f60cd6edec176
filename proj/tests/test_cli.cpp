#include <cstdio>
#include <set>
#include <sys/wait.h>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RunResult run_cli(const std::string& args) {
    std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/kcl_out.txt";
    std::string err_path = out_path + ".err";
    std::string cmd = std::string(KCL_BIN) + " " + args + " > " + out_path +
                      " 2> " + err_path;
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("basic run prints a count of 1 for a triangle") {
    RunResult r = run_cli("--input " + fixture("tri.txt") + " -k 3 --algo sdegree");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("count        1") != std::string::npos);
}

TEST_CASE("fig1 with --emit lists exactly the three 4-cliques") {
    RunResult r =
        run_cli("--input " + fixture("fig1.txt") + " -k 4 --algo bitcol --emit");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::multiset<std::string> cliques;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) cliques.insert(line);
    CHECK(cliques == std::multiset<std::string>(
                         {"1 2 3 4", "1 2 4 6", "9 10 11 12"}));
}

TEST_CASE("json report matches the golden schema") {
    RunResult r = run_cli("--input " + fixture("fig1.txt") + " -k 4 --json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);

    std::set<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
    CHECK(keys == std::set<std::string>(
                      {"dataset", "k", "algo", "ordering", "strategy", "workers",
                       "precore", "prelist", "count", "saturated", "timings_ms",
                       "peak_scratch", "reduction", "graph", "timed_out"}));
    CHECK(j["count"] == 3);
    CHECK(j["k"] == 4);
    CHECK(j["algo"] == "sdegree");
    CHECK(j["graph"]["degeneracy"] == 3);
    std::set<std::string> tkeys;
    for (auto it = j["timings_ms"].begin(); it != j["timings_ms"].end(); ++it)
        tkeys.insert(it.key());
    CHECK(tkeys == std::set<std::string>({"load", "preprocess", "order", "list"}));
    for (const auto& [name, v] : j["timings_ms"].items())
        CHECK(v.get<double>() >= 0.0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("--input " + fixture("tri.txt") + " -k 3 --algo nosuch")
              .exit_code == 2);
    CHECK(run_cli("--input " + fixture("tri.txt") + " -k 3 --algo sdegree "
                  "--ordering color")
              .exit_code == 2);
    CHECK(run_cli("--input " + fixture("tri.txt") + " -k 3 --algo chiba "
                  "--strategy node")
              .exit_code == 2);
    CHECK(run_cli("--input " + fixture("tri.txt") + " -k 2 --strategy edge")
              .exit_code == 2);
    CHECK(run_cli("--input " + fixture("tri.txt") + " -k 3 --workers 0")
              .exit_code == 2);
    CHECK(run_cli("--nonsense").exit_code == 2);
    CHECK(run_cli("-k 3").exit_code == 2);  // missing --input
}

TEST_CASE("runtime errors exit 1") {
    CHECK(run_cli("--input /does/not/exist.txt -k 3").exit_code == 1);
}

TEST_CASE("every valid algo x strategy x preprocessing combination runs") {
    std::string base = "--input " + fixture("fig1.txt") + " -k 4 ";
    for (std::string algo : {"sdegree", "bitcol", "kclist"})
        for (std::string st : {"serial", "node", "edge"})
            for (std::string prep : {"", "--no-precore", "--no-prelist",
                                     "--no-precore --no-prelist"}) {
                std::string args =
                    base + "--algo " + algo + " --strategy " + st + " " + prep;
                RunResult r = run_cli(args);
                CAPTURE(args);
                CHECK(r.exit_code == 0);
                CHECK(r.out.find("count        3") != std::string::npos);
            }
    CHECK(run_cli(base + "--algo chiba").exit_code == 0);
    for (std::string ord : {"degree", "degeneracy", "color"})
        CHECK(run_cli(base + "--algo kclist --ordering " + ord).exit_code == 0);
}

TEST_CASE("crosscheck agrees on fig1 and detects an injected fault") {
    std::string base = "crosscheck --input " + fixture("fig1.txt") + " -k 4";
    RunResult ok = run_cli(base);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("all engines agree") != std::string::npos);
    RunResult bad = run_cli(base + " --inject-fault");
    CHECK(bad.exit_code == 3);
    CHECK(bad.err.find("disagreement") != std::string::npos);
    CHECK(run_cli(base + " --skip-oracle").exit_code == 0);
}

TEST_CASE("gen: complete size, gnp determinism, planted clique found") {
    std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    RunResult k6 = run_cli("gen complete -n 6");
    CHECK(k6.exit_code == 0);
    int lines = 0;
    for (char c : k6.out) lines += c == '\n';
    CHECK(lines == 15);

    std::string a = tmp + "/kcl_gnp_a.txt", b = tmp + "/kcl_gnp_b.txt";
    CHECK(run_cli("gen gnp -n 100 -p 0.1 --seed 7 -o " + a).exit_code == 0);
    CHECK(run_cli("gen gnp -n 100 -p 0.1 --seed 7 -o " + b).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());

    std::string pc = tmp + "/kcl_planted.txt";
    CHECK(run_cli("gen planted-clique -n 500 -p 0.05 --clique 12 --seed 1 -o " + pc)
              .exit_code == 0);
    RunResult res = run_cli("--input " + pc + " -k 12 --algo bitcol --json");
    REQUIRE(res.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(res.out);
    CHECK(j["count"].get<uint64_t>() >= 1);

    CHECK(run_cli("gen nosuch -n 5").exit_code == 2);
    CHECK(run_cli("gen gnp -n 10 -p 1.5").exit_code == 2);
    CHECK(run_cli("gen barabasi -n 50 --attach 3 --seed 2").exit_code == 0);
}

TEST_CASE("time limit reports partial progress as timed out") {
    std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    std::string big = tmp + "/kcl_big.txt";
    REQUIRE(run_cli("gen gnp -n 400 -p 0.2 --seed 3 -o " + big).exit_code == 0);
    RunResult r = run_cli("--input " + big +
                          " -k 7 --algo kclist --time-limit 0.0001 --json");
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["timed_out"] == true);
}
