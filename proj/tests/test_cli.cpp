#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "modasc/cli.hpp"
#include "modasc/export.hpp"
#include "modasc/report.hpp"
#include "modasc/suites.hpp"

using namespace modasc;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "modasc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("generate") {
    CHECK(cli({"generate", "--class", "prim", "--n", "4", "--avoid", "123"}).out == "1312\n");
    CHECK(cli({"generate", "--class", "modasc", "--n", "2"}).out == "11\n12\n");
    CHECK(lines(cli({"generate", "--class", "modasc", "--n", "3", "--avoid", "122"}).out) == 4);
    CHECK(cli({"--format", "spaced", "generate", "--class", "prim", "--n", "3"}).out == "1 2 1\n1 2 3\n");
    CHECK(cli({"generate", "--n", "0"}).out == "\n");
}

TEST_CASE("input errors and caps") {
    const Run over = cli({"generate", "--n", "11"});
    CHECK(over.code == 2);
    CHECK(over.err.find("cap") != std::string::npos);
    CHECK(cli({"generate", "--n", "11", "--cap", "11", "--avoid", "12"}).code == 0);
    CHECK(cli({"generate", "--n", "3", "--avoid", "13"}).code == 2);
    CHECK(cli({"generate", "--n", "3", "--class", "cay"}).code == 2);
    CHECK(cli({"generate"}).code == 2);
    CHECK(cli({"table", "--which", "table1", "--n", "11"}).code == 2);
    CHECK(cli({"verify", "--suite", "identities", "--n", "13"}).code == 2);
    CHECK(cli({"verify", "--suite", "nope", "--n", "3"}).code == 2);
    CHECK(cli({}).code != 0);
}

TEST_CASE("FP_CAP overrides the default caps") {
    setenv("FP_CAP", "3", 1);
    CHECK(cli({"generate", "--n", "4"}).code == 2);
    CHECK(cli({"generate", "--n", "4", "--cap", "4"}).code == 0);
    unsetenv("FP_CAP");
    CHECK(caps_from_environment().words == 10);
    CHECK(caps_from_environment().lattice == 12);
}

TEST_CASE("count") {
    CHECK(cli({"count", "--avoid", "312", "--n", "5"}).out == "1 1\n2 2\n3 5\n4 14\n5 43\n");
    const Run both = cli({"count", "--avoid", "2321", "--n", "6", "--source", "both"});
    CHECK(both.code == 0);
    CHECK(both.out.find("6 203 203") != std::string::npos);
    CHECK(cli({"count", "--avoid", "111", "--n", "4", "--source", "formula"}).code == 2);
    CHECK(cli({"count", "--n", "3", "--class", "prim"}).out == "1 1\n2 1\n3 2\n");
}

TEST_CASE("tables") {
    const Run t0 = cli({"table", "--which", "table1", "--n", "0"});
    CHECK(t0.code == 0);
    CHECK(t0.out.find("FAIL") == std::string::npos);
    const Run t1 = cli({"table", "--which", "table1", "--n", "8"});
    CHECK(t1.code == 0);
    CHECK(t1.out.find("FAIL") == std::string::npos);
    CHECK(t1.out.find("PASS  table1.213.modasc") != std::string::npos);
    const Run t2 = cli({"table", "--which", "table2", "--n", "8"});
    CHECK(t2.code == 0);
    CHECK(t2.out.find("PASS  table2.4321.modasc") != std::string::npos);
    CHECK(t2.out.find("1,2,5,15,53,217,1008,5188") != std::string::npos);
}

TEST_CASE("verify suites") {
    for (const char* s : {"bijections", "transport", "equivalences", "identities"}) {
        CAPTURE(s);
        const Run r = cli({"verify", "--suite", s, "--n", "7"});
        CHECK(r.code == 0);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
    CHECK(cli({"verify", "--suite", "bijections", "--n", "1"}).code == 0);
    CHECK(cli({"verify", "--suite", "all", "--n", "8"}).code == 0);
    CHECK(cli({"verify", "--suite", "identities", "--n", "12"}).code == 0);
}

TEST_CASE("reports are deterministic") {
    const Run a = cli({"verify", "--suite", "all", "--n", "6", "--jobs", "1"});
    const Run b = cli({"verify", "--suite", "all", "--n", "6", "--jobs", "4"});
    CHECK(a.out.substr(a.out.find('\n')) == b.out.substr(b.out.find('\n')));
    CHECK(cli({"verify", "--suite", "all", "--n", "6"}).out == cli({"verify", "--suite", "all", "--n", "6"}).out);
    const Run timed = cli({"--timing", "verify", "--suite", "transport", "--n", "4"});
    CHECK(timed.out.find("# elapsed:") != std::string::npos);
    const Run seedless = cli({"--seedless", "verify", "--suite", "transport", "--n", "4"});
    CHECK(seedless.out.find("PASS  seedless") != std::string::npos);
}

TEST_CASE("json report") {
    const Run r = cli({"--format", "json", "verify", "--suite", "transport", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"command\": \"modasc --format json verify --suite transport --n 3\"") != std::string::npos);
    CHECK(r.out.find("\"failed\": 0") != std::string::npos);
}

TEST_CASE("failing checks give a nonzero exit and a witness") {
    RunReport report("test");
    std::vector<Check> checks{
        {"ok", "", [] { return Outcome{Status::pass, "", std::nullopt}; }},
        {"bad", "topic", [] { return Outcome{Status::fail, "mismatch", std::string("1 2 2")}; }},
        {"throws", "", []() -> Outcome { throw std::runtime_error("boom"); }},
    };
    for (auto& r : run_checks(checks, 2)) report.add(std::move(r));
    CHECK_FALSE(report.ok());
    CHECK(report.exit_code() == 1);
    CHECK(report.count(Status::fail) == 2);
    const std::string text = report.text();
    CHECK(text.find("FAIL  bad  [topic]  mismatch  witness: 1 2 2") != std::string::npos);
    CHECK(text.find("FAIL  throws  error: boom") != std::string::npos);
    CHECK(text.find("# 1 passed, 2 failed, 0 info") != std::string::npos);
}

TEST_CASE("export") {
    CHECK(cli({"export", "--table", "312-modasc", "--n", "3"}).out == "1 1\n2 2\n3 5\n");
    CHECK(cli({"--format", "csv", "export", "--table", "221-modasc", "--n", "5"}).out ==
          "n,count\n1,1\n2,2\n3,5\n4,14\n5,44\n");
    CHECK(cli({"--format", "json", "export", "--table", "312-modasc", "--n", "0"}).out ==
          "{\"label\": \"312-modasc\", \"offset\": 1, \"values\": []}\n");
    CHECK(cli({"--format", "json", "export", "--table", "D", "--n", "5"}).out ==
          "{\"label\": \"D\", \"offset\": 0, \"values\": [1, 1, 2, 4, 10, 26]}\n");
    CHECK(cli({"export", "--table", "2321-modasc", "--source", "formula", "--n", "30"}).out.find("30 846749014511809332450147") !=
          std::string::npos);

    const auto dir = std::filesystem::temp_directory_path() / "modasc_export_test";
    std::filesystem::create_directories(dir);
    const auto file = dir / "t.txt";
    CHECK(cli({"export", "--table", "21-prim", "--n", "3", "--out", file.string()}).code == 0);
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "1 1\n2 1\n3 1\n");
    std::filesystem::remove_all(dir);

    const Run bad = cli({"export", "--table", "21-prim", "--n", "3", "--out", "/nonexistent/dir/x.txt"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("No such file or directory") != std::string::npos);
    CHECK(cli({"export", "--table", "21-cay", "--n", "3"}).code == 2);
}

TEST_CASE("experiments report data only") {
    CHECK(cli({"experiment", "--list"}).out == "modasc122-vs-211\n211-vs-1223\nbinomial-chains\n");
    const Run r = cli({"experiment", "--check", "modasc122-vs-211", "--order", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("INFO") != std::string::npos);
    CHECK(r.out.find("clipped at word cap 10") != std::string::npos);
    CHECK(cli({"experiment", "--check", "211-vs-1223", "--order", "7"}).code == 0);
    CHECK(cli({"experiment", "--check", "nope"}).code == 2);
}

}  // TEST_SUITE
