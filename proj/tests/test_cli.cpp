#include "pursuit/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "pursuit");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = pursuit::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("cop-number prints one integer per graph") {
    auto r = run_cli({"cop-number"}, "Dhc\nCh\n");
    CHECK(r.code == 0);
    CHECK(r.out == "2\n1\n");
    auto header = run_cli({"cop-number"}, ">>graph6<<Dhc\r\n");
    CHECK(header.out == "2\n");
}

TEST_CASE("cop-number reports bound failures") {
    auto r = run_cli({"cop-number", "--k-max", "2"}, "IheA@GUAo\n");
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("check emits class flags") {
    auto r = run_cli({"check"}, "Dhc\nDhc?\n");
    CHECK(r.code == 3);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);
    const auto j = nlohmann::json::parse(lines[0]);
    CHECK(j["two_k2_free"] == true);
    CHECK(j["c5_free"] == false);
    CHECK(j["diameter"] == 2);
    CHECK(r.err.find("line 2") != std::string::npos);

    // P5.
    auto p5 = run_cli({"check"}, "DhC\n");
    CHECK(nlohmann::json::parse(lines_of(p5.out)[0])["two_k2_free"] == false);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"cop-number", "--bogus"}).code == 2);
    CHECK(run_cli({"cop-number", "--k-max", "0"}).code == 2);
    CHECK(run_cli({"gen", "--n-max", "5", "--random"}).code == 2);
    CHECK(run_cli({"sweep"}).code == 2);
    CHECK(run_cli({"sweep", "--n-max", "5", "--mode", "nope"}).code == 2);
}

TEST_CASE("help lists the flags") {
    auto r = run_cli({"sweep", "--help"});
    CHECK(r.code == 0);
    const auto text = r.out + r.err;
    for (const char* flag : {"--mode", "--n-max", "--jobs", "--phase-cap", "--output"})
        CHECK(text.find(flag) != std::string::npos);
}

TEST_CASE("missing input file is an I/O error") {
    CHECK(run_cli({"check", "--input", "/nonexistent/graphs.g6"}).code == 3);
}

TEST_CASE("sweep over the enumeration") {
    auto r = run_cli({"sweep", "--mode", "conj1", "--n-max", "6"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE_FALSE(lines.empty());
    const auto summary = nlohmann::json::parse(lines.back());
    REQUIRE(summary.contains("summary"));
    CHECK(summary["summary"]["violations"].empty());
    CHECK(summary["summary"]["max_cop_number"] == 2);
    CHECK(lines.size() == 1 + summary["summary"]["in_class"].get<std::size_t>());
}

TEST_CASE("gen") {
    auto all = run_cli({"gen", "--n-max", "4"});
    CHECK(all.code == 0);
    CHECK(lines_of(all.out).size() == 1 + 1 + 2 + 6);
    auto a = run_cli({"gen", "--n-max", "12", "--random", "--seed", "5", "--count", "3"});
    auto b = run_cli({"gen", "--n-max", "12", "--random", "--seed", "5", "--count", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(lines_of(a.out).size() == 3);
}

TEST_CASE("verify prints a head line and a trace") {
    auto r = run_cli({"verify"}, "Ch\n");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 2);
    const auto head = nlohmann::json::parse(lines[0]);
    CHECK(head["provenance"] == "THM1_DIAM3");
    CHECK(head["optimal_robber"]["captured"] == true);
    CHECK(head["all_robbers"]["captured"] == true);
}
