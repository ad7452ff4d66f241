#include "oracles.hpp"

#include "pursuit/algorithms.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/graph6.hpp"
#include "pursuit/harness.hpp"
#include "pursuit/patterns.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace pursuit;

TEST_CASE("enumeration counts match brute-force classification") {
    for (int n = 1; n <= 6; ++n)
        CHECK(enumerate_connected(n).size() == oracle::brute_connected_classes(n));
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(5).size() == 21);
    CHECK(enumerate_connected(7).size() == 853);
    CHECK_THROWS_AS(enumerate_connected(0), ArgumentError);
    CHECK_THROWS_AS(enumerate_connected(9), ArgumentError);
}

TEST_CASE("enumerated graphs are connected, canonical and pairwise non-isomorphic") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> seen;
        for (const auto& g : enumerate_connected(n)) {
            CHECK(oracle::connected(g));
            CHECK(canonical_form(g) == g);
            const auto code = oracle::brute_canonical(oracle::matrix_of(g));
            CHECK(seen.insert(code).second);
        }
    }
}

TEST_CASE("canonical code is a complete invariant on small graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 7;
        std::vector<std::pair<Vertex, Vertex>> e;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                if (rng() % 2)
                    e.emplace_back(i, j);
        const auto g = Graph::from_edges(n, e);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h = g.relabel(perm);
        CHECK(canonical_code(g) == canonical_code(h));
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("random 2K2-free graphs") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto g = random_2k2free(20, seed);
        REQUIRE(g.n() == 20);
        REQUIRE(is_connected(g));
        REQUIRE_FALSE(has_induced_mk2(g, 2));
    }
    CHECK(random_2k2free(15, 42) == random_2k2free(15, 42));
    CHECK_FALSE(random_2k2free(15, 42) == random_2k2free(15, 43));
    for (std::uint64_t seed = 0; seed < 30; ++seed)
        CHECK_FALSE(oracle::has_induced(random_2k2free(8, seed), oracle::disjoint_edges(2)));
}

TEST_CASE("verification traces") {
    const auto g = path_graph(4);
    const auto s = select_strategy(g);
    auto v = verify_adversarial(g, s);
    REQUIRE(std::holds_alternative<StrategyTrace>(v));
    const auto& trace = std::get<StrategyTrace>(v);
    CHECK(trace.captured);
    CHECK(trace.rounds.front().mover == Mover::Placement);
    CHECK(trace.rounds.front().cops == s.placement);
    const auto lines = trace_to_json_lines(trace.rounds);
    CHECK(std::count(lines.begin(), lines.end(), '\n') == static_cast<long>(trace.rounds.size()));
    const auto first = nlohmann::json::parse(lines.substr(0, lines.find('\n')));
    CHECK(first["mover"] == "placement");
    CHECK(first.contains("branch"));
}

TEST_CASE("conj1 sweep over C5") {
    auto r = sweep_conjecture({"Dhc"}, SweepMode::Conj1TwoK2);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].cop_number == 2);
    CHECK(r.records[0].bound_satisfied);
    CHECK(r.violations().empty());
    CHECK(r.max_cop_number() == 2);
}

TEST_CASE("sweeps skip graphs outside the class and report bad lines") {
    // P5 contains 2K2; Petersen contains 2K2.
    auto r = sweep_conjecture({write_graph6(path_graph(5)), "Dhc", "not graph6", write_graph6(oracle::disjoint_edges(2)),
                               write_graph6(petersen_graph())},
                              SweepMode::Conj1TwoK2);
    CHECK(r.graphs_read == 5);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].line == 2);
    REQUIRE(r.input_errors.size() == 2);
    CHECK(r.input_errors[0].line == 3);
    CHECK(r.input_errors[1].line == 4);
}

TEST_CASE("a graph the sweep cannot settle is reported, not thrown") {
    SweepOptions o;
    o.solve.state_budget = 10;
    auto r = sweep({"Dhc"}, o);
    REQUIRE(r.records.size() == 1);
    CHECK_FALSE(r.records[0].cop_number);
    REQUIRE(r.violations().size() == 1);
    const auto summary = summary_json(r);
    CHECK(summary["violations"].size() == 1);
    CHECK(summary["cop_number_unresolved"] == 1);
}

TEST_CASE("sweeps are deterministic and independent of the thread count") {
    const auto lines = enumerated_graph6(1, 6);
    SweepOptions one;
    SweepOptions four;
    four.jobs = 4;
    const auto a = sweep(lines, one);
    const auto b = sweep(lines, four);
    CHECK(summary_json(a).dump() == summary_json(b).dump());
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i)
        CHECK(to_json(a.records[i]).dump() == to_json(b.records[i]).dump());
    CHECK(summary_json(a).dump() == summary_json(sweep(lines, one)).dump());
    CHECK(a.violations().empty());
}

TEST_CASE("mK2 sweep: trees have cop number one") {
    auto lines = enumerated_graph6(1, 7);
    auto r = sweep_mk2(lines, 3);
    for (const auto& rec : r.records) {
        const auto g = parse_graph6(rec.graph6);
        if (g.edge_count() == g.n() - 1)
            CHECK(rec.cop_number == 1);
        CHECK(rec.mk2_free_level <= 3);
    }
    CHECK(r.violations().empty());
    CHECK_THROWS_AS(sweep_mk2(lines, 1), ArgumentError);
}

TEST_CASE("summary fields") {
    auto r = sweep_conjecture(enumerated_graph6(1, 5), SweepMode::Conj1TwoK2);
    const auto j = summary_json(r);
    for (const char* key : {"mode", "graphs_read", "in_class", "class_counts", "by_order", "by_diameter",
                            "cop_number_histogram", "max_cop_number", "provenance_counts", "max_capture_phases",
                            "violations", "input_errors"})
        CHECK(j.contains(key));
    CHECK(j["mode"] == "conj1");
    CHECK(j["graphs_read"] == 1 + 1 + 2 + 6 + 21);
}
