#include "oracles.hpp"

#include "pursuit/algorithms.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/harness.hpp"
#include "pursuit/patterns.hpp"
#include "pursuit/solver.hpp"

#include <doctest.h>

#include <random>

using namespace pursuit;

namespace {

Graph random_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 1; v < n; ++v)
        e.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
    return Graph::from_edges(n, e);
}

// Chordal graphs by perfect elimination: each new vertex joins a clique of the current graph.
Graph random_chordal(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> e;
    std::vector<VertexSet> nb(n, VertexSet(n));
    for (Vertex v = 1; v < n; ++v) {
        Vertex anchor = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
        VertexSet clique(n, {anchor});
        for (Vertex w = 0; w < v; ++w)
            if (w != anchor && clique.is_subset_of(nb[w]) && std::bernoulli_distribution(0.6)(rng))
                clique.insert(w);
        for (auto w : clique) {
            e.emplace_back(w, v);
            nb[w].insert(v);
            nb[v].insert(w);
        }
    }
    return Graph::from_edges(n, e);
}

} // namespace

TEST_CASE("K2 with one cop") {
    auto res = solve(complete_graph(2), 1);
    CHECK(res.cop_win());
    CHECK(res.value() == 1);
    CHECK(res.best_initial() == std::vector<Vertex>{0});
    CHECK(res.label(std::vector<Vertex>{0}, 1) == 1);
    CHECK(res.label(std::vector<Vertex>{0}, 0) == 0);
}

TEST_CASE("C4 is robber-win for one cop") {
    auto res = solve(cycle_graph(4), 1);
    CHECK_FALSE(res.cop_win());
    CHECK(res.state_count() == 16);
    // Robber opposite the cop escapes forever; every other position is a capture in one phase.
    for (Vertex c = 0; c < 4; ++c)
        for (Vertex r = 0; r < 4; ++r) {
            const std::vector<Vertex> cop{c};
            const auto expected = r == c ? 0U : (r - c + 4) % 4 == 2 ? kRobberEscapes : 1U;
            CHECK(res.label(cop, r) == expected);
        }
}

TEST_CASE("C5 needs two cops") {
    CHECK_FALSE(solve(cycle_graph(5), 1).cop_win());
    auto two = solve(cycle_graph(5), 2);
    CHECK(two.cop_win());
    CHECK(cop_number(cycle_graph(5)) == 2);
}

TEST_CASE("trees are cop-win") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto t = random_tree(2 + static_cast<int>(seed % 11), seed);
        CHECK(cop_number(t) == 1);
        CHECK(is_dismantlable(t));
    }
}

TEST_CASE("Petersen graph has cop number 3") {
    const auto p = petersen_graph();
    CHECK(cop_number(p) == 3);
    CHECK(oracle::cop_number(p, 3) == 3);
    CHECK(solve(p, 3).value() == static_cast<CaptureTime>(oracle::Minimax(p, 3).solve()));
    CHECK_THROWS_AS(cop_number(p, 2), BoundExceededError);
}

TEST_CASE("solver errors") {
    CHECK_THROWS_AS(solve(complete_graph(3), 0), ArgumentError);
    CHECK_THROWS_AS(solve(oracle::disjoint_edges(2), 1), DisconnectedError);
    SolveOptions tight;
    tight.state_budget = 100;
    try {
        solve(cycle_graph(5), 2, tight);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(e.states() > 100);
    }
}

TEST_CASE("optimal cop move") {
    auto k2 = solve(complete_graph(2), 1);
    CHECK(optimal_cop_move(k2, GameState::cop_to_move({0}, 1)) == std::vector<Vertex>{1});
    CHECK(optimal_cop_move(k2, GameState::cop_to_move({1}, 1)) == std::vector<Vertex>{1});

    auto c4 = solve(cycle_graph(4), 1);
    CHECK_THROWS_AS(optimal_cop_move(c4, GameState::cop_to_move({0}, 2)), NoWinningMoveError);

    // P3 a-b-c, cop at an end: extracted play wins within 2 phases whatever the robber does.
    auto p3 = solve(path_graph(3), 1);
    for (Vertex r = 1; r < 3; ++r) {
        auto state = GameState::cop_to_move({0}, r);
        auto cops = optimal_cop_move(p3, state);
        CHECK(cops == std::vector<Vertex>{1});
        if (cops[0] == r)
            continue;
        for (auto reply : path_graph(3).closed_neighbors(r)) {
            if (reply == cops[0])
                continue;
            auto second = optimal_cop_move(p3, GameState::cop_to_move(cops, reply));
            CHECK(second[0] == reply);
        }
    }
}

TEST_CASE("best robber response") {
    auto c4 = solve(cycle_graph(4), 1);
    // Cop moved to 1, robber at 2: stepping to 3 is the only move keeping the escape label.
    auto reply = best_robber_response(c4, GameState::robber_to_move({1}, 2));
    CHECK(reply == 3);
    CHECK(c4.label(std::vector<Vertex>{1}, reply) == kRobberEscapes);

    // K3 with two cops on 0, 1: stepping onto a cop ends the game, staying lasts one more phase.
    auto k3 = solve(complete_graph(3), 2);
    CHECK(best_robber_response(k3, GameState::robber_to_move({0, 1}, 2)) == 2);
    // K4 with one cop on 0: all three free vertices last one phase, smallest index wins the tie.
    auto k4 = solve(complete_graph(4), 1);
    CHECK(best_robber_response(k4, GameState::robber_to_move({0}, 3)) == 1);
}

TEST_CASE("dismantlability") {
    CHECK_FALSE(is_dismantlable(cycle_graph(4)));
    CHECK_FALSE(is_dismantlable(cycle_graph(5)));
    CHECK(is_dismantlable(complete_graph(1)));
    CHECK(is_dismantlable(complete_graph(6)));
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        CHECK(is_dismantlable(random_chordal(2 + static_cast<int>(seed % 6), seed)));
}

TEST_CASE("one-cop win matches dismantlability on every connected graph up to 7 vertices") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_connected(n))
            REQUIRE(solve(g, 1).cop_win() == is_dismantlable(g));
}

TEST_CASE("monotonicity in the number of cops") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_connected(n)) {
            auto one = solve(g, 1).cop_win();
            auto two = solve(g, 2).cop_win();
            auto three = solve(g, 3).cop_win();
            REQUIRE((!one || two));
            REQUIRE((!two || three));
        }
}

TEST_CASE("labels are a fixpoint of the recurrence") {
    for (const auto& g : {cycle_graph(5), petersen_graph(), path_graph(5), complete_graph(4)}) {
        auto res = solve(g, 2);
        for (Vertex a = 0; a < g.n(); ++a)
            for (Vertex b = a; b < g.n(); ++b)
                for (Vertex r = 0; r < g.n(); ++r) {
                    const std::vector<Vertex> cops{a, b};
                    const auto label = res.label(cops, r);
                    if (r == a || r == b) {
                        REQUIRE(label == 0);
                        continue;
                    }
                    CaptureTime best = kRobberEscapes;
                    for (const auto& next : res.cop_successors(cops)) {
                        CaptureTime value = 1;
                        if (next[0] != r && next[1] != r) {
                            CaptureTime worst = 0;
                            for (auto w : g.closed_neighbors(r))
                                if (w != next[0] && w != next[1])
                                    worst = std::max(worst, res.label(next, w));
                            value = worst == kRobberEscapes ? kRobberEscapes : 1 + worst;
                        }
                        best = std::min(best, value);
                    }
                    REQUIRE(label == best);
                    // Permuted cops read the same entry.
                    REQUIRE(res.label(std::vector<Vertex>{b, a}, r) == label);
                }
    }
}

TEST_CASE("self-play from the best placement takes exactly the root label") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_connected(n)) {
            const int k = cop_number(g, 3);
            auto res = solve(g, k);
            auto cops = *res.best_initial();
            Vertex robber = 0;
            for (Vertex r = 0; r < g.n(); ++r)
                if (res.label(cops, r) > res.label(cops, robber))
                    robber = r;
            int phases = 0;
            while (std::find(cops.begin(), cops.end(), robber) == cops.end()) {
                cops = optimal_cop_move(res, GameState::cop_to_move(cops, robber));
                ++phases;
                if (std::find(cops.begin(), cops.end(), robber) != cops.end())
                    break;
                robber = best_robber_response(res, GameState::robber_to_move(cops, robber));
                REQUIRE(phases <= g.n() * g.n());
            }
            REQUIRE(static_cast<CaptureTime>(phases) == res.value());
        }
}

TEST_CASE("cop number agrees with the independent minimax search on every connected graph up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_connected(n)) {
            const int c = cop_number(g, 3);
            REQUIRE(c == oracle::cop_number(g, 3));
            REQUIRE(solve(g, c).value() == static_cast<CaptureTime>(oracle::Minimax(g, c).solve()));
        }
}
