#include "pursuit/errors.hpp"
#include "pursuit/harness.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace pursuit {

namespace {

bool occupied(std::span<const Vertex> cops, Vertex v) { return std::find(cops.begin(), cops.end(), v) != cops.end(); }

int default_cap(const Graph& g, int phase_cap) { return phase_cap > 0 ? phase_cap : g.n() * g.n(); }

CopMove checked_move(const Graph& g, const Strategy& s, std::span<const Vertex> cops, Vertex robber, const Latch& latch) {
    auto mv = s.next(cops, robber, latch);
    if (!legal_cop_move(g, cops, mv.cops))
        throw IllegalMoveError(std::string(to_string(s.provenance)) + " policy made an illegal cop move");
    return mv;
}

using PositionKey = std::tuple<std::vector<Vertex>, Vertex, Latch>;

} // namespace

Verdict verify_adversarial(const Graph& g, const Strategy& s, int phase_cap, const SolveOptions& options) {
    const int cap = default_cap(g, phase_cap);
    const auto res = solve(g, s.k, options);

    std::vector<Vertex> cops = s.placement;
    Vertex robber = 0;
    CaptureTime worst = 0;
    for (Vertex r = 0; r < g.n(); ++r) {
        const auto value = occupied(cops, r) ? 0 : res.label(cops, r);
        if (r == 0 || value > worst) {
            worst = value;
            robber = r;
        }
    }

    Latch latch;
    std::vector<Snapshot> rounds{{0, Mover::Placement, cops, robber, s.policy->branch_label(latch)}};
    if (occupied(cops, robber))
        return StrategyTrace{std::move(rounds), true, 0};

    std::map<PositionKey, std::size_t> seen;
    int phases = 0;
    while (true) {
        PositionKey key{cops, robber, latch};
        if (auto it = seen.find(key); it != seen.end())
            return EscapeWitness{std::move(rounds), it->second, "position repeated"};
        seen.emplace(std::move(key), rounds.size() - 1);
        if (phases >= cap)
            return EscapeWitness{std::move(rounds), std::nullopt, "phase cap " + std::to_string(cap) + " reached"};

        auto mv = checked_move(g, s, cops, robber, latch);
        cops = std::move(mv.cops);
        latch = mv.latch;
        ++phases;
        rounds.push_back({phases, Mover::Cops, cops, robber, s.policy->branch_label(latch)});
        if (occupied(cops, robber))
            return StrategyTrace{std::move(rounds), true, phases};

        robber = best_robber_response(res, GameState::robber_to_move(cops, robber));
        rounds.push_back({phases, Mover::Robber, cops, robber, s.policy->branch_label(latch)});
        if (occupied(cops, robber))
            return StrategyTrace{std::move(rounds), true, phases};
    }
}

namespace {

struct EscapeFound {
    std::size_t cycle_start;
};

// Longest capture over all robber behaviours, by depth-first search over
// cop-to-move positions. A position met again on the current path is a cycle.
class Explorer {
public:
    Explorer(const Graph& g, const Strategy& s) : g_(g), s_(s) {}

    // Phases until capture from a cop-to-move position with the robber free.
    int worst(const std::vector<Vertex>& cops, Vertex robber, const Latch& latch) {
        PositionKey key{cops, robber, latch};
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        for (std::size_t i = 0; i < path_.size(); ++i)
            if (path_[i] == key)
                throw EscapeFound{i};
        path_.push_back(key);

        auto mv = checked_move(g_, s_, cops, robber, latch);
        int value = 1;
        if (!occupied(mv.cops, robber)) {
            int longest = 0;
            for (auto w : g_.closed_neighbors(robber))
                if (!occupied(mv.cops, w))
                    longest = std::max(longest, worst(mv.cops, w, mv.latch));
            value = 1 + longest;
        }
        path_.pop_back();
        memo_.emplace(std::move(key), value);
        return value;
    }

    const std::vector<PositionKey>& path() const { return path_; }

private:
    const Graph& g_;
    const Strategy& s_;
    std::map<PositionKey, int> memo_;
    std::vector<PositionKey> path_;
};

} // namespace

Verdict verify_exhaustive(const Graph& g, const Strategy& s, int phase_cap) {
    const int cap = default_cap(g, phase_cap);
    Explorer explorer(g, s);
    const auto& start = s.placement;
    const Latch fresh;

    int worst = -1;
    Vertex robber = 0;
    for (Vertex r = 0; r < g.n(); ++r) {
        int value = 0;
        if (!occupied(start, r)) {
            try {
                value = explorer.worst(start, r, fresh);
            } catch (const EscapeFound& escape) {
                EscapeWitness w;
                const auto& path = explorer.path();
                for (std::size_t i = 0; i < path.size(); ++i) {
                    const auto& [cops, at, latch] = path[i];
                    w.rounds.push_back({static_cast<int>(i), i == 0 ? Mover::Placement : Mover::Robber, cops, at,
                                        s.policy->branch_label(latch)});
                }
                w.cycle_start = escape.cycle_start;
                w.reason = "position repeated";
                return w;
            }
        }
        if (value > worst) {
            worst = value;
            robber = r;
        }
    }

    // Replay the longest line, robber taking the first maximising reply.
    std::vector<Vertex> cops = start;
    Latch latch;
    std::vector<Snapshot> rounds{{0, Mover::Placement, cops, robber, s.policy->branch_label(latch)}};
    int phases = 0;
    while (!occupied(cops, robber)) {
        if (phases >= cap)
            return EscapeWitness{std::move(rounds), std::nullopt, "phase cap " + std::to_string(cap) + " reached"};
        auto mv = checked_move(g, s, cops, robber, latch);
        cops = std::move(mv.cops);
        latch = mv.latch;
        ++phases;
        rounds.push_back({phases, Mover::Cops, cops, robber, s.policy->branch_label(latch)});
        if (occupied(cops, robber))
            break;
        int best = -1;
        Vertex reply = robber;
        for (auto w : g.closed_neighbors(robber)) {
            const int value = occupied(cops, w) ? 0 : explorer.worst(cops, w, latch);
            if (value > best) {
                best = value;
                reply = w;
            }
        }
        robber = reply;
        rounds.push_back({phases, Mover::Robber, cops, robber, s.policy->branch_label(latch)});
    }
    return StrategyTrace{std::move(rounds), true, phases};
}

nlohmann::ordered_json to_json(const Snapshot& snap) {
    nlohmann::ordered_json j;
    j["phase"] = snap.phase;
    j["mover"] = snap.mover == Mover::Placement ? "placement" : snap.mover == Mover::Cops ? "cops" : "robber";
    j["cops"] = snap.cops;
    j["robber"] = snap.robber;
    j["branch"] = snap.branch;
    return j;
}

std::string trace_to_json_lines(const std::vector<Snapshot>& rounds) {
    std::ostringstream out;
    for (const auto& snap : rounds)
        out << to_json(snap).dump() << '\n';
    return out.str();
}

} // namespace pursuit
