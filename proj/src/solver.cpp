#include "pursuit/solver.hpp"

#include "pursuit/algorithms.hpp"
#include "pursuit/errors.hpp"

#include <algorithm>
#include <string>

namespace pursuit {

// Sorted cop tuples are numbered in lexicographic order; `index` maps the
// mixed-radix code of a sorted tuple to its number.
struct SolveTables {
    Graph g;
    int k = 0;
    int n = 0;
    std::size_t configs = 0;
    std::vector<Vertex> tuples;            // configs * k
    std::vector<std::int32_t> index;       // n^k, -1 for unsorted codes
    std::vector<std::uint32_t> succ_begin; // configs + 1
    std::vector<std::int32_t> succ;        // successor config numbers, ascending
    std::vector<CaptureTime> cop_label;    // configs * n
    std::vector<CaptureTime> robber_label; // configs * n
    std::vector<std::uint64_t> occupied;   // configs, bit r set if a cop is on r (n <= 64)
    std::vector<VertexSet> occupied_set;   // used when n > 64
    std::optional<std::vector<Vertex>> best_initial;
    CaptureTime value = kRobberEscapes;

    std::span<const Vertex> tuple(std::size_t c) const { return {tuples.data() + c * k, static_cast<std::size_t>(k)}; }

    bool holds(std::size_t c, Vertex r) const {
        if (n <= 64)
            return ((occupied[c] >> r) & 1U) != 0;
        return occupied_set[c].contains(r);
    }

    std::size_t code(std::span<const Vertex> sorted) const {
        std::size_t key = 0;
        for (int i = k - 1; i >= 0; --i)
            key = key * n + static_cast<std::size_t>(sorted[i]);
        return key;
    }

    std::size_t config_of(std::span<const Vertex> cops) const {
        if (static_cast<int>(cops.size()) != k)
            throw ArgumentError("expected " + std::to_string(k) + " cops, got " + std::to_string(cops.size()));
        std::vector<Vertex> sorted(cops.begin(), cops.end());
        for (auto v : sorted)
            if (v < 0 || v >= n)
                throw IndexError("cop vertex " + std::to_string(v) + " out of range");
        std::sort(sorted.begin(), sorted.end());
        return static_cast<std::size_t>(index[code(sorted)]);
    }

    std::span<const std::int32_t> successors(std::size_t c) const {
        return {succ.data() + succ_begin[c], succ.data() + succ_begin[c + 1]};
    }
};

namespace {

std::uint64_t raw_state_count(int n, int k, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i <= k; ++i) {
        if (total > cap / static_cast<std::uint64_t>(n))
            return cap + 1;
        total *= static_cast<std::uint64_t>(n);
    }
    return total;
}

void enumerate_tuples(SolveTables& t) {
    std::vector<Vertex> cur(t.k, 0);
    std::size_t radix = 1;
    for (int i = 0; i < t.k; ++i)
        radix *= static_cast<std::size_t>(t.n);
    t.index.assign(radix, -1);
    while (true) {
        t.index[t.code(cur)] = static_cast<std::int32_t>(t.configs++);
        t.tuples.insert(t.tuples.end(), cur.begin(), cur.end());
        int i = t.k - 1;
        while (i >= 0 && cur[i] == t.n - 1)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < t.k; ++j)
            cur[j] = cur[i];
    }
}

void build_successors(SolveTables& t) {
    std::vector<std::vector<Vertex>> options(t.k);
    std::vector<std::size_t> pick(t.k);
    std::vector<Vertex> moved(t.k);
    std::vector<std::int32_t> found;
    t.succ_begin.assign(1, 0);
    for (std::size_t c = 0; c < t.configs; ++c) {
        auto cops = t.tuple(c);
        for (int i = 0; i < t.k; ++i)
            options[i] = t.g.closed_neighbors(cops[i]).to_vector();
        found.clear();
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            for (int i = 0; i < t.k; ++i)
                moved[i] = options[i][pick[i]];
            std::sort(moved.begin(), moved.end());
            found.push_back(t.index[t.code(moved)]);
            int i = t.k - 1;
            while (i >= 0 && ++pick[i] == options[i].size())
                pick[i--] = 0;
            if (i < 0)
                break;
        }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        t.succ.insert(t.succ.end(), found.begin(), found.end());
        t.succ_begin.push_back(static_cast<std::uint32_t>(t.succ.size()));
    }
}

// Retrograde analysis in increasing order of capture time. A robber-to-move
// state is settled when its last non-capturing reply gets a label; a
// cop-to-move state is settled by the first successor that gets settled.
void label_states(SolveTables& t) {
    const std::size_t n = static_cast<std::size_t>(t.n);
    const std::size_t states = t.configs * n;
    t.cop_label.assign(states, kRobberEscapes);
    t.robber_label.assign(states, kRobberEscapes);
    std::vector<std::uint32_t> pending(states, 0);

    for (std::size_t c = 0; c < t.configs; ++c) {
        for (Vertex r = 0; r < t.n; ++r) {
            const std::size_t s = c * n + r;
            if (t.holds(c, r)) {
                t.cop_label[s] = 0;
                t.robber_label[s] = 0;
                continue;
            }
            std::uint32_t free_moves = 0;
            for (auto w : t.g.closed_neighbors(r))
                if (!t.holds(c, w))
                    ++free_moves;
            pending[s] = free_moves;
        }
    }

    std::vector<std::size_t> level;
    for (std::size_t after = 0; after < t.configs; ++after) {
        for (auto r : t.tuple(after)) {
            for (auto before : t.successors(after)) {
                const std::size_t s = static_cast<std::size_t>(before) * n + r;
                if (t.cop_label[s] == kRobberEscapes) {
                    t.cop_label[s] = 1;
                    level.push_back(s);
                }
            }
        }
    }

    std::vector<std::size_t> next;
    for (CaptureTime time = 1; !level.empty(); ++time) {
        next.clear();
        for (auto s : level) {
            const std::size_t c = s / n;
            const auto landed = static_cast<Vertex>(s % n);
            for (auto from : t.g.closed_neighbors(landed)) {
                const std::size_t rs = c * n + from;
                if (t.holds(c, from) || pending[rs] == 0)
                    continue;
                if (--pending[rs] != 0)
                    continue;
                t.robber_label[rs] = time;
                for (auto before : t.successors(c)) {
                    const std::size_t cs = static_cast<std::size_t>(before) * n + from;
                    if (t.cop_label[cs] == kRobberEscapes) {
                        t.cop_label[cs] = time + 1;
                        next.push_back(cs);
                    }
                }
            }
        }
        level.swap(next);
    }
}

void choose_placement(SolveTables& t) {
    for (std::size_t c = 0; c < t.configs; ++c) {
        CaptureTime worst = 0;
        for (Vertex r = 0; r < t.n; ++r)
            worst = std::max(worst, t.cop_label[c * t.n + r]);
        if (worst < t.value) {
            t.value = worst;
            auto cops = t.tuple(c);
            t.best_initial = std::vector<Vertex>(cops.begin(), cops.end());
        }
    }
}

} // namespace

GameState GameState::cop_to_move(std::vector<Vertex> cops, Vertex robber) {
    std::sort(cops.begin(), cops.end());
    return {std::move(cops), robber, Turn::CopMove};
}

GameState GameState::robber_to_move(std::vector<Vertex> cops, Vertex robber) {
    std::sort(cops.begin(), cops.end());
    return {std::move(cops), robber, Turn::RobberMove};
}

int SolveResult::k() const { return tables_->k; }
const Graph& SolveResult::graph() const { return tables_->g; }
bool SolveResult::cop_win() const { return tables_->value != kRobberEscapes; }
const std::optional<std::vector<Vertex>>& SolveResult::best_initial() const { return tables_->best_initial; }
CaptureTime SolveResult::value() const { return tables_->value; }
std::uint64_t SolveResult::state_count() const { return tables_->configs * static_cast<std::uint64_t>(tables_->n); }

CaptureTime SolveResult::label(std::span<const Vertex> cops, Vertex robber) const {
    const auto& t = *tables_;
    const auto c = t.config_of(cops);
    if (robber < 0 || robber >= t.n)
        throw IndexError("robber vertex " + std::to_string(robber) + " out of range");
    return t.cop_label[c * t.n + robber];
}

CaptureTime SolveResult::robber_label(std::span<const Vertex> cops, Vertex robber) const {
    const auto& t = *tables_;
    const auto c = t.config_of(cops);
    if (robber < 0 || robber >= t.n)
        throw IndexError("robber vertex " + std::to_string(robber) + " out of range");
    return t.robber_label[c * t.n + robber];
}

CaptureTime SolveResult::placement_value(std::span<const Vertex> placement) const {
    const auto& t = *tables_;
    const auto c = t.config_of(placement);
    CaptureTime worst = 0;
    for (Vertex r = 0; r < t.n; ++r)
        worst = std::max(worst, t.cop_label[c * t.n + r]);
    return worst;
}

std::vector<std::vector<Vertex>> SolveResult::cop_successors(std::span<const Vertex> cops) const {
    const auto& t = *tables_;
    std::vector<std::vector<Vertex>> out;
    for (auto c : t.successors(t.config_of(cops))) {
        auto tuple = t.tuple(static_cast<std::size_t>(c));
        out.emplace_back(tuple.begin(), tuple.end());
    }
    return out;
}

SolveResult solve(const Graph& g, int k, const SolveOptions& options) {
    if (k < 1)
        throw ArgumentError("cop count must be positive, got " + std::to_string(k));
    if (g.n() < 1)
        throw ArgumentError("graph must have at least one vertex");
    if (!is_connected(g))
        throw DisconnectedError("the game is defined on connected graphs");
    const auto raw = raw_state_count(g.n(), k, options.state_budget);
    if (raw > options.state_budget)
        throw ResourceError("state space exceeds budget of " + std::to_string(options.state_budget), raw);

    auto t = std::make_shared<SolveTables>();
    t->g = g;
    t->k = k;
    t->n = g.n();
    enumerate_tuples(*t);
    if (t->n <= 64) {
        t->occupied.resize(t->configs);
        for (std::size_t c = 0; c < t->configs; ++c)
            for (auto v : t->tuple(c))
                t->occupied[c] |= std::uint64_t{1} << v;
    } else {
        t->occupied_set.assign(t->configs, VertexSet(t->n));
        for (std::size_t c = 0; c < t->configs; ++c)
            for (auto v : t->tuple(c))
                t->occupied_set[c].insert(v);
    }
    build_successors(*t);
    label_states(*t);
    choose_placement(*t);

    SolveResult res;
    res.tables_ = std::move(t);
    return res;
}

int cop_number(const Graph& g, int k_max, const SolveOptions& options) {
    if (k_max < 1)
        throw ArgumentError("k_max must be positive");
    for (int k = 1; k <= k_max; ++k)
        if (solve(g, k, options).cop_win())
            return k;
    throw BoundExceededError("no cop count up to " + std::to_string(k_max) + " wins");
}

std::vector<Vertex> optimal_cop_move(const SolveResult& res, const GameState& s) {
    if (s.turn != Turn::CopMove)
        throw ArgumentError("optimal_cop_move needs a cop-to-move state");
    const auto target = res.label(s.cops, s.robber);
    if (target == kRobberEscapes)
        throw NoWinningMoveError("the robber escapes from this state");
    std::vector<Vertex> sorted = s.cops;
    std::sort(sorted.begin(), sorted.end());
    if (target == 0)
        return sorted;
    for (auto& next : res.cop_successors(sorted)) {
        CaptureTime value = 1;
        if (std::find(next.begin(), next.end(), s.robber) == next.end()) {
            const auto rest = res.robber_label(next, s.robber);
            value = rest == kRobberEscapes ? kRobberEscapes : 1 + rest;
        }
        if (value == target)
            return next;
    }
    throw NoWinningMoveError("label table is inconsistent");
}

Vertex best_robber_response(const SolveResult& res, const GameState& s) {
    if (s.turn != Turn::RobberMove)
        throw ArgumentError("best_robber_response needs a robber-to-move state");
    const auto& g = res.graph();
    if (s.robber < 0 || s.robber >= g.n())
        throw IndexError("robber vertex " + std::to_string(s.robber) + " out of range");
    if (std::find(s.cops.begin(), s.cops.end(), s.robber) != s.cops.end())
        return s.robber;
    Vertex best = -1;
    CaptureTime best_value = 0;
    for (auto w : g.closed_neighbors(s.robber)) {
        CaptureTime value = 0;
        if (std::find(s.cops.begin(), s.cops.end(), w) == s.cops.end())
            value = res.label(s.cops, w);
        if (best < 0 || value > best_value) {
            best = w;
            best_value = value;
        }
    }
    return best;
}

} // namespace pursuit
