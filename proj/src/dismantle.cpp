#include "pursuit/solver.hpp"

namespace pursuit {

bool is_dismantlable(const Graph& g) {
    auto alive = g.vertices();
    auto closed = [&](Vertex v) { return g.closed_neighbors(v) & alive; };
    while (alive.size() > 1) {
        Vertex corner = -1;
        for (auto u : alive) {
            const auto mine = closed(u);
            for (auto v : g.neighbors(u) & alive) {
                if (mine.is_subset_of(closed(v))) {
                    corner = u;
                    break;
                }
            }
            if (corner >= 0)
                break;
        }
        if (corner < 0)
            return false;
        alive.erase(corner);
    }
    return true;
}

} // namespace pursuit
