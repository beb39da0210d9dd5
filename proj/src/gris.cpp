#include "ris/gris.hpp"

#include <algorithm>

namespace ris {

GreedyResult gris(const Degree2Graph& g, const std::vector<int>& ordering, const Collection& f) {
    if (static_cast<int>(ordering.size()) != g.vertex_count())
        throw InvalidOrderingError("ordering has " + std::to_string(ordering.size()) +
                                   " entries for a graph on " +
                                   std::to_string(g.vertex_count()) + " vertices");
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : ordering) {
        if (v < 0 || v >= g.vertex_count() || seen[v])
            throw InvalidOrderingError("ordering is not a permutation of the vertex set");
        seen[v] = 1;
    }
    check_collection(g, f);

    GreedyResult res;
    std::vector<char> used(f.size(), 0);
    VertexSet r, blocked;
    for (int v : ordering) {
        TraceStep step;
        step.vertex = v;
        int color = -1;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (!used[i] && f[i].contains(v)) {
                color = static_cast<int>(i);
                break;
            }
        if (color < 0) {
            step.reason = SkipReason::no_unused_color;
        } else if (blocked.contains(v)) {
            step.reason = SkipReason::not_independent;
        } else {
            step.added = true;
            step.color = color;
            used[color] = 1;
            r.add(v);
            blocked |= g.closed_neighbors(v);
            res.rainbow.pairs.emplace_back(v, color);
        }
        res.trace.push_back(step);
    }
    std::sort(res.rainbow.pairs.begin(), res.rainbow.pairs.end());
    for (auto [v, c] : res.rainbow.pairs) res.greedy_colors.push_back(c);
    std::sort(res.greedy_colors.begin(), res.greedy_colors.end());
    return res;
}

PathGreedyReport rainbow_path(int t, int n, const Collection& f) {
    if (t < 2 * n - 1)
        throw PreconditionError("path too short: need t >= 2n-1, got t=" + std::to_string(t) +
                                ", n=" + std::to_string(n));
    if (static_cast<int>(f.size()) < n - 1)
        throw PreconditionError("need at least n-1 sets, got " + std::to_string(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].size() < n - 1)
            throw PreconditionError("set " + std::to_string(i + 1) + " has fewer than n-1 vertices");

    Degree2Graph g = Degree2Graph::path(t);
    std::vector<int> order(t);
    for (int i = 0; i < t; ++i) order[i] = i;

    PathGreedyReport rep;
    rep.greedy = gris(g, order, f);
    rep.target = n;
    int sz = rep.greedy.rainbow.vertices().size();
    rep.full = sz >= n;
    if (rep.full) {
        rep.dichotomy = true; // nothing to check
        return rep;
    }
    rep.dichotomy = sz == n - 1;
    if (rep.dichotomy) {
        std::vector<char> used(f.size(), 0);
        for (int c : rep.greedy.greedy_colors) used[c] = 1;
        VertexSet r = rep.greedy.rainbow.vertices();
        for (std::size_t i = 0; i < f.size() && rep.dichotomy; ++i) {
            if (used[i]) continue;
            if (f[i].size() != n - 1) {
                rep.dichotomy = false;
                break;
            }
            r.for_each([&](int a) {
                VertexSet pair;
                pair.add(a);
                if (a + 1 < t) pair.add(a + 1);
                if (f[i].intersection_size(pair) != 1) rep.dichotomy = false;
            });
        }
    }
    return rep;
}

RainbowAssignment rainbow_cycle_n_minus_1(int t, int n, const Collection& f) {
    if (t < 2 * n)
        throw PreconditionError("cycle too short: need t >= 2n, got t=" + std::to_string(t) +
                                ", n=" + std::to_string(n));
    if (static_cast<int>(f.size()) < n - 1)
        throw PreconditionError("need at least n-1 sets, got " + std::to_string(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].size() != n)
            throw PreconditionError("set " + std::to_string(i + 1) + " does not have n vertices");
    {
        Degree2Graph c = Degree2Graph::cycle(t);
        check_collection(c, f);
    }

    // Delete the highest-numbered vertex; the rest is P_{t-1} on the same
    // labels. Restricting can only drop one vertex per set.
    Collection restricted = f;
    for (VertexSet& s : restricted) s.remove(t - 1);
    PathGreedyReport rep = rainbow_path(t - 1, n, restricted);

    RainbowAssignment out = rep.greedy.rainbow;
    if (static_cast<int>(out.pairs.size()) < n - 1)
        throw ContractViolationError("cycle greedy fell below n-1 picks; this is a bug");
    out.pairs.resize(n - 1);
    return out;
}

} // namespace ris
