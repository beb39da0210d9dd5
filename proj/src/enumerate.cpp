#include "ris/enumerate.hpp"

namespace ris {

void check_collection(const Degree2Graph& g, const Collection& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!g.is_independent(f[i]))
            throw InvalidSetError("collection member " + std::to_string(i + 1) +
                                  " is not independent");
}

namespace {

// Most vertices an independent set can still pick from positions >= v,
// relaxing every cycle to a path (sound upper bound for pruning). When the
// first vertex of a cycle is already chosen, its last vertex is off-limits.
struct SuffixBound {
    const Degree2Graph* g;

    int capacity(int v, const VertexSet& chosen) const {
        int total = 0;
        const auto& comps = g->components();
        for (const Component& c : comps) {
            int hi = c.offset + c.length;
            if (hi <= v) continue;
            int from = std::max(v, c.offset);
            int avail = hi - from;
            if (c.kind == ComponentKind::Cycle && chosen.contains(c.offset) &&
                from < hi) // wrap edge: last vertex blocked by the first
                avail = hi - 1 - from;
            if (avail > 0) total += (avail + 1) / 2;
        }
        return total;
    }
};

void gen(const Degree2Graph& g, const SuffixBound& bound, int n, int from, VertexSet& cur,
         VertexSet& blocked, std::vector<VertexSet>& out) {
    int need = n - cur.size();
    if (need == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v < g.vertex_count(); ++v) {
        if (blocked.contains(v)) continue;
        if (bound.capacity(v, cur) < need) return; // bound is non-increasing in v
        cur.add(v);
        VertexSet saved = blocked;
        blocked |= g.closed_neighbors(v);
        const Component& c = g.components()[g.component_of(v)];
        if (c.kind == ComponentKind::Cycle && v == c.offset)
            blocked.add(c.offset + c.length - 1); // wrap edge
        gen(g, bound, n, v + 1, cur, blocked, out);
        blocked = saved;
        cur.remove(v);
    }
}

} // namespace

std::vector<VertexSet> enumerate_ind_sets(const Degree2Graph& g, int n) {
    if (n < 0) throw InvalidParameterError("set size must be nonnegative");
    std::vector<VertexSet> out;
    if (n > g.independence_number()) return out;
    VertexSet cur, blocked;
    SuffixBound bound{&g};
    gen(g, bound, n, 0, cur, blocked, out);
    return out;
}

std::vector<JumpSet> enumerate_jump_sets(int t, int k, int n) {
    if (t < 3) throw InvalidParameterError("cycle length must be at least 3");
    if (k < 2 || k > t - 2) throw InvalidParameterError("jump must be in [2, t-2]");
    if (n < 1) throw InvalidParameterError("set size must be positive");
    Degree2Graph g = Degree2Graph::cycle(t);
    std::vector<JumpSet> out;
    for (int s = 0; s < t; ++s) {
        VertexSet real;
        for (int i = 0; i < n; ++i) real.add((s + static_cast<long long>(i) * k) % t);
        if (real.size() == n && g.is_independent(real))
            out.push_back(JumpSet{s, k, n, real});
    }
    return out;
}

std::vector<int> list_of(const Collection& f, int v) {
    std::vector<int> out;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].contains(v)) out.push_back(static_cast<int>(i));
    return out;
}

int list_number(const Collection& f, int v) {
    int c = 0;
    for (const VertexSet& s : f)
        if (s.contains(v)) ++c;
    return c;
}

} // namespace ris
