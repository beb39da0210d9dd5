#include "ris/solver.hpp"

#include <algorithm>

#include "ris/gris.hpp"

namespace ris {

bool verify_rainbow(const Degree2Graph& g, const Collection& f, const RainbowAssignment& r,
                    int m) {
    if (static_cast<int>(r.pairs.size()) != m) return false;
    std::vector<char> used(f.size(), 0);
    VertexSet verts;
    int prev = -1;
    for (auto [v, c] : r.pairs) {
        if (v < 0 || v >= g.vertex_count())
            throw InvalidCertificateError("vertex " + std::to_string(v + 1) +
                                          " outside the graph");
        if (c < 0 || c >= static_cast<int>(f.size()))
            throw InvalidCertificateError("color " + std::to_string(c + 1) +
                                          " outside the collection");
        if (v <= prev) return false;
        prev = v;
        if (used[c] || !f[c].contains(v)) return false;
        used[c] = 1;
        verts.add(v);
    }
    return g.is_independent(verts);
}

namespace {

bool kuhn_try(const Collection& f, const std::vector<int>& vs, const std::vector<char>& banned,
              int pos, std::vector<int>& match_pos, std::vector<char>& visited) {
    for (std::size_t c = 0; c < f.size(); ++c) {
        if (banned[c] || visited[c] || !f[c].contains(vs[pos])) continue;
        visited[c] = 1;
        if (match_pos[c] < 0 || kuhn_try(f, vs, banned, match_pos[c], match_pos, visited)) {
            match_pos[c] = pos;
            return true;
        }
    }
    return false;
}

// Can the vertices vs[from..] each take a distinct non-banned color that
// contains them?
bool matchable(const Collection& f, const std::vector<int>& vs, int from,
               const std::vector<char>& banned) {
    std::vector<int> match_pos(f.size(), -1);
    for (int i = from; i < static_cast<int>(vs.size()); ++i) {
        std::vector<char> visited(f.size(), 0);
        if (!kuhn_try(f, vs, banned, i, match_pos, visited)) return false;
    }
    return true;
}

// Smallest color list (in vs order) realizing a perfect assignment, if any.
std::optional<std::vector<int>> lex_min_colors(const Collection& f, const std::vector<int>& vs) {
    std::vector<char> used(f.size(), 0);
    if (!matchable(f, vs, 0, used)) return std::nullopt;
    std::vector<int> colors;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
        bool fixed = false;
        for (std::size_t c = 0; c < f.size() && !fixed; ++c) {
            if (used[c] || !f[c].contains(vs[i])) continue;
            used[c] = 1;
            if (matchable(f, vs, i + 1, used)) {
                colors.push_back(static_cast<int>(c));
                fixed = true;
            } else {
                used[c] = 0;
            }
        }
        if (!fixed) return std::nullopt; // unreachable after the initial check
    }
    return colors;
}

struct RainbowSearch {
    const Degree2Graph* g;
    const Collection* f;
    int m;
    std::vector<int> chosen;
    std::vector<char> no_ban;

    bool dfs(int from, const VertexSet& blocked, RainbowAssignment& out) {
        if (static_cast<int>(chosen.size()) == m) {
            auto colors = lex_min_colors(*f, chosen);
            out.pairs.clear();
            for (int i = 0; i < m; ++i) out.pairs.emplace_back(chosen[i], (*colors)[i]);
            return true;
        }
        int need = m - static_cast<int>(chosen.size());
        int avail = 0;
        for (int v = from; v < g->vertex_count(); ++v)
            if (!blocked.contains(v)) ++avail;
        if (avail < need) return false;
        for (int v = from; v < g->vertex_count(); ++v) {
            if (blocked.contains(v)) continue;
            chosen.push_back(v);
            if (matchable(*f, chosen, 0, no_ban) &&
                dfs(v + 1, blocked | g->closed_neighbors(v), out))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<RainbowAssignment> find_rainbow(const Degree2Graph& g, const Collection& f, int m) {
    if (m < 0) throw InvalidParameterError("rainbow size must be nonnegative");
    check_collection(g, f);
    if (m == 0) return RainbowAssignment{};
    if (static_cast<int>(f.size()) < m) return std::nullopt;
    RainbowSearch search{&g, &f, m, {}, std::vector<char>(f.size(), 0)};
    RainbowAssignment out;
    if (search.dfs(0, VertexSet{}, out)) return out;
    return std::nullopt;
}

namespace {

bool exists_dfs(const Degree2Graph& g, const Collection& f, int m, std::size_t ci, int taken,
                const VertexSet& blocked) {
    if (taken == m) return true;
    if (static_cast<int>(f.size() - ci) < m - taken) return false;
    for (int v : difference(f[ci], blocked).members())
        if (exists_dfs(g, f, m, ci + 1, taken + 1, blocked | g.closed_neighbors(v))) return true;
    return exists_dfs(g, f, m, ci + 1, taken, blocked);
}

} // namespace

bool exists_rainbow(const Degree2Graph& g, const Collection& f, int m) {
    if (m < 0) throw InvalidParameterError("rainbow size must be nonnegative");
    if (m == 0) return true;
    return exists_dfs(g, f, m, 0, 0, VertexSet{});
}

namespace {

// D vector of the rotation starting at index j of the ascending circular
// list a: (span, consecutive gaps), all mod t.
std::vector<int> gap_vector(const std::vector<int>& a, int j, int t) {
    int r = static_cast<int>(a.size());
    std::vector<int> d(r);
    auto at = [&](int k) { return a[(j + k) % r]; };
    d[0] = ((at(r - 1) - at(0)) % t + t) % t;
    for (int k = 1; k < r; ++k) d[k] = ((at(k) - at(k - 1)) % t + t) % t;
    return d;
}

int minimal_rotation(const std::vector<int>& a, int t) {
    int best = 0;
    std::vector<int> bestd = gap_vector(a, 0, t);
    for (int j = 1; j < static_cast<int>(a.size()); ++j) {
        std::vector<int> d = gap_vector(a, j, t);
        if (d < bestd) {
            bestd = std::move(d);
            best = j;
        }
    }
    return best;
}

} // namespace

TwoJumpResult solve_two_jump(int t, int n, const std::vector<JumpSet>& f) {
    if (n < 1) throw InvalidParameterError("need n >= 1");
    if (t < 2 * n + 1)
        throw PreconditionError("cycle too short: need t >= 2n+1, got t=" + std::to_string(t) +
                                ", n=" + std::to_string(n));
    if (static_cast<int>(f.size()) != n)
        throw PreconditionError("need exactly n jump sets, got " + std::to_string(f.size()));
    Degree2Graph g = Degree2Graph::cycle(t);
    Collection coll;
    for (const JumpSet& j : f) {
        if (j.jump != 2) throw PreconditionError("jump step must be 2");
        if (j.size != n) throw PreconditionError("jump sets must have size n");
        VertexSet real;
        for (int i = 0; i < n; ++i) real.add(((j.start % t + t) + 2 * i) % t);
        if (!(real == j.realized)) throw InvalidSetError("jump set realization is inconsistent");
        if (!g.is_independent(real)) throw InvalidSetError("jump set is not independent");
        coll.push_back(real);
    }

    TwoJumpResult res;
    std::vector<int> a; // current rainbow vertices, ascending
    std::vector<char> no_ban(coll.size(), 0);

    auto fallback = [&]() -> TwoJumpResult& {
        res.used_fallback = true;
        res.moves.push_back({TwoJumpMove::Kind::Fallback, -1, -1});
        auto found = find_rainbow(g, coll, n);
        if (!found)
            throw ContractViolationError(
                "two-jump fallback found no rainbow set; reaching this is a bug");
        res.assignment = *found;
        return res;
    };

    long guard = 4L * t * t * n + 64;
    while (static_cast<int>(a.size()) < n) {
        if (--guard < 0) return fallback();
        // Augment: smallest vertex whose addition keeps the set independent
        // and color-matchable (matching covers any recoloring chain).
        VertexSet blocked;
        for (int v : a) blocked |= g.closed_neighbors(v);
        int pick = -1;
        for (int v = 0; v < t && pick < 0; ++v) {
            if (blocked.contains(v)) continue;
            std::vector<int> ext = a;
            ext.insert(std::upper_bound(ext.begin(), ext.end(), v), v);
            if (matchable(coll, ext, 0, no_ban)) pick = v;
        }
        if (pick >= 0) {
            a.insert(std::upper_bound(a.begin(), a.end(), pick), pick);
            res.moves.push_back({TwoJumpMove::Kind::Augment, pick, -1});
            continue;
        }
        // Replace: in the gap-minimal rotation, pull some a_i (i >= 2) back
        // within its gap. Any such move shrinks the rotation-minimal gap
        // vector lexicographically, so the loop terminates.
        int r = static_cast<int>(a.size());
        bool applied = false;
        if (r >= 2) {
            int j = minimal_rotation(a, t);
            for (int i = 1; i < r && !applied; ++i) {
                int prev = a[(j + i - 1) % r];
                int cur = a[(j + i) % r];
                int gap = ((cur - prev) % t + t) % t;
                for (int delta = gap - 1; delta >= 2 && !applied; --delta) {
                    int b = (prev + delta) % t;
                    std::vector<int> next;
                    next.reserve(r);
                    for (int v : a)
                        if (v != cur) next.push_back(v);
                    next.insert(std::upper_bound(next.begin(), next.end(), b), b);
                    if (matchable(coll, next, 0, no_ban)) {
                        a = std::move(next);
                        res.moves.push_back({TwoJumpMove::Kind::Replace, b, cur});
                        applied = true;
                    }
                }
            }
        }
        if (!applied) return fallback();
    }

    auto colors = lex_min_colors(coll, a);
    if (!colors)
        throw ContractViolationError("final rainbow set lost its coloring; reaching this is a bug");
    for (int i = 0; i < n; ++i) res.assignment.pairs.emplace_back(a[i], (*colors)[i]);
    if (!verify_rainbow(g, coll, res.assignment, n))
        throw ContractViolationError("two-jump result failed verification; reaching this is a bug");
    return res;
}

namespace {

struct SubgraphMap {
    Degree2Graph graph;
    std::vector<int> to_local;  // g vertex -> subgraph vertex, -1 if dropped
    std::vector<int> to_global; // subgraph vertex -> g vertex
};

SubgraphMap make_subgraph(const Degree2Graph& g, const std::vector<int>& keep) {
    std::vector<Degree2Graph> parts;
    SubgraphMap m;
    m.to_local.assign(g.vertex_count(), -1);
    for (int ci : keep) {
        const Component& c = g.components()[ci];
        parts.push_back(c.kind == ComponentKind::Cycle ? Degree2Graph::cycle(c.length)
                                                       : Degree2Graph::path(c.length));
        for (int i = 0; i < c.length; ++i) {
            m.to_local[c.offset + i] = static_cast<int>(m.to_global.size());
            m.to_global.push_back(c.offset + i);
        }
    }
    m.graph = Degree2Graph::disjoint_union(parts);
    return m;
}

VertexSet localize(const VertexSet& s, const std::vector<int>& to_local) {
    VertexSet out;
    s.for_each([&](int v) {
        if (to_local[v] >= 0) out.add(to_local[v]);
    });
    return out;
}

RainbowAssignment two_regular_rec(const Degree2Graph& g, int n, const Collection& f) {
    const auto& comps = g.components();
    if (comps.size() == 1) return rainbow_cycle_n_minus_1(comps[0].length, n, f);

    // Odd component: solve it by exact search on the first (length/2) sets
    // and recurse on the rest. Unreachable when I_n(g) is nonempty, kept for
    // shape parity with the even case.
    for (std::size_t oi = 0; oi < comps.size(); ++oi) {
        if (comps[oi].length % 2 == 0) continue;
        int m = comps[oi].length / 2;
        SubgraphMap odd = make_subgraph(g, {static_cast<int>(oi)});
        Collection f1;
        for (int j = 0; j < m; ++j) f1.push_back(localize(f[j], odd.to_local));
        auto r1 = find_rainbow(odd.graph, f1, m);
        if (!r1)
            throw ContractViolationError("odd-cycle block unsolvable; reaching this is a bug");
        std::vector<int> rest;
        for (std::size_t ci = 0; ci < comps.size(); ++ci)
            if (ci != oi) rest.push_back(static_cast<int>(ci));
        SubgraphMap sub = make_subgraph(g, rest);
        Collection f2;
        for (std::size_t j = m; j < f.size(); ++j) f2.push_back(localize(f[j], sub.to_local));
        RainbowAssignment r2 = two_regular_rec(sub.graph, n - m, f2);
        RainbowAssignment out;
        for (auto [v, c] : r1->pairs) out.pairs.emplace_back(odd.to_global[v], c);
        for (auto [v, c] : r2.pairs) out.pairs.emplace_back(sub.to_global[v], c + m);
        std::sort(out.pairs.begin(), out.pairs.end());
        return out;
    }

    // All even cycles. Remove a shortest one, solve the rest, then repair
    // the single deficient cycle of the sub-solution.
    int mi = 0;
    for (std::size_t ci = 1; ci < comps.size(); ++ci)
        if (comps[ci].length < comps[mi].length) mi = static_cast<int>(ci);
    int n1 = comps[mi].length / 2;

    std::vector<int> rest;
    for (std::size_t ci = 0; ci < comps.size(); ++ci)
        if (static_cast<int>(ci) != mi) rest.push_back(static_cast<int>(ci));
    SubgraphMap sub = make_subgraph(g, rest);
    Collection fsub;
    for (std::size_t j = n1; j < f.size(); ++j) fsub.push_back(localize(f[j], sub.to_local));
    RainbowAssignment rsub = two_regular_rec(sub.graph, n - n1, fsub);

    // Count picks per remaining cycle; exactly one is short by one.
    const auto& subcomps = sub.graph.components();
    std::vector<int> count(subcomps.size(), 0);
    for (auto [v, c] : rsub.pairs) count[sub.graph.component_of(v)]++;
    int deficient = -1;
    for (std::size_t ci = 0; ci < subcomps.size(); ++ci) {
        if (count[ci] == subcomps[ci].length / 2) continue;
        if (count[ci] == subcomps[ci].length / 2 - 1 && deficient < 0) {
            deficient = static_cast<int>(ci);
            continue;
        }
        throw ContractViolationError("sub-solution cycle counts are off; reaching this is a bug");
    }
    if (deficient < 0)
        throw ContractViolationError("no deficient cycle in sub-solution; reaching this is a bug");
    int gd = rest[deficient]; // deficient component's index in g
    int nd = comps[gd].length / 2;

    // Colors the sub-solution spent on the deficient cycle (original ids).
    std::vector<int> freed;
    for (auto [v, c] : rsub.pairs)
        if (sub.graph.component_of(v) == deficient) freed.push_back(c + n1);
    std::sort(freed.begin(), freed.end());
    if (static_cast<int>(freed.size()) != nd - 1)
        throw ContractViolationError("freed color count is off; reaching this is a bug");

    // The first n1 sets plus the freed ones all hit the removed cycle in a
    // full parity class; one class appears at least n1 times.
    std::vector<int> pool;
    for (int j = 0; j < n1; ++j) pool.push_back(j);
    pool.insert(pool.end(), freed.begin(), freed.end());

    int off = comps[mi].offset;
    VertexSet even_class, odd_class;
    for (int i = 0; i < n1; ++i) {
        even_class.add(off + 2 * i);
        odd_class.add(off + 2 * i + 1);
    }
    VertexSet span;
    for (int i = 0; i < comps[mi].length; ++i) span.add(off + i);
    auto klass = [&](int j) { return f[j] & span; };
    int even_count = 0;
    for (int j : pool)
        if (klass(j) == even_class) ++even_count;
    VertexSet chosen_class =
        even_count >= n1 ? even_class : odd_class; // pigeonhole: one class has >= n1
    std::vector<int> class_colors;
    for (int j : pool) {
        if (static_cast<int>(class_colors.size()) == n1) break;
        if (klass(j) == chosen_class) class_colors.push_back(j);
    }
    if (static_cast<int>(class_colors.size()) != n1)
        throw ContractViolationError("parity pigeonhole failed; reaching this is a bug");

    // Remaining pool colors, restricted to the deficient cycle, feed the
    // cycle greedy for its n_d - 1 picks.
    std::vector<int> rem;
    for (int j : pool)
        if (std::find(class_colors.begin(), class_colors.end(), j) == class_colors.end())
            rem.push_back(j);
    SubgraphMap dloc = make_subgraph(g, {gd});
    Collection fdef;
    for (int j : rem) fdef.push_back(localize(f[j], dloc.to_local));
    RainbowAssignment rdef = rainbow_cycle_n_minus_1(comps[gd].length, nd, fdef);

    RainbowAssignment out;
    for (auto [v, c] : rsub.pairs)
        if (sub.graph.component_of(v) != deficient) out.pairs.emplace_back(sub.to_global[v], c + n1);
    {
        std::size_t i = 0;
        chosen_class.for_each([&](int v) { out.pairs.emplace_back(v, class_colors[i++]); });
    }
    for (auto [v, c] : rdef.pairs) out.pairs.emplace_back(dloc.to_global[v], rem[c]);
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

} // namespace

RainbowAssignment solve_two_regular(const Degree2Graph& g, int n, const Collection& f) {
    for (const Component& c : g.components())
        if (c.kind != ComponentKind::Cycle)
            throw PreconditionError("graph must be a disjoint union of cycles");
    if (g.vertex_count() < 2 * n - 1 || g.vertex_count() > 2 * n)
        throw PreconditionError("need 2n-1 <= |V| <= 2n, got |V|=" +
                                std::to_string(g.vertex_count()) + ", n=" + std::to_string(n));
    if (static_cast<int>(f.size()) != n - 1)
        throw PreconditionError("need exactly n-1 sets, got " + std::to_string(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i].size() != n)
            throw PreconditionError("set " + std::to_string(i + 1) + " does not have n vertices");
    check_collection(g, f);
    if (g.independence_number() < n)
        throw PreconditionError("empty I_n: the graph has no independent n-sets");

    RainbowAssignment out = two_regular_rec(g, n, f);
    if (!verify_rainbow(g, f, out, n - 1))
        throw ContractViolationError("two-regular result failed verification; reaching this is a bug");
    return out;
}

} // namespace ris
