#include "ris/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace ris {

void Degree2Graph::add_component(ComponentKind kind, int length) {
    if (kind == ComponentKind::Cycle && length < 3)
        throw InvalidGraphError("cycle length must be at least 3, got " + std::to_string(length));
    if (kind == ComponentKind::Path && length < 1)
        throw InvalidGraphError("path length must be at least 1, got " + std::to_string(length));
    if (n_ + length > VertexSet::capacity())
        throw InvalidGraphError("total vertex count exceeds the configured cap of " +
                                std::to_string(VertexSet::capacity()));
    comps_.push_back(Component{kind, length, n_});
    n_ += length;
}

void Degree2Graph::finish() {
    nbr_.assign(n_, VertexSet{});
    closed_.assign(n_, VertexSet{});
    for (const Component& c : comps_) {
        for (int i = 0; i < c.length; ++i) {
            int v = c.offset + i;
            if (i + 1 < c.length) {
                nbr_[v].add(v + 1);
                nbr_[v + 1].add(v);
            }
        }
        if (c.kind == ComponentKind::Cycle) {
            nbr_[c.offset].add(c.offset + c.length - 1);
            nbr_[c.offset + c.length - 1].add(c.offset);
        }
    }
    for (int v = 0; v < n_; ++v) {
        closed_[v] = nbr_[v];
        closed_[v].add(v);
    }
}

Degree2Graph Degree2Graph::cycle(int t) {
    Degree2Graph g;
    g.add_component(ComponentKind::Cycle, t);
    g.finish();
    return g;
}

Degree2Graph Degree2Graph::path(int t) {
    Degree2Graph g;
    g.add_component(ComponentKind::Path, t);
    g.finish();
    return g;
}

Degree2Graph Degree2Graph::disjoint_union(const std::vector<Degree2Graph>& gs) {
    if (gs.empty()) throw InvalidGraphError("disjoint union of an empty list");
    Degree2Graph g;
    for (const Degree2Graph& part : gs)
        for (const Component& c : part.comps_) g.add_component(c.kind, c.length);
    g.finish();
    return g;
}

Degree2Graph Degree2Graph::parse(const std::string& s) {
    Degree2Graph g;
    std::size_t i = 0;
    while (true) {
        if (i >= s.size()) throw ParseError("expected component, got end of input", i);
        char kind = s[i];
        if (kind != 'C' && kind != 'P') throw ParseError("expected 'C' or 'P'", i);
        ++i;
        std::size_t digits = i;
        long length = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            length = length * 10 + (s[i] - '0');
            if (length > VertexSet::capacity()) throw ParseError("component length out of range", digits);
            ++i;
        }
        if (i == digits) throw ParseError("expected component length", i);
        g.add_component(kind == 'C' ? ComponentKind::Cycle : ComponentKind::Path,
                        static_cast<int>(length));
        if (i == s.size()) break;
        if (s[i] != '+') throw ParseError("expected '+' between components", i);
        ++i;
    }
    g.finish();
    return g;
}

std::string Degree2Graph::descriptor() const {
    std::string out;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += '+';
        out += comps_[i].kind == ComponentKind::Cycle ? 'C' : 'P';
        out += std::to_string(comps_[i].length);
    }
    return out;
}

int Degree2Graph::even_cycle_count() const {
    int c = 0;
    for (const Component& comp : comps_)
        if (comp.kind == ComponentKind::Cycle && comp.length % 2 == 0) ++c;
    return c;
}

int Degree2Graph::component_of(int v) const {
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (v >= comps_[i].offset && v < comps_[i].offset + comps_[i].length)
            return static_cast<int>(i);
    throw InvalidSetError("vertex " + std::to_string(to_label(v)) + " out of range");
}

bool Degree2Graph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw InvalidSetError("vertex out of range");
    return nbr_[u].contains(v);
}

void Degree2Graph::check_set(const VertexSet& s) const {
    int top = s.largest();
    if (top >= n_)
        throw InvalidSetError("vertex " + std::to_string(to_label(top)) + " out of range for " +
                              descriptor());
}

bool Degree2Graph::is_independent(const VertexSet& s) const {
    check_set(s);
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && nbr_[v].intersects(s)) ok = false;
    });
    return ok;
}

VertexSet Degree2Graph::closed_neighborhood(const VertexSet& s) const {
    check_set(s);
    VertexSet out = s;
    s.for_each([&](int v) { out |= nbr_[v]; });
    return out;
}

int Degree2Graph::independence_number() const {
    int alpha = 0;
    for (const Component& c : comps_)
        alpha += c.kind == ComponentKind::Cycle ? c.length / 2 : (c.length + 1) / 2;
    return alpha;
}

namespace {

// Internal maps of one component onto another of the same kind and length,
// as position permutations of 0..len-1.
std::vector<std::vector<int>> component_maps(ComponentKind kind, int len) {
    std::vector<std::vector<int>> maps;
    std::vector<int> m(len);
    if (kind == ComponentKind::Path) {
        std::iota(m.begin(), m.end(), 0);
        maps.push_back(m);
        if (len >= 2) {
            for (int i = 0; i < len; ++i) m[i] = len - 1 - i;
            maps.push_back(m);
        }
    } else {
        for (int r = 0; r < len; ++r) {
            for (int i = 0; i < len; ++i) m[i] = (i + r) % len;
            maps.push_back(m);
            for (int i = 0; i < len; ++i) m[i] = ((r - i) % len + len) % len;
            maps.push_back(m);
        }
    }
    return maps;
}

constexpr std::size_t kAutomorphismCap = 20000;

} // namespace

std::vector<std::vector<int>> Degree2Graph::automorphisms() const {
    // Component permutations: all type-preserving bijections of component
    // indices, built group by group of isomorphic components.
    std::vector<std::vector<int>> comp_perms;
    {
        std::vector<int> base(comps_.size());
        std::iota(base.begin(), base.end(), 0);
        // Group indices by (kind, length).
        std::vector<std::vector<int>> groups;
        std::vector<int> seen(comps_.size(), 0);
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> grp{static_cast<int>(i)};
            seen[i] = 1;
            for (std::size_t j = i + 1; j < comps_.size(); ++j)
                if (!seen[j] && comps_[j].kind == comps_[i].kind &&
                    comps_[j].length == comps_[i].length) {
                    grp.push_back(static_cast<int>(j));
                    seen[j] = 1;
                }
            groups.push_back(std::move(grp));
        }
        comp_perms.push_back(base);
        for (const auto& grp : groups) {
            std::vector<int> order(grp.size());
            std::iota(order.begin(), order.end(), 0);
            std::vector<std::vector<int>> expanded;
            while (std::next_permutation(order.begin(), order.end())) {
                for (const auto& perm : comp_perms) {
                    std::vector<int> p = perm;
                    for (std::size_t k = 0; k < grp.size(); ++k) p[grp[k]] = perm[grp[order[k]]];
                    expanded.push_back(std::move(p));
                }
            }
            std::iota(order.begin(), order.end(), 0); // next_permutation left it sorted again
            comp_perms.insert(comp_perms.end(), expanded.begin(), expanded.end());
        }
    }

    // Estimated group size; drop component swaps if it would blow the cap.
    std::size_t per_comp = 1;
    for (const Component& c : comps_) {
        std::size_t maps = c.kind == ComponentKind::Cycle ? 2 * c.length : (c.length >= 2 ? 2 : 1);
        per_comp *= maps;
        if (per_comp > kAutomorphismCap) break;
    }
    if (per_comp * comp_perms.size() > kAutomorphismCap) comp_perms.resize(1);

    std::vector<std::vector<int>> result;
    std::vector<std::vector<std::vector<int>>> maps_by_comp;
    maps_by_comp.reserve(comps_.size());
    for (const Component& c : comps_) maps_by_comp.push_back(component_maps(c.kind, c.length));

    for (const auto& cperm : comp_perms) {
        // Cartesian product of internal maps across components.
        std::vector<std::size_t> pick(comps_.size(), 0);
        while (true) {
            std::vector<int> perm(n_);
            for (std::size_t ci = 0; ci < comps_.size(); ++ci) {
                const Component& src = comps_[ci];
                const Component& dst = comps_[cperm[ci]];
                const auto& m = maps_by_comp[ci][pick[ci]];
                for (int p = 0; p < src.length; ++p) perm[src.offset + p] = dst.offset + m[p];
            }
            result.push_back(std::move(perm));
            if (result.size() >= kAutomorphismCap) return result;
            std::size_t ci = 0;
            for (; ci < comps_.size(); ++ci) {
                if (++pick[ci] < maps_by_comp[ci].size()) break;
                pick[ci] = 0;
            }
            if (ci == comps_.size()) break;
        }
    }

    // The identity must come first: it is comp_perms[0] with all picks 0.
    return result;
}

bool operator==(const Degree2Graph& a, const Degree2Graph& b) {
    if (a.n_ != b.n_ || a.comps_.size() != b.comps_.size()) return false;
    for (std::size_t i = 0; i < a.comps_.size(); ++i)
        if (a.comps_[i].kind != b.comps_[i].kind || a.comps_[i].length != b.comps_[i].length)
            return false;
    return true;
}

} // namespace ris
