#pragma once

#include <string>
#include <vector>

#include "ris/bitset.hpp"
#include "ris/errors.hpp"

namespace ris {

enum class ComponentKind { Path, Cycle };

struct Component {
    ComponentKind kind;
    int length;
    int offset; // id of the component's first vertex
};

/// A disjoint union of paths and cycles.  Vertices are numbered 0..V-1
/// component by component; within a cycle the numbering follows the clockwise
/// order, so vertex offset+i is adjacent to offset+((i+1) mod length).
///
/// All user-facing text (CLI, certificates, reports) uses 1-based labels; the
/// conversion lives in to_label()/from_label() and nowhere else.
class Degree2Graph {
public:
    static Degree2Graph cycle(int t);
    static Degree2Graph path(int t);
    static Degree2Graph disjoint_union(const std::vector<Degree2Graph>& gs);

    /// Parses a descriptor like "C7", "C4+C6" or "P9+C5".
    static Degree2Graph parse(const std::string& descriptor);
    std::string descriptor() const;

    int vertex_count() const { return n_; }
    const std::vector<Component>& components() const { return comps_; }

    /// Number of even-length cycle components.
    int even_cycle_count() const;

    int component_of(int v) const;
    bool adjacent(int u, int v) const;
    const VertexSet& neighbors(int v) const { return nbr_[v]; }
    const VertexSet& closed_neighbors(int v) const { return closed_[v]; }

    bool is_independent(const VertexSet& s) const;
    VertexSet closed_neighborhood(const VertexSet& s) const;

    /// Independence number, from the per-component closed forms.
    int independence_number() const;

    /// Vertex permutations preserving adjacency: per-cycle rotations and
    /// reflections, path reversals, and swaps of isomorphic components.
    /// Always contains the identity at index 0.  If the full group would
    /// exceed an internal cap the component swaps are dropped (the result is
    /// then a subgroup, which is all the callers need).
    std::vector<std::vector<int>> automorphisms() const;

    static int to_label(int v) { return v + 1; }
    static int from_label(int label) { return label - 1; }

    void check_set(const VertexSet& s) const; // throws InvalidSetError

    friend bool operator==(const Degree2Graph&, const Degree2Graph&);

private:
    Degree2Graph() = default;
    void add_component(ComponentKind kind, int length);
    void finish();

    std::vector<Component> comps_;
    int n_ = 0;
    std::vector<VertexSet> nbr_;
    std::vector<VertexSet> closed_;
};

} // namespace ris
