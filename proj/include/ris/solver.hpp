#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ris/enumerate.hpp"

namespace ris {

// One chosen vertex per used color. Pairs are (vertex, color), both 0-based,
// sorted by vertex. Valid against (g, f) when the vertices are independent,
// the colors are pairwise distinct and each vertex belongs to its color's set.
struct RainbowAssignment {
    std::vector<std::pair<int, int>> pairs;

    VertexSet vertices() const {
        VertexSet s;
        for (auto [v, c] : pairs) s.add(v);
        return s;
    }
    std::vector<int> colors() const {
        std::vector<int> out;
        out.reserve(pairs.size());
        for (auto [v, c] : pairs) out.push_back(c);
        return out;
    }
};

// True iff r has exactly m pairs and is a valid rainbow independent set of
// (f, g). Vertices or colors pointing outside g / f throw
// InvalidCertificateError; logical violations just return false.
bool verify_rainbow(const Degree2Graph& g, const Collection& f, const RainbowAssignment& r,
                    int m);

// Exhaustive search for a rainbow independent m-set. Deterministic: returns
// the lexicographically least solution, comparing the sorted vertex list
// first and the induced color list second. This is the ground-truth oracle.
std::optional<RainbowAssignment> find_rainbow(const Degree2Graph& g, const Collection& f, int m);

// Existence-only variant, faster than find_rainbow (color-major search with
// skips); must agree with find_rainbow.has_value() everywhere.
bool exists_rainbow(const Degree2Graph& g, const Collection& f, int m);

struct TwoJumpMove {
    enum class Kind { Augment, Replace, Fallback };
    Kind kind;
    int added = -1;   // vertex that entered the rainbow set
    int removed = -1; // vertex that left (Replace only)
};

struct TwoJumpResult {
    RainbowAssignment assignment;
    std::vector<TwoJumpMove> moves;
    bool used_fallback = false;
};

// Rainbow independent n-set for a collection of exactly n 2-jump n-sets of
// C_t, t >= 2n+1. Iterative improvement: grow a maximal rainbow set by
// matching-based augmentation; when stuck below n, replace some a_i (i >= 2
// in the gap-vector-minimal rotation) by a smaller vertex in its gap, which
// strictly shrinks the rotation-minimal gap vector. If no recognized move
// applies, fall back to find_rainbow and record that. A fallback returning
// nothing is a ContractViolationError.
TwoJumpResult solve_two_jump(int t, int n, const std::vector<JumpSet>& f);

// Rainbow independent (n-1)-set for |f| = n-1 independent n-sets of a
// disjoint union of cycles with 2n-1 <= |V| <= 2n. Recursive construction:
// a single cycle is handled by the cycle greedy; otherwise remove a cycle of
// minimum length, solve the rest, and repair the one deficient cycle of the
// sub-solution via the pigeonhole on the two parity classes of the removed
// cycle. Rejects instances with empty I_n (e.g. |V| = 2n-1) up front.
RainbowAssignment solve_two_regular(const Degree2Graph& g, int n, const Collection& f);

} // namespace ris
