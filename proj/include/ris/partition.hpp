#pragma once

#include <vector>

#include "ris/enumerate.hpp"

namespace ris {

// Largest m such that at least m sets of f meet s in at least m vertices.
int h_value(const Collection& f, const VertexSet& s);

struct PartitionResult {
    Collection part1, part2;
    std::vector<int> colors1, colors2; // original indices, ascending
    int m1 = 0, m2 = 0, ell = 0;
    int h1 = 0, h2 = 0; // realized: h1 = m1-ell, h2 = n-m1+ell

    // With ell = m1+m2-n = 0 the split aims for the two-sided cap
    // |I ∩ V2| <= m2 on part1 and |I ∩ V1| <= m1 on part2. The fill order
    // achieves it whenever any split of the input can; a set heavy on both
    // sides (|I ∩ V1| > m1 and |I ∩ V2| > m2) makes it impossible for every
    // split, which is reported here rather than thrown.
    bool cross_cap_applies = false;
    bool cross_cap_holds = false;
    int cross_cap_witness = -1; // original index of a violating set

    // With ell < m1+m2-n, part2 additionally satisfies
    // |I ∩ V2| >= n-m1+ell+1 pointwise (always achieved).
    bool floor_applies = false;
};

// Split f (n sets, each of size >= n, all meeting v1 ∪ v2 in >= n vertices)
// into parts with h(part1, v1) = m1-ell and h(part2, v2) = n-m1+ell, where
// m_i = h(f, v_i) and 0 <= ell <= m1+m2-n. Deterministic: sets that cannot
// sit in part2 go to part1, the rest of part1 is filled in a fixed
// preference order, ties by color index.
PartitionResult split(const Collection& f, const VertexSet& v1, const VertexSet& v2, int ell);

} // namespace ris
