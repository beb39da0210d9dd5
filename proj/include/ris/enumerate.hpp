#pragma once

#include <vector>

#include "ris/graph.hpp"

namespace ris {

// A collection of independent sets over one graph. The position of a set is
// its color index (0-based internally). Repetition is allowed; whether two
// collections are compared as ordered lists or as multisets is up to the
// caller (the search code sorts before comparing, the greedy code does not).
using Collection = std::vector<VertexSet>;

// Throws InvalidSetError if any member of f is not independent in g.
void check_collection(const Degree2Graph& g, const Collection& f);

// An arithmetic progression {start, start+jump, ..., start+(size-1)*jump}
// mod t that is independent in C_t. Distinct starts are distinct jump sets
// even if they happened to realize the same vertex set.
struct JumpSet {
    int start = 0; // internal 0-based vertex
    int jump = 0;
    int size = 0;
    VertexSet realized;
};

// All independent sets of g with exactly n vertices, in lexicographic order
// of their sorted member lists. The order is part of the contract: canonical
// keys elsewhere are indices into this list.
std::vector<VertexSet> enumerate_ind_sets(const Degree2Graph& g, int n);

// Jump sets of C_t with step k and size n, one candidate per start, keeping
// the independent ones. Requires t >= 3, 2 <= k <= t-2, n >= 1.
std::vector<JumpSet> enumerate_jump_sets(int t, int k, int n);

// Colors whose sets contain v, ascending. list_number is its length.
std::vector<int> list_of(const Collection& f, int v);
int list_number(const Collection& f, int v);

} // namespace ris
