#pragma once

#include <vector>

#include "ris/solver.hpp"

namespace ris {

enum class SkipReason { none, no_unused_color, not_independent };

struct TraceStep {
    int vertex = -1;
    bool added = false;
    int color = -1; // bound color when added
    SkipReason reason = SkipReason::none;
};

struct GreedyResult {
    RainbowAssignment rainbow;
    std::vector<int> greedy_colors; // ascending; equals the colors used in rainbow
    std::vector<TraceStep> trace;   // one entry per scanned vertex, in scan order
};

// The greedy scan: walk the ordering; take a vertex iff an unused color
// contains it (checked first) and it keeps the picked set independent; bind
// the minimal-index unused color on take.
GreedyResult gris(const Degree2Graph& g, const std::vector<int>& ordering, const Collection& f);

struct PathGreedyReport {
    GreedyResult greedy;
    int target = 0;       // the n the dichotomy is stated against
    bool full = false;    // |R| >= n
    bool dichotomy = false; // when |R| = n-1: every unused set I has |I| = n-1
                            // and meets each {a, a+1}, a in R, exactly once
};

// Greedy on P_t in natural order, plus the dichotomy check: requires
// t >= 2n-1, |f| >= n-1 and every set of size >= n-1. Either |R| >= n, or
// |R| = n-1 and the unused-set structure above holds.
PathGreedyReport rainbow_path(int t, int n, const Collection& f);

// Rainbow independent (n-1)-set of (f, C_t) for t >= 2n, |f| >= n-1, all
// sets of size exactly n: delete the highest-numbered vertex, restrict f to
// the remaining path and run the path greedy; keep the first n-1 picks.
RainbowAssignment rainbow_cycle_n_minus_1(int t, int n, const Collection& f);

} // namespace ris
