#pragma once

#include "prlab/family.hpp"
#include "prlab/graph.hpp"

namespace prlab {

// C(9,2) = 36 candidate edges is where pruned exhaustive search stops being
// a desk-scale computation; requests above the cap fail loudly.
inline constexpr int kTuranVertexCap = 9;

struct TuranResult {
    int n = 0;
    GraphFamily family;
    int value = 0;        // ex(n, family)
    SimpleGraph witness;  // family-free with `value` edges, lex-smallest edge set
};

/// Exact Turan number by depth-first search over edge subsets in colex
/// order. A branch dies as soon as the added edge completes a family member
/// (supergraphs would keep it) or when current+remaining edges cannot beat
/// the incumbent. Throws ResourceLimitError above kTuranVertexCap.
TuranResult ex_exact(int n, const GraphFamily& family);

/// min over members of chromatic_number, minus one.
/// Throws std::invalid_argument on an empty family.
int subchromatic(const GraphFamily& family);

// Measured slack of the two Erdos-Gallai bounds at exhaustive scale:
// (a) ex(n, P_r) <= (r-2)/2 * n, and (b) with all cycles longer than r
// forbidden, ex <= r(n-1)/2.
struct ErdosGallaiReport {
    int n = 0, r = 0;
    int path_ex = 0;          // ex(n, {P_r})
    double path_bound = 0;    // (r-2)/2 * n
    int long_cycle_ex = 0;    // ex(n, {C_{r+1}, ..., C_n})
    double cycle_bound = 0;   // r(n-1)/2
    bool path_holds = false;
    bool cycle_holds = false;
    double path_slack = 0;    // bound - ex
    double cycle_slack = 0;
};

ErdosGallaiReport erdos_gallai_check(int n, int r);

} // namespace prlab
