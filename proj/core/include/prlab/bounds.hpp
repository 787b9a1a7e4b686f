#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prlab/solver.hpp"

namespace prlab {

// One contributing bound with its origin. `proved` distinguishes proved
// closed forms from conjectured values; conjectured entries never tighten
// the reported bracket, they are carried for display only.
struct BoundEntry {
    enum class Kind { lower, upper };
    Kind kind = Kind::lower;
    long long value = 0;
    std::string source;
    bool proved = true;
};

struct BoundsReport {
    int n = 0;
    SimpleGraph pattern;
    long long lower = 0;        // max of proved lower entries
    long long upper = 0;        // min of proved upper entries
    bool exact = false;         // lower == upper
    std::vector<BoundEntry> entries;
    std::optional<SearchResult> search; // present when the solver ran
};

/// Consolidated bracket for pr(K_n, pattern): construction counts, the
/// Turan-witness lower bound ex(n, family)+1 (within cap), known closed
/// forms for recognized shapes, the trivial C(n,2) ceiling, and — when
/// run_search is set — the branch-and-bound result, which collapses the
/// bracket if it completes within budget.
BoundsReport bounds_report(int n, const SimpleGraph& pattern,
                           const Budget& budget = {}, bool run_search = false);

} // namespace prlab
