#pragma once

#include <optional>
#include <string>

#include "prlab/coloring.hpp"
#include "prlab/graph.hpp"

namespace prlab {

struct Budget {
    double time_limit_s = 60.0;
    long long node_limit = 100'000'000;
    int threads = 1;
};

struct SearchStats {
    long long nodes = 0;        // color assignments tried
    long long copy_prunes = 0;  // assignments rejected by detection
    long long bound_prunes = 0; // subtrees cut by the color-count bound
    double wall_ms = 0;
};

// Exact value or bracket for pr/ar. When `exact`, value == upper and the
// witness (if any coloring is valid at all) attains `value` colors with no
// forbidden copy. On budget exhaustion, exact == false and the true value
// lies in [value, upper]; value is always witnessed, never guessed.
// value == 0 means no coloring of K_n avoids the pattern (e.g. a single-edge
// pattern), in which case witness is empty.
struct SearchResult {
    int n = 0;
    SimpleGraph pattern;
    CopyMode mode = CopyMode::properly_colored;
    int value = 0;
    int upper = 0;
    bool exact = true;
    std::optional<EdgeColoring> witness;
    SearchStats stats;
};

/// Maximum number of colors in an edge-coloring of K_n with no properly
/// colored copy of the pattern. Exhaustive branch-and-bound over restricted
/// growth strings (colorings up to color relabeling) in colex edge order;
/// detection runs incrementally on the edge just colored. The incumbent is
/// seeded from every applicable generator in constructions.hpp, verified
/// before use. If n < pattern.vertex_count the value is C(n,2) (no copy can
/// exist, so the rainbow coloring is optimal).
SearchResult pr_exact(int n, const SimpleGraph& pattern, const Budget& budget = {});

/// Rainbow analogue (the anti-Ramsey number ar(K_n, pattern)).
SearchResult ar_exact(int n, const SimpleGraph& pattern, const Budget& budget = {});

/// A surjective k-coloring of K_n with no properly colored pattern copy, or
/// nullopt if none exists. 1 <= k <= C(n,2).
std::optional<EdgeColoring> pr_decision(int n, const SimpleGraph& pattern, int k,
                                        const Budget& budget = {});

/// Rainbow analogue of pr_decision.
std::optional<EdgeColoring> ar_decision(int n, const SimpleGraph& pattern, int k,
                                        const Budget& budget = {});

/// Restricted-growth-string enumeration with detection disabled: the number
/// of set partitions (Bell number) of m items. Exists to let tests audit the
/// enumeration core directly.
long long count_set_partitions(int m);

/// Best verified seed coloring from the constructions module for this
/// pattern (shape-matched generators plus the Turan-witness coloring when
/// within cap), or nullopt when none is valid. Used to initialize the
/// branch-and-bound incumbent; exposed for tests and bounds reporting.
std::optional<EdgeColoring> best_construction_seed(int n, const SimpleGraph& pattern,
                                                   CopyMode mode);

} // namespace prlab
