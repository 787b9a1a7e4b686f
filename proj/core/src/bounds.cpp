#include "prlab/bounds.hpp"

#include <algorithm>

#include "prlab/constructions.hpp"
#include "prlab/errors.hpp"
#include "prlab/iso.hpp"
#include "prlab/turan.hpp"

namespace prlab {

namespace {

long long binom2(long long x) { return x * (x - 1) / 2; }

void add(BoundsReport& rep, BoundEntry::Kind kind, long long value, std::string source,
         bool proved) {
    rep.entries.push_back({kind, value, std::move(source), proved});
}

void add_exact(BoundsReport& rep, long long value, const std::string& source) {
    add(rep, BoundEntry::Kind::lower, value, source, true);
    add(rep, BoundEntry::Kind::upper, value, source, true);
}

// Closed forms whose exactness is established for the given range.
void add_known_values(BoundsReport& rep, int n, const SimpleGraph& pattern) {
    if (is_path_graph(pattern)) {
        int l = pattern.vertex_count;
        if (l == 3 && n >= 3) add_exact(rep, 1, "path3-value");
        if (l == 4 && n >= 4) add_exact(rep, 2, "path4-value");
        if (l == 5 && n >= 5) add_exact(rep, 3, "path5-value");
        if (l == 6 && n >= 6) add_exact(rep, n, "path6-value");
        if (l >= 7 && n >= l) {
            long long v = path_formula_value(n, l);
            if (path_formula_proved(n, l)) add_exact(rep, v, "path-formula");
            else add(rep, BoundEntry::Kind::lower, v, "path-formula[unproved]", false);
        }
        return;
    }
    if (is_cycle_graph(pattern)) {
        int k = pattern.vertex_count;
        if (k == 3 && n >= 3) add_exact(rep, n - 1, "triangle-value");
        else if (k == 4 && n >= 4) add_exact(rep, n, "cycle4-value");
        else if (k == 5 && n >= 5) add_exact(rep, n + 2, "cycle5-value");
        else if (k == 6 && n >= 6) add_exact(rep, n + 5, "cycle6-value");
        else if (n == k) add_exact(rep, binom2(n - 1) + 1, "hamiltonian-cycle-value");
        if (k >= 7 && n >= k)
            add(rep, BoundEntry::Kind::lower, cycle_conjecture_value(n, k), "cycle-conjecture",
                false);
        return;
    }
    if (pattern.vertex_count == 4 && pattern.edge_count() == 5 && n >= 4) {
        add_exact(rep, (3LL * (n - 1)) / 2, "k4minus-value");
        return;
    }
    if (auto parts = complete_bipartite_parts(pattern);
        parts && *parts == std::make_pair(2, 3) && n >= 5) {
        add(rep, BoundEntry::Kind::upper, 2LL * n - 1, "k23-ceiling", true);
    }
}

} // namespace

BoundsReport bounds_report(int n, const SimpleGraph& pattern, const Budget& budget,
                           bool run_search) {
    BoundsReport rep;
    rep.n = n;
    rep.pattern = pattern;
    int m = pair_count(n);

    if (pattern.vertex_count > n) {
        add_exact(rep, m, "vacuous");
    } else if (pattern.edges.empty()) {
        add_exact(rep, 0, "edgeless-unavoidable");
    } else {
        bool has_adjacent_pair = false;
        for (int d : pattern.degrees())
            if (d >= 2) has_adjacent_pair = true;
        if (!has_adjacent_pair) {
            // a matching is properly colored under every coloring
            add_exact(rep, 0, "matching-unavoidable");
        } else {
            add(rep, BoundEntry::Kind::upper, m, "edge-count", true);
            add_known_values(rep, n, pattern);

            auto offer = [&](const ConstructionReport& c) {
                bool ok = n <= 12 ? !find_pc_embedding(c.coloring, pattern).has_value() : true;
                if (ok)
                    add(rep, BoundEntry::Kind::lower, c.claimed_colors,
                        "construction:" + c.formula_name, true);
            };
            try {
                if (is_path_graph(pattern)) {
                    int l = pattern.vertex_count;
                    if (l == 3) offer(small_path_blocker(n, 0));
                    if (l >= 4 && n >= l) {
                        offer(path_lower_bound(n, l, Variant::clique));
                        offer(path_lower_bound(n, l, Variant::join));
                    }
                } else if (is_cycle_graph(pattern)) {
                    int k = pattern.vertex_count;
                    if (k >= 4 && n >= k) {
                        offer(cycle_lower_bound(n, k, Variant::clique));
                        offer(cycle_lower_bound(n, k, Variant::join));
                    }
                } else if (pattern.vertex_count == 4 && pattern.edge_count() == 5 && n >= 4) {
                    offer(k4minus_lower_bound(n));
                } else if (auto parts = complete_bipartite_parts(pattern);
                           parts && *parts == std::make_pair(2, 3) && n >= 5) {
                    offer(k23_lower_bound(n));
                }
                if (n <= kTuranVertexCap) {
                    auto c = turan_based_lower_bound(n, pattern);
                    offer(c);
                }
            } catch (const ResourceLimitError&) {
                // out-of-cap helpers merely contribute nothing
            }
            add(rep, BoundEntry::Kind::lower, 1, "monochromatic", true);
        }
    }

    if (run_search) {
        rep.search = pr_exact(n, pattern, budget);
        add(rep, BoundEntry::Kind::lower, rep.search->value, "search", true);
        add(rep, BoundEntry::Kind::upper, rep.search->upper, "search", true);
    }

    long long lo = 0, hi = m;
    for (const auto& e : rep.entries) {
        if (!e.proved) continue;
        if (e.kind == BoundEntry::Kind::lower) lo = std::max(lo, e.value);
        else hi = std::min(hi, e.value);
    }
    rep.lower = lo;
    rep.upper = hi;
    rep.exact = lo == hi;
    return rep;
}

} // namespace prlab
