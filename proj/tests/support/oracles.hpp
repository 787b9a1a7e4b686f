#pragma once

// Independent brute-force oracles for the test suites. Everything here
// enumerates rather than searches, and stays clear of the library's
// backtracking code paths so the two sides can check each other.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "prlab/coloring.hpp"
#include "prlab/graph.hpp"
#include "prlab/iso.hpp"

namespace oracle {

inline int pair_index(int i, int j) {
    return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j;
}

// Does any injective map make the pattern copy properly colored / rainbow?
// Tries every injective map, no pruning beyond injectivity.
inline bool naive_has_copy(const prlab::EdgeColoring& col, const prlab::SimpleGraph& pattern,
                           prlab::CopyMode mode) {
    int vp = pattern.vertex_count;
    if (vp > col.n) return false;
    std::vector<int> map(vp, -1);
    std::vector<char> used(col.n, 0);
    auto ok = [&]() {
        if (mode == prlab::CopyMode::rainbow) {
            std::set<int> seen;
            for (auto [a, b] : pattern.edges)
                if (!seen.insert(col.colors[pair_index(map[a], map[b])]).second) return false;
            return true;
        }
        for (size_t s = 0; s < pattern.edges.size(); ++s) {
            auto [a, b] = pattern.edges[s];
            for (size_t t = s + 1; t < pattern.edges.size(); ++t) {
                auto [c, d] = pattern.edges[t];
                if (a != c && a != d && b != c && b != d) continue;
                if (col.colors[pair_index(map[a], map[b])] ==
                    col.colors[pair_index(map[c], map[d])])
                    return false;
            }
        }
        return true;
    };
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == vp) return ok();
        for (int w = 0; w < col.n; ++w) {
            if (used[w]) continue;
            used[w] = 1;
            map[v] = w;
            if (self(self, v + 1)) { used[w] = 0; return true; }
            used[w] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

// All restricted-growth strings of length m, handed to a callback.
template <typename F>
inline void for_each_rgs(int m, F&& visit) {
    std::vector<int> rgs(m, 0);
    auto rec = [&](auto&& self, int p, int blocks) -> void {
        if (p == m) {
            visit(rgs, blocks);
            return;
        }
        for (int c = 0; c <= blocks; ++c) {
            rgs[p] = c;
            self(self, p + 1, blocks + (c == blocks ? 1 : 0));
        }
    };
    if (m == 0) visit(rgs, 0);
    else rec(rec, 0, 0);
}

// Exhaustive pr/ar for tiny n: every coloring (up to relabeling) is checked
// with the naive detector; returns the max valid color count (0 = none valid).
inline int exhaustive_max_colors(int n, const prlab::SimpleGraph& pattern,
                                 prlab::CopyMode mode) {
    int m = prlab::pair_count(n);
    int best = 0;
    for_each_rgs(m, [&](const std::vector<int>& rgs, int blocks) {
        if (blocks <= best) return;
        auto col = prlab::EdgeColoring::from_colors(n, rgs);
        if (!naive_has_copy(col, pattern, mode)) best = blocks;
    });
    return best;
}

// Per-k feasibility table: result[k] == true iff some surjective k-coloring
// avoids the pattern (k from 0 to m).
inline std::vector<char> exhaustive_feasible_k(int n, const prlab::SimpleGraph& pattern,
                                               prlab::CopyMode mode) {
    int m = prlab::pair_count(n);
    std::vector<char> feasible(m + 1, 0);
    for_each_rgs(m, [&](const std::vector<int>& rgs, int blocks) {
        if (feasible[blocks]) return;
        auto col = prlab::EdgeColoring::from_colors(n, rgs);
        if (!naive_has_copy(col, pattern, mode)) feasible[blocks] = 1;
    });
    return feasible;
}

// Matchings of g as a count, by filtering all edge subsets.
inline long long subset_matching_count(const prlab::SimpleGraph& g) {
    int e = g.edge_count();
    long long count = 0;
    for (long long mask = 0; mask < (1LL << e); ++mask) {
        bool disjoint = true;
        for (int s = 0; s < e && disjoint; ++s) {
            if (!(mask >> s & 1)) continue;
            auto [a, b] = g.edges[s];
            for (int t = s + 1; t < e && disjoint; ++t) {
                if (!(mask >> t & 1)) continue;
                auto [c, d] = g.edges[t];
                if (a == c || a == d || b == c || b == d) disjoint = false;
            }
        }
        if (disjoint) ++count;
    }
    return count;
}

// ex(n, family) by scanning all 2^C(n,2) graphs; usable through n = 5.
// Ties go to the lexicographically smallest edge-index set.
inline int brute_force_ex(int n, const std::vector<prlab::SimpleGraph>& family,
                          prlab::SimpleGraph* witness_out = nullptr) {
    int m = prlab::pair_count(n);
    int best = -1;
    std::vector<int> best_idx;
    std::vector<prlab::VertexPair> all;
    for (int e = 0; e < m; ++e) all.push_back(prlab::edge_of_index(e, n));
    for (long long mask = 0; mask < (1LL << m); ++mask) {
        int count = __builtin_popcountll(mask);
        if (count < best) continue;
        std::vector<int> idx;
        std::vector<prlab::VertexPair> edges;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                idx.push_back(e);
                edges.push_back(all[e]);
            }
        if (count == best && !(idx < best_idx)) continue;
        auto host = prlab::SimpleGraph::from_edges(n, edges);
        bool free = true;
        for (const auto& f : family)
            if (prlab::is_subgraph(f, host)) { free = false; break; }
        if (free) {
            best = count;
            best_idx = idx;
            if (witness_out) *witness_out = host;
        }
    }
    return best;
}

// Uniformly random relabeling of a graph.
inline prlab::SimpleGraph relabeled(const prlab::SimpleGraph& g, std::mt19937& rng) {
    std::vector<int> perm(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<prlab::VertexPair> edges;
    for (auto [i, j] : g.edges) edges.emplace_back(perm[i], perm[j]);
    return prlab::SimpleGraph::from_edges(g.vertex_count, std::move(edges));
}

// Random (normalized) coloring of K_n with roughly `spread` colors.
inline prlab::EdgeColoring random_coloring(int n, int spread, std::mt19937& rng) {
    int m = prlab::pair_count(n);
    std::uniform_int_distribution<int> dist(0, std::max(1, spread) - 1);
    std::vector<int> raw(m);
    for (int& c : raw) c = dist(rng);
    return prlab::EdgeColoring::from_colors(n, std::move(raw));
}

} // namespace oracle
