#include "prlab/turan.hpp"

#include <algorithm>
#include <stdexcept>

#include "prlab/errors.hpp"
#include "prlab/iso.hpp"

namespace prlab {

namespace {

struct TuranSearch {
    int n, m;
    std::vector<SubgraphSearcher> searchers;
    std::vector<uint32_t> adj;
    std::vector<VertexPair> included;
    std::vector<VertexPair> all_edges;
    int best = -1;
    std::vector<VertexPair> best_edges;

    // Include-first DFS in colex edge order. The first maximizer found is the
    // lexicographically smallest one, and strict-improvement updates keep it.
    void rec(int idx) {
        int count = static_cast<int>(included.size());
        if (count + (m - idx) <= best) return; // cannot beat the incumbent
        if (idx == m) {
            best = count;
            best_edges = included;
            return;
        }
        auto [u, v] = all_edges[idx];
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
        bool creates = false;
        for (const auto& s : searchers)
            if (s.contains_through(adj, n, u, v)) { creates = true; break; }
        if (!creates) {
            included.push_back(all_edges[idx]);
            rec(idx + 1);
            included.pop_back();
        }
        adj[u] &= ~(1u << v);
        adj[v] &= ~(1u << u);
        rec(idx + 1);
    }
};

} // namespace

TuranResult ex_exact(int n, const GraphFamily& family) {
    if (n > kTuranVertexCap)
        throw ResourceLimitError("ex_exact: n exceeds the exhaustive-search cap of " +
                                 std::to_string(kTuranVertexCap));
    if (n < 0) throw std::invalid_argument("ex_exact: negative n");

    // Keep only minimal members that can occur at all; forbidding a graph
    // whose subgraph is also forbidden changes nothing.
    std::vector<SimpleGraph> active;
    for (const auto& f : family.members) {
        if (f.vertex_count > n) continue;
        if (f.edges.empty())
            throw std::invalid_argument("ex_exact: edgeless family member forbids everything");
        bool redundant = false;
        for (const auto& g : family.members)
            if (&g != &f && is_subgraph(g, f) && !isomorphic(g, f)) { redundant = true; break; }
        if (!redundant) active.push_back(f);
    }

    TuranSearch search;
    search.n = n;
    search.m = pair_count(n);
    for (auto& f : active) search.searchers.emplace_back(f);
    search.adj.assign(std::max(n, 1), 0);
    for (int e = 0; e < search.m; ++e) search.all_edges.push_back(edge_of_index(e, n));
    search.rec(0);

    TuranResult out;
    out.n = n;
    out.family = family;
    out.value = search.best;
    out.witness = SimpleGraph::from_edges(n, search.best_edges);
    return out;
}

int subchromatic(const GraphFamily& family) {
    if (family.empty()) throw std::invalid_argument("subchromatic: empty family");
    int best = -1;
    for (const auto& f : family.members) {
        int chi = chromatic_number(f);
        if (best == -1 || chi < best) best = chi;
    }
    return best - 1;
}

ErdosGallaiReport erdos_gallai_check(int n, int r) {
    if (r < 2 || r > n) throw std::invalid_argument("erdos_gallai_check: need 2 <= r <= n");

    ErdosGallaiReport rep;
    rep.n = n;
    rep.r = r;

    GraphFamily paths{{SimpleGraph::path(r)}};
    rep.path_ex = ex_exact(n, paths).value;
    rep.path_bound = (r - 2) / 2.0 * n;
    rep.path_holds = rep.path_ex <= rep.path_bound;
    rep.path_slack = rep.path_bound - rep.path_ex;

    GraphFamily long_cycles;
    for (int j = r + 1; j <= n; ++j) long_cycles.members.push_back(SimpleGraph::cycle(j));
    rep.long_cycle_ex = ex_exact(n, long_cycles).value;
    rep.cycle_bound = r * (n - 1) / 2.0;
    rep.cycle_holds = rep.long_cycle_ex <= rep.cycle_bound;
    rep.cycle_slack = rep.cycle_bound - rep.long_cycle_ex;
    return rep;
}

} // namespace prlab
