#include "prlab/iso.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <numeric>
#include <stdexcept>

#include "prlab/errors.hpp"

namespace prlab {

namespace {

void check_cap(const SimpleGraph& g, const char* who) {
    if (g.vertex_count > kIsoVertexCap)
        throw ResourceLimitError(std::string(who) + ": graph exceeds the " +
                                 std::to_string(kIsoVertexCap) + "-vertex exhaustive cap");
}

// Isomorphism-invariant vertex classes: (degree, sorted neighbor degrees),
// classes sorted by that key. Vertices of one class are interchangeable as
// far as the invariant can tell.
std::vector<std::vector<int>> invariant_classes(const SimpleGraph& g) {
    auto deg = g.degrees();
    auto adj = g.adjacency_bits();
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> buckets;
    for (int v = 0; v < g.vertex_count; ++v) {
        std::vector<int> nd;
        for (int u = 0; u < g.vertex_count; ++u)
            if (adj[v] >> u & 1) nd.push_back(deg[u]);
        std::sort(nd.begin(), nd.end());
        buckets[{deg[v], std::move(nd)}].push_back(v);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [key, members] : buckets) classes.push_back(std::move(members));
    return classes;
}

// u and v are twins when swapping them is an automorphism: equal adjacency
// rows once the uv bit is masked out.
bool twins(const std::vector<uint32_t>& adj, int u, int v) {
    uint32_t mask = ~((1u << u) | (1u << v));
    return (adj[u] & mask) == (adj[v] & mask);
}

struct CanonState {
    const std::vector<uint32_t>* adj;
    int n;
    std::vector<int> class_of_position; // which class fills each position
    std::vector<std::vector<int>> classes;
    std::vector<int> ordering;  // position -> vertex
    std::vector<uint8_t> used;
    std::vector<uint8_t> bits;      // current bit prefix, one byte per pair
    std::vector<uint8_t> best;      // best (smallest) complete bit string
    bool have_best = false;
};

// Depth-first minimization of the positionwise adjacency bit string. Placing
// position p decides the pairs (0,p)..(p-1,p), a contiguous colex block, so
// prefixes compare cheaply. Candidates are limited to the class assigned to
// the position, and only one of any set of twins is tried.
void canon_dfs(CanonState& st, int p, int bit_len) {
    if (p == st.n) {
        if (!st.have_best || std::lexicographical_compare(st.bits.begin(), st.bits.end(),
                                                          st.best.begin(), st.best.end())) {
            st.best = st.bits;
            st.have_best = true;
        }
        return;
    }
    const auto& cls = st.classes[st.class_of_position[p]];
    std::vector<int> tried;
    for (int v : cls) {
        if (st.used[v]) continue;
        bool dup = false;
        for (int w : tried)
            if (twins(*st.adj, v, w)) { dup = true; break; }
        if (dup) continue;
        tried.push_back(v);

        for (int q = 0; q < p; ++q)
            st.bits[bit_len + q] = static_cast<uint8_t>((*st.adj)[st.ordering[q]] >> v & 1);
        if (st.have_best) {
            // prune when the extended prefix already exceeds the best
            int cmp = std::memcmp(st.bits.data(), st.best.data(), bit_len + p);
            if (cmp > 0) continue;
        }
        st.ordering[p] = v;
        st.used[v] = 1;
        canon_dfs(st, p + 1, bit_len + p);
        st.used[v] = 0;
    }
}

} // namespace

std::string canonical_form(const SimpleGraph& g) {
    check_cap(g, "canonical_form");
    int n = g.vertex_count;
    std::string out;
    out.push_back(static_cast<char>(n));
    if (n == 0) return out;
    auto adj = g.adjacency_bits();

    CanonState st;
    st.adj = &adj;
    st.n = n;
    st.classes = invariant_classes(g);
    for (size_t c = 0; c < st.classes.size(); ++c)
        for (size_t k = 0; k < st.classes[c].size(); ++k)
            st.class_of_position.push_back(static_cast<int>(c));
    st.ordering.assign(n, -1);
    st.used.assign(n, 0);
    st.bits.assign(pair_count(n), 0);
    canon_dfs(st, 0, 0);

    // pack the winning bit string, 8 pairs per byte
    uint8_t acc = 0;
    int filled = 0;
    for (int t = 0; t < pair_count(n); ++t) {
        acc = static_cast<uint8_t>(acc << 1 | st.best[t]);
        if (++filled == 8) {
            out.push_back(static_cast<char>(acc));
            acc = 0;
            filled = 0;
        }
    }
    if (filled) out.push_back(static_cast<char>(acc << (8 - filled)));
    return out;
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count != b.vertex_count || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

bool aut_dfs(const std::vector<uint32_t>& adj, int n,
             const std::vector<int>& class_id, std::vector<int>& perm,
             std::vector<uint8_t>& used, int v, size_t cap,
             std::vector<std::vector<int>>& out) {
    if (v == n) {
        out.push_back(perm);
        return out.size() <= cap;
    }
    for (int img = 0; img < n; ++img) {
        if (used[img] || class_id[img] != class_id[v]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if ((adj[v] >> u & 1) != (adj[perm[u]] >> img & 1)) ok = false;
        if (!ok) continue;
        perm[v] = img;
        used[img] = 1;
        bool keep_going = aut_dfs(adj, n, class_id, perm, used, v + 1, cap, out);
        used[img] = 0;
        if (!keep_going) return false;
    }
    return true;
}

// All automorphisms, or nullopt once more than `cap` were found.
std::optional<std::vector<std::vector<int>>> automorphisms_capped(const SimpleGraph& g,
                                                                  size_t cap) {
    int n = g.vertex_count;
    if (n == 0) return std::vector<std::vector<int>>{{}};
    auto adj = g.adjacency_bits();
    std::vector<int> class_id(n, 0);
    auto classes = invariant_classes(g);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) class_id[v] = static_cast<int>(c);
    std::vector<int> perm(n, -1);
    std::vector<uint8_t> used(n, 0);
    std::vector<std::vector<int>> out;
    if (!aut_dfs(adj, n, class_id, perm, used, 0, cap, out)) return std::nullopt;
    return out;
}

} // namespace

std::vector<std::vector<int>> automorphisms(const SimpleGraph& g) {
    check_cap(g, "automorphisms");
    auto res = automorphisms_capped(g, 1'000'000);
    if (!res)
        throw ResourceLimitError("automorphisms: group too large to enumerate");
    return *res;
}

// Seeds first, then repeatedly the unplaced vertex with the most placed
// neighbors (ties: higher degree, then smaller label). Vertices in other
// components enter when nothing touches the placed set.
std::vector<int> greedy_placement_order(const SimpleGraph& g, std::vector<int> seeds) {
    auto adj = g.adjacency_bits();
    auto deg = g.degrees();
    int n = g.vertex_count;
    std::vector<uint8_t> placed(n, 0);
    std::vector<int> order;
    for (int s : seeds) {
        placed[s] = 1;
        order.push_back(s);
    }
    while (static_cast<int>(order.size()) < n) {
        int best = -1, best_links = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order) links += adj[v] >> u & 1;
            if (links > best_links ||
                (links == best_links && best >= 0 &&
                 (deg[v] > deg[best] || (deg[v] == deg[best] && v < best)))) {
                best = v;
                best_links = links;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

namespace {

std::vector<std::vector<int>> placed_neighbor_table(const SimpleGraph& g,
                                                    const std::vector<int>& order) {
    auto adj = g.adjacency_bits();
    std::vector<int> pos(g.vertex_count, -1);
    for (size_t t = 0; t < order.size(); ++t) pos[order[t]] = static_cast<int>(t);
    std::vector<std::vector<int>> table(order.size());
    for (size_t t = 0; t < order.size(); ++t) {
        for (int u = 0; u < g.vertex_count; ++u)
            if ((adj[order[t]] >> u & 1) && pos[u] < static_cast<int>(t))
                table[t].push_back(pos[u]);
    }
    return table;
}

} // namespace

// Ordered-edge orbit representatives under the automorphism group; all
// ordered edges when the group is too large to enumerate.
std::vector<std::pair<int, int>> ordered_edge_orbit_reps(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> ordered;
    for (auto [i, j] : g.edges) {
        ordered.emplace_back(i, j);
        ordered.emplace_back(j, i);
    }
    auto auts = automorphisms_capped(g, 20'000);
    if (!auts) return ordered;
    std::vector<std::pair<int, int>> reps;
    std::vector<uint8_t> seen(ordered.size(), 0);
    auto index_of = [&](int a, int b) {
        for (size_t t = 0; t < ordered.size(); ++t)
            if (ordered[t].first == a && ordered[t].second == b) return t;
        return ordered.size();
    };
    for (size_t t = 0; t < ordered.size(); ++t) {
        if (seen[t]) continue;
        reps.push_back(ordered[t]);
        for (const auto& sigma : *auts) {
            size_t img = index_of(sigma[ordered[t].first], sigma[ordered[t].second]);
            seen[img] = 1;
        }
    }
    return reps;
}

SubgraphSearcher::SubgraphSearcher(SimpleGraph pattern) : pattern_(std::move(pattern)) {
    pattern_adj_ = pattern_.adjacency_bits();
    for (auto [a, b] : ordered_edge_orbit_reps(pattern_)) {
        Anchor anc;
        anc.a = a;
        anc.b = b;
        anc.order = greedy_placement_order(pattern_, {a, b});
        anc.placed_neighbors = placed_neighbor_table(pattern_, anc.order);
        anchors_.push_back(std::move(anc));
    }
}

bool SubgraphSearcher::extend(const Anchor& anchor, const std::vector<uint32_t>& host_adj,
                              int host_n, std::vector<int>& image, uint32_t used,
                              size_t t) const {
    if (t == anchor.order.size()) return true;
    for (int w = 0; w < host_n; ++w) {
        if (used >> w & 1) continue;
        bool ok = true;
        for (int q : anchor.placed_neighbors[t])
            if (!(host_adj[image[q]] >> w & 1)) { ok = false; break; }
        if (!ok) continue;
        image[t] = w;
        if (extend(anchor, host_adj, host_n, image, used | (1u << w), t + 1)) return true;
    }
    return false;
}

bool SubgraphSearcher::contains_through(const std::vector<uint32_t>& host_adj, int host_n,
                                        int u, int v) const {
    if (pattern_.vertex_count > host_n) return false;
    std::vector<int> image(pattern_.vertex_count);
    for (const auto& anchor : anchors_) {
        image[0] = u;
        image[1] = v;
        if (extend(anchor, host_adj, host_n, image, (1u << u) | (1u << v), 2)) return true;
    }
    return false;
}

bool SubgraphSearcher::contains(const std::vector<uint32_t>& host_adj, int host_n) const {
    if (pattern_.vertex_count > host_n) return false;
    if (pattern_.edges.empty()) return true;
    // Any embedding routes some pattern edge through some host edge, and the
    // anchor reps cover both orientations, so one probe per host edge is enough.
    for (int v = 1; v < host_n; ++v)
        for (int u = 0; u < v; ++u)
            if ((host_adj[u] >> v & 1) && contains_through(host_adj, host_n, u, v))
                return true;
    return false;
}

bool is_subgraph(const SimpleGraph& pattern, const SimpleGraph& host) {
    if (pattern.vertex_count > host.vertex_count) return false;
    if (pattern.edges.empty()) return true;
    if (pattern.edge_count() > host.edge_count()) return false;
    SubgraphSearcher searcher(pattern);
    return searcher.contains(host.adjacency_bits(), host.vertex_count);
}

namespace {

bool colorable_dfs(const std::vector<uint32_t>& adj, const std::vector<int>& order,
                   std::vector<int>& color, int k, size_t t, int used) {
    if (t == order.size()) return true;
    int v = order[t];
    int limit = std::min(k, used + 1); // a fresh color only as the next unused one
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (size_t q = 0; q < t && ok; ++q)
            if ((adj[v] >> order[q] & 1) && color[order[q]] == c) ok = false;
        if (!ok) continue;
        color[v] = c;
        if (colorable_dfs(adj, order, color, k, t + 1, std::max(used, c + 1))) return true;
    }
    return false;
}

} // namespace

int chromatic_number(const SimpleGraph& g) {
    check_cap(g, "chromatic_number");
    if (g.vertex_count == 0) return 0;
    if (g.edges.empty()) return 1;
    auto adj = g.adjacency_bits();
    std::vector<int> order(g.vertex_count);
    std::iota(order.begin(), order.end(), 0);
    auto deg = g.degrees();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    for (int k = 2;; ++k) {
        std::vector<int> color(g.vertex_count, -1);
        if (colorable_dfs(adj, order, color, k, 0, 0)) return k;
    }
}

} // namespace prlab
