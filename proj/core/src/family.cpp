#include "prlab/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "prlab/iso.hpp"

namespace prlab {

std::vector<Matching> enumerate_matchings(const SimpleGraph& g) {
    std::vector<Matching> out;
    std::vector<uint32_t> covered; // vertex set of each matching so far
    out.push_back({});
    covered.push_back(0);
    for (auto [i, j] : g.edges) {
        uint32_t e_bits = (1u << i) | (1u << j);
        size_t existing = out.size();
        for (size_t t = 0; t < existing; ++t) {
            if (covered[t] & e_bits) continue;
            Matching extended = out[t];
            extended.edges.emplace_back(i, j);
            out.push_back(std::move(extended));
            covered.push_back(covered[t] | e_bits);
        }
    }
    return out;
}

GraphFamily reduced_family(const SimpleGraph& g, bool minimal_only) {
    if (g.edges.empty())
        throw std::invalid_argument("reduced_family: pattern has no edges");

    std::vector<SimpleGraph> members;
    std::vector<std::string> canon;
    for (const auto& m : enumerate_matchings(g)) {
        std::vector<VertexPair> kept;
        for (auto e : g.edges)
            if (std::find(m.edges.begin(), m.edges.end(), e) == m.edges.end())
                kept.push_back(e);
        if (kept.empty()) continue; // deleting every edge leaves nothing to forbid
        auto candidate = SimpleGraph::from_edges(g.vertex_count, std::move(kept))
                             .without_isolated_vertices();
        auto form = canonical_form(candidate);
        if (std::find(canon.begin(), canon.end(), form) != canon.end()) continue;
        members.push_back(std::move(candidate));
        canon.push_back(std::move(form));
    }

    if (minimal_only) {
        std::vector<SimpleGraph> minimal;
        for (size_t a = 0; a < members.size(); ++a) {
            bool contains_other = false;
            for (size_t b = 0; b < members.size() && !contains_other; ++b)
                if (a != b && is_subgraph(members[b], members[a])) contains_other = true;
            if (!contains_other) minimal.push_back(members[a]);
        }
        members = std::move(minimal);
    }

    std::sort(members.begin(), members.end(), [](const SimpleGraph& a, const SimpleGraph& b) {
        if (a.vertex_count != b.vertex_count) return a.vertex_count < b.vertex_count;
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return canonical_form(a) < canonical_form(b);
    });
    return GraphFamily{std::move(members)};
}

} // namespace prlab
