#pragma once

#include <string>
#include <vector>

#include "prlab/graph.hpp"

namespace prlab {

// Exact isomorphism utilities. All of these enumerate vertex permutations
// (restricted to compatibility classes), so they carry a hard size cap.
inline constexpr int kIsoVertexCap = 16;

/// True iff an injective vertex map carries every pattern edge to a host
/// edge (ordinary subgraph containment, not induced).
bool is_subgraph(const SimpleGraph& pattern, const SimpleGraph& host);

/// Exact chromatic number by iterated k-colorability. vertex_count <= 16.
int chromatic_number(const SimpleGraph& g);

/// Isomorphism-invariant byte string: equal iff graphs are isomorphic.
/// Brute force over degree-compatible vertex permutations; vertex_count <= 16.
std::string canonical_form(const SimpleGraph& g);

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// All automorphisms of g as permutation arrays (identity included).
std::vector<std::vector<int>> automorphisms(const SimpleGraph& g);

/// One representative per automorphism orbit of ordered edges (a,b); falls
/// back to every ordered edge when the group is too large to enumerate.
/// Probing a pattern through a fixed host edge only needs these.
std::vector<std::pair<int, int>> ordered_edge_orbit_reps(const SimpleGraph& g);

/// Placement order for backtracking searches: the seed vertices, then
/// repeatedly the unplaced vertex touching the most placed ones (ties:
/// higher degree, then smaller label).
std::vector<int> greedy_placement_order(const SimpleGraph& g, std::vector<int> seeds);

// Preprocessed pattern for repeated subgraph queries against a growing host.
// Anchors are representatives of the automorphism orbits of ordered pattern
// edges; an embedding exists through a given host edge iff one exists with
// some anchor mapped onto it.
class SubgraphSearcher {
public:
    explicit SubgraphSearcher(SimpleGraph pattern);

    const SimpleGraph& pattern() const { return pattern_; }

    /// Does `host_adj` (bitset rows, host_n <= 32) contain the pattern at all?
    bool contains(const std::vector<uint32_t>& host_adj, int host_n) const;

    /// Does it contain the pattern through the host edge (u,v)?
    bool contains_through(const std::vector<uint32_t>& host_adj, int host_n,
                          int u, int v) const;

private:
    struct Anchor {
        int a, b;                     // anchored ordered pattern edge
        std::vector<int> order;       // placement order, order[0]=a, order[1]=b
        // for order[t], t >= 2: pattern neighbors already placed, as positions
        std::vector<std::vector<int>> placed_neighbors;
    };

    bool extend(const Anchor& anchor, const std::vector<uint32_t>& host_adj,
                int host_n, std::vector<int>& image, uint32_t used, size_t t) const;

    SimpleGraph pattern_;
    std::vector<uint32_t> pattern_adj_;
    std::vector<Anchor> anchors_;
};

} // namespace prlab
