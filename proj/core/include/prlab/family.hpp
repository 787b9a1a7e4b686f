#pragma once

#include <vector>

#include "prlab/graph.hpp"

namespace prlab {

// A set of pairwise vertex-disjoint edges of some host graph.
struct Matching {
    std::vector<VertexPair> edges;
};

// A finite set of pairwise non-isomorphic graphs with minimum degree >= 1,
// used as the forbidden set of a Turan problem.
struct GraphFamily {
    std::vector<SimpleGraph> members;

    bool empty() const { return members.empty(); }
    size_t size() const { return members.size(); }
};

/// All matchings of g, the empty matching included, each exactly once.
/// Order: by extension — the empty matching first, then every matching
/// obtained by appending a colex-later edge to an earlier-listed one.
std::vector<Matching> enumerate_matchings(const SimpleGraph& g);

/// The matching-deleted family {g - M : M a matching of g}: isolated
/// vertices dropped, edgeless results skipped, members deduplicated up to
/// isomorphism and sorted by (vertex count, edge count, canonical form).
/// With minimal_only, members containing another member as a subgraph are
/// removed; this leaves every Turan number ex(n, .) unchanged, because a
/// graph avoiding the smaller member avoids the larger one too.
/// Throws std::invalid_argument if g has no edges.
GraphFamily reduced_family(const SimpleGraph& g, bool minimal_only);

} // namespace prlab
