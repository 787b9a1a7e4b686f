#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace prlab {

using VertexPair = std::pair<int, int>; // (i, j) with i < j

/// Number of edges of K_n, i.e. C(n,2).
int pair_count(int n);

/// Colex index of the unordered pair (i,j), 0 <= i < j < n:
/// (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) ...  The value is j(j-1)/2 + i.
/// Throws std::invalid_argument on i == j or out-of-range arguments.
int edge_index(int i, int j, int n);

/// Inverse of edge_index.
VertexPair edge_of_index(int index, int n);

// A small undirected simple graph: no loops, no parallel edges. The edge
// list is kept sorted in colex order (by (j,i) for i < j), which fixes
// iteration order everywhere downstream.
struct SimpleGraph {
    int vertex_count = 0;
    std::vector<VertexPair> edges;

    // Validates endpoints, rejects loops/duplicates, sorts into colex order.
    static SimpleGraph from_edges(int vertex_count, std::vector<VertexPair> edges);

    static SimpleGraph complete(int n);
    static SimpleGraph path(int l);   // P_l, vertices 0..l-1 in path order
    static SimpleGraph cycle(int k);  // C_k, vertices in cycle order
    static SimpleGraph complete_bipartite(int s, int t); // part A = first s labels

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int i, int j) const;
    std::vector<int> degrees() const;

    // Adjacency rows as bitsets; requires vertex_count <= 32.
    std::vector<uint32_t> adjacency_bits() const;

    // Copy with isolated vertices removed and the rest relabeled in order.
    SimpleGraph without_isolated_vertices() const;

    bool operator==(const SimpleGraph&) const = default;
};

/// Builds a named pattern. Grammar:
///   P<l> | C<k> | K<t> | K<s>,<t> | K4- | bull | C<k>+
/// with l >= 2, k >= 3, t >= 2, s,t >= 1. Labeling is fixed: path/cycle
/// vertices in order, bipartite part A first, the pendant vertex of C<k>+
/// last, "bull" = triangle {0,1,2} with pendants 3-0 and 4-1, and
/// "K4-" = K_4 minus its colex-largest edge (2,3).
/// Throws ParseError on an unknown token or a parameter below its minimum.
SimpleGraph pattern_from_catalog(const std::string& token);

// Pattern file format: first line "p <vertex_count> <edge_count>", then one
// "e i j" line per edge, 0-based. Duplicate edges and loops are rejected.
SimpleGraph read_pattern(std::istream& in);
SimpleGraph read_pattern_file(const std::string& path);
void write_pattern(std::ostream& out, const SimpleGraph& g);
void write_pattern_file(const std::string& path, const SimpleGraph& g);

// Shape tests used to pick applicable colorings and closed forms for a
// pattern given only as a graph. All ignore labeling.
bool is_path_graph(const SimpleGraph& g);             // P_l, l >= 2
bool is_cycle_graph(const SimpleGraph& g);            // C_k, k >= 3
bool is_complete_graph(const SimpleGraph& g);         // K_t, t >= 2
std::optional<std::pair<int, int>> complete_bipartite_parts(const SimpleGraph& g);

} // namespace prlab
