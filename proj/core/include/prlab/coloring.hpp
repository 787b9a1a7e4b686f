#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prlab/graph.hpp"

namespace prlab {

enum class CopyMode { properly_colored, rainbow };

// A surjective edge-coloring of K_n with colors 0..color_count-1, stored per
// colex edge index and kept normalized: the color of edge 0 is 0 and every
// later edge uses either an already-seen color or the smallest unused one.
struct EdgeColoring {
    int n = 0;
    int color_count = 0;
    std::vector<int> colors; // length C(n,2)

    /// Renumbers `raw` by first appearance in colex order and wraps it.
    static EdgeColoring from_colors(int n, std::vector<int> raw);
    static EdgeColoring rainbow(int n);
    static EdgeColoring monochromatic(int n);

    int color(int i, int j) const;
    int color_at(int edge) const { return colors[edge]; }
    bool is_normalized() const;
};

// An injective placement of a pattern into the host K_n.
struct Embedding {
    SimpleGraph pattern;
    std::vector<int> map; // pattern vertex -> host vertex
};

/// Distinct colors on the given edges (colex indices into col).
std::set<int> color_set(const EdgeColoring& col, const std::vector<int>& edge_subset);

/// True iff no two pattern edges sharing a vertex get equal image colors.
bool is_properly_colored(const EdgeColoring& col, const Embedding& emb);

/// True iff all pattern edges get pairwise distinct image colors.
bool is_rainbow(const EdgeColoring& col, const Embedding& emb);

/// Finds a properly colored copy of the pattern, or nullopt. Backtracking
/// over pattern vertices in a fixed order (descending degree, ties by
/// smaller label, restricted so every placed vertex after the first touches
/// an earlier one), pruning a partial map as soon as two already-decided
/// adjacent pattern edges collide in color. A pattern larger than the host
/// yields nullopt, never an error.
std::optional<Embedding> find_pc_embedding(const EdgeColoring& col, const SimpleGraph& pattern);

/// Rainbow analogue of find_pc_embedding.
std::optional<Embedding> find_rainbow_embedding(const EdgeColoring& col, const SimpleGraph& pattern);
bool contains_rainbow(const EdgeColoring& col, const SimpleGraph& pattern);

std::optional<Embedding> find_copy(const EdgeColoring& col, const SimpleGraph& pattern, CopyMode mode);

/// Number of colors a such that every edge colored a is incident to v.
/// A color whose class is one edge uv counts at both u and v; a class
/// forming a star with >= 2 edges counts only at its center.
int starred_degree(const EdgeColoring& col, int v);

/// Spanning subgraph keeping, for each color, its colex-smallest edge.
SimpleGraph representing_subgraph(const EdgeColoring& col);

// "pr-coloring v1" file format: line 1 "n k", then C(n,2) lines "i j c" in
// colex order, 0-based. Non-normalized colors are renormalized with a
// warning appended to `warnings` (when given); structural faults throw
// ParseError with the offending line number.
EdgeColoring read_coloring(std::istream& in, std::vector<std::string>* warnings = nullptr);
EdgeColoring read_coloring_file(const std::string& path, std::vector<std::string>* warnings = nullptr);
void write_coloring(std::ostream& out, const EdgeColoring& col);
void write_coloring_file(const std::string& path, const EdgeColoring& col);

// A coloring of the first `prefix_len` colex edges of K_n; what the solver
// hands to incremental detection.
struct ColoringPrefix {
    int n = 0;
    int prefix_len = 0;
    const int* colors = nullptr;
};

// Pattern preprocessed for repeated "did coloring edge e complete a copy?"
// queries. Anchors are automorphism-orbit representatives of ordered pattern
// edges, so each embedding is probed once per orbit instead of once per edge.
class PatternDetector {
public:
    PatternDetector(SimpleGraph pattern, CopyMode mode);

    const SimpleGraph& pattern() const { return pattern_; }
    CopyMode mode() const { return mode_; }

    /// Is there a forbidden copy using edge `e` with all edges inside the
    /// colored prefix? Precondition: the prefix without e had no copy.
    bool copy_through(const ColoringPrefix& prefix, int e) const;

    /// Full-coloring existence check (used for seeds and verification).
    bool copy_anywhere(const EdgeColoring& col) const;

private:
    struct Anchor {
        int a, b;
        std::vector<int> order;
        std::vector<std::vector<int>> placed_neighbors;
    };
    struct Scratch; // per-call state, lives on the caller's stack

    bool extend(const Anchor& anchor, const ColoringPrefix& prefix,
                Scratch& s, size_t t) const;

    SimpleGraph pattern_;
    CopyMode mode_;
    std::vector<uint32_t> pattern_adj_;
    std::vector<Anchor> anchors_;
};

} // namespace prlab
