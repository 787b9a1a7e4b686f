#include "prlab/coloring.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "prlab/errors.hpp"
#include "prlab/iso.hpp"

namespace prlab {

namespace {

inline int pair_index(int i, int j) {
    return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j;
}

} // namespace

EdgeColoring EdgeColoring::from_colors(int n, std::vector<int> raw) {
    int m = pair_count(n);
    if (static_cast<int>(raw.size()) != m)
        throw std::invalid_argument("EdgeColoring: expected one color per edge of K_n");
    std::vector<int> relabel;
    int next = 0;
    for (int& c : raw) {
        if (c < 0) throw std::invalid_argument("EdgeColoring: negative color");
        if (c >= static_cast<int>(relabel.size())) relabel.resize(c + 1, -1);
        if (relabel[c] == -1) relabel[c] = next++;
        c = relabel[c];
    }
    EdgeColoring col;
    col.n = n;
    col.color_count = next;
    col.colors = std::move(raw);
    return col;
}

EdgeColoring EdgeColoring::rainbow(int n) {
    std::vector<int> raw(pair_count(n));
    std::iota(raw.begin(), raw.end(), 0);
    return from_colors(n, std::move(raw));
}

EdgeColoring EdgeColoring::monochromatic(int n) {
    return from_colors(n, std::vector<int>(pair_count(n), 0));
}

int EdgeColoring::color(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
        throw std::invalid_argument("EdgeColoring::color: bad vertex pair");
    return colors[pair_index(i, j)];
}

bool EdgeColoring::is_normalized() const {
    int next = 0;
    for (int c : colors) {
        if (c > next) return false;
        if (c == next) ++next;
    }
    return next == color_count;
}

std::set<int> color_set(const EdgeColoring& col, const std::vector<int>& edge_subset) {
    std::set<int> out;
    int m = pair_count(col.n);
    for (int e : edge_subset) {
        if (e < 0 || e >= m) throw std::invalid_argument("color_set: edge index out of range");
        out.insert(col.colors[e]);
    }
    return out;
}

bool is_properly_colored(const EdgeColoring& col, const Embedding& emb) {
    const auto& g = emb.pattern;
    if (static_cast<int>(emb.map.size()) != g.vertex_count)
        throw std::invalid_argument("is_properly_colored: map size mismatch");
    for (size_t s = 0; s < g.edges.size(); ++s) {
        auto [a, b] = g.edges[s];
        int ca = col.color(emb.map[a], emb.map[b]);
        for (size_t t = s + 1; t < g.edges.size(); ++t) {
            auto [c, d] = g.edges[t];
            if (a != c && a != d && b != c && b != d) continue; // not adjacent
            if (ca == col.color(emb.map[c], emb.map[d])) return false;
        }
    }
    return true;
}

bool is_rainbow(const EdgeColoring& col, const Embedding& emb) {
    const auto& g = emb.pattern;
    std::set<int> seen;
    for (auto [a, b] : g.edges)
        if (!seen.insert(col.color(emb.map[a], emb.map[b])).second) return false;
    return true;
}

namespace {

// Plain (unanchored) copy search. Pattern vertices are placed in a fixed
// order: highest degree first, ties by smaller label, preferring vertices
// that already touch the placed set so decided edges accumulate early.
struct PlainSearch {
    const EdgeColoring* col;
    const SimpleGraph* pattern;
    CopyMode mode;
    std::vector<uint32_t> pat_adj;
    std::vector<int> order;
    std::vector<std::vector<int>> placed_neighbors; // pattern vertices, per step
    std::vector<int> image;                         // pattern vertex -> host, -1 unset
    std::vector<int> used_colors;                   // rainbow mode
    uint32_t used_hosts = 0;

    bool place(size_t t) {
        if (t == order.size()) return true;
        int pv = order[t];
        for (int w = 0; w < col->n; ++w) {
            if (used_hosts >> w & 1) continue;
            std::array<int, 32> step_colors{};
            int step_count = 0;
            bool ok = true;
            for (int r : placed_neighbors[t]) {
                int c = col->colors[pair_index(w, image[r])];
                if (mode == CopyMode::rainbow) {
                    if (std::find(used_colors.begin(), used_colors.end(), c) !=
                        used_colors.end()) { ok = false; break; }
                    for (int s = 0; s < step_count; ++s)
                        if (step_colors[s] == c) { ok = false; break; }
                } else {
                    // edges meeting at pv this step must be pairwise distinct
                    for (int s = 0; s < step_count && ok; ++s)
                        if (step_colors[s] == c) ok = false;
                    // and distinct from decided edges meeting at r
                    for (int x = 0; x < pattern->vertex_count && ok; ++x) {
                        if (x == pv || image[x] < 0) continue;
                        if (!(pat_adj[r] >> x & 1)) continue;
                        if (col->colors[pair_index(image[r], image[x])] == c) ok = false;
                    }
                }
                if (!ok) break;
                step_colors[step_count++] = c;
            }
            if (!ok) continue;
            image[pv] = w;
            used_hosts |= 1u << w;
            size_t mark = used_colors.size();
            if (mode == CopyMode::rainbow)
                used_colors.insert(used_colors.end(), step_colors.begin(),
                                   step_colors.begin() + step_count);
            if (place(t + 1)) return true;
            used_colors.resize(mark);
            used_hosts &= ~(1u << w);
            image[pv] = -1;
        }
        return false;
    }
};

std::vector<int> spec_placement_order(const SimpleGraph& g) {
    auto deg = g.degrees();
    int n = g.vertex_count;
    auto adj = g.adjacency_bits();
    std::vector<uint8_t> placed(n, 0);
    std::vector<int> order;
    while (static_cast<int>(order.size()) < n) {
        int best = -1;
        bool best_touches = false;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            bool touches = false;
            for (int u : order)
                if (adj[v] >> u & 1) { touches = true; break; }
            if (best == -1 || (touches && !best_touches) ||
                (touches == best_touches &&
                 (deg[v] > deg[best]))) {
                best = v;
                best_touches = touches;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

} // namespace

std::optional<Embedding> find_copy(const EdgeColoring& col, const SimpleGraph& pattern,
                                   CopyMode mode) {
    if (pattern.vertex_count > col.n) return std::nullopt;
    if (pattern.vertex_count > 32)
        throw std::invalid_argument("find_copy: pattern too large");
    PlainSearch s;
    s.col = &col;
    s.pattern = &pattern;
    s.mode = mode;
    s.pat_adj = pattern.adjacency_bits();
    s.order = spec_placement_order(pattern);
    s.image.assign(pattern.vertex_count, -1);
    s.placed_neighbors.resize(s.order.size());
    for (size_t t = 0; t < s.order.size(); ++t)
        for (size_t q = 0; q < t; ++q)
            if (s.pat_adj[s.order[t]] >> s.order[q] & 1)
                s.placed_neighbors[t].push_back(s.order[q]);
    if (!s.place(0)) return std::nullopt;
    return Embedding{pattern, s.image};
}

std::optional<Embedding> find_pc_embedding(const EdgeColoring& col, const SimpleGraph& pattern) {
    return find_copy(col, pattern, CopyMode::properly_colored);
}

std::optional<Embedding> find_rainbow_embedding(const EdgeColoring& col,
                                                const SimpleGraph& pattern) {
    return find_copy(col, pattern, CopyMode::rainbow);
}

bool contains_rainbow(const EdgeColoring& col, const SimpleGraph& pattern) {
    return find_rainbow_embedding(col, pattern).has_value();
}

int starred_degree(const EdgeColoring& col, int v) {
    if (v < 0 || v >= col.n) throw std::invalid_argument("starred_degree: vertex out of range");
    // For each color, intersect the endpoint sets of its edges; the color is
    // starred exactly at the vertices that survive.
    std::vector<std::array<int, 2>> common(col.color_count, {-1, -1});
    std::vector<uint8_t> seen(col.color_count, 0);
    int m = pair_count(col.n);
    for (int e = 0; e < m; ++e) {
        int c = col.colors[e];
        auto [i, j] = edge_of_index(e, col.n);
        if (!seen[c]) {
            seen[c] = 1;
            common[c] = {i, j};
        } else {
            auto& cm = common[c];
            for (int s = 0; s < 2; ++s)
                if (cm[s] != -1 && cm[s] != i && cm[s] != j) cm[s] = -1;
        }
    }
    int count = 0;
    for (int c = 0; c < col.color_count; ++c)
        if (common[c][0] == v || common[c][1] == v) ++count;
    return count;
}

SimpleGraph representing_subgraph(const EdgeColoring& col) {
    std::vector<VertexPair> edges;
    std::vector<uint8_t> taken(col.color_count, 0);
    int m = pair_count(col.n);
    for (int e = 0; e < m; ++e) {
        int c = col.colors[e];
        if (taken[c]) continue;
        taken[c] = 1;
        edges.push_back(edge_of_index(e, col.n));
    }
    return SimpleGraph::from_edges(col.n, std::move(edges));
}

EdgeColoring read_coloring(std::istream& in, std::vector<std::string>* warnings) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError("coloring file: empty file", 1);
    ++lineno;
    std::istringstream head(line);
    int n = -1, k = -1;
    if (!(head >> n >> k) || n < 0 || k < 0)
        throw ParseError("coloring file: expected 'n k'", lineno);
    int m = pair_count(n);
    std::vector<int> raw(m, -1);
    bool normalized_input = true;
    int next_new = 0;
    for (int e = 0; e < m; ++e) {
        if (!std::getline(in, line))
            throw ParseError("coloring file: expected " + std::to_string(m) + " edge lines",
                             lineno + 1);
        ++lineno;
        std::istringstream row(line);
        int i = -1, j = -1, c = -1;
        if (!(row >> i >> j >> c))
            throw ParseError("coloring file: expected 'i j c'", lineno);
        auto expect = edge_of_index(e, n);
        if (i > j) std::swap(i, j);
        if (i != expect.first || j != expect.second)
            throw ParseError("coloring file: expected edge " + std::to_string(expect.first) +
                                 " " + std::to_string(expect.second) + " at this line (colex order)",
                             lineno);
        if (c < 0) throw ParseError("coloring file: negative color", lineno);
        if (c > next_new) normalized_input = false;
        else if (c == next_new) ++next_new;
        raw[e] = c;
    }
    auto col = EdgeColoring::from_colors(n, std::move(raw));
    if (warnings) {
        if (!normalized_input)
            warnings->push_back("coloring file: colors were not numbered by first appearance; renormalized");
        if (col.color_count != k)
            warnings->push_back("coloring file: header claims " + std::to_string(k) +
                                " colors but " + std::to_string(col.color_count) + " are used");
    }
    return col;
}

EdgeColoring read_coloring_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw ParseError("coloring file: cannot open '" + path + "'");
    return read_coloring(in, warnings);
}

void write_coloring(std::ostream& out, const EdgeColoring& col) {
    out << col.n << ' ' << col.color_count << '\n';
    int m = pair_count(col.n);
    for (int e = 0; e < m; ++e) {
        auto [i, j] = edge_of_index(e, col.n);
        out << i << ' ' << j << ' ' << col.colors[e] << '\n';
    }
}

void write_coloring_file(const std::string& path, const EdgeColoring& col) {
    std::ofstream out(path);
    if (!out) throw ParseError("coloring file: cannot open '" + path + "' for writing");
    write_coloring(out, col);
}

// ---------------------------------------------------------------------------
// PatternDetector

struct PatternDetector::Scratch {
    std::array<int, 32> image;       // pattern vertex -> host vertex, -1 unset
    std::array<int, 128> colors;     // decided edge colors (rainbow mode)
    int color_count = 0;
    uint32_t used_hosts = 0;
    const ColoringPrefix* prefix = nullptr;
};

PatternDetector::PatternDetector(SimpleGraph pattern, CopyMode mode)
    : pattern_(std::move(pattern)), mode_(mode) {
    if (pattern_.vertex_count > 32 || pattern_.edge_count() > 127)
        throw std::invalid_argument("PatternDetector: pattern too large");
    pattern_adj_ = pattern_.adjacency_bits();
    for (auto [a, b] : ordered_edge_orbit_reps(pattern_)) {
        Anchor anc;
        anc.a = a;
        anc.b = b;
        auto order = greedy_placement_order(pattern_, {a, b});
        anc.order = order;
        anc.placed_neighbors.resize(order.size());
        std::vector<uint8_t> placed(pattern_.vertex_count, 0);
        for (size_t t = 0; t < order.size(); ++t) {
            for (int u = 0; u < pattern_.vertex_count; ++u)
                if (placed[u] && (pattern_adj_[order[t]] >> u & 1))
                    anc.placed_neighbors[t].push_back(u);
            placed[order[t]] = 1;
        }
        anchors_.push_back(std::move(anc));
    }
}

bool PatternDetector::extend(const Anchor& anchor, const ColoringPrefix& prefix,
                             Scratch& s, size_t t) const {
    if (t == anchor.order.size()) return true;
    int pv = anchor.order[t];
    const auto& neigh = anchor.placed_neighbors[t];
    bool rainbow = mode_ == CopyMode::rainbow;
    for (int w = 0; w < prefix.n; ++w) {
        if (s.used_hosts >> w & 1) continue;
        std::array<int, 32> step_colors;
        int step_count = 0;
        bool ok = true;
        for (int r : neigh) {
            int e = pair_index(w, s.image[r]);
            if (e >= prefix.prefix_len) { ok = false; break; }
            int c = prefix.colors[e];
            if (rainbow) {
                for (int q = 0; q < s.color_count; ++q)
                    if (s.colors[q] == c) { ok = false; break; }
                for (int q = 0; q < step_count && ok; ++q)
                    if (step_colors[q] == c) ok = false;
            } else {
                for (int q = 0; q < step_count && ok; ++q)
                    if (step_colors[q] == c) ok = false;
                for (int x = 0; ok && x < pattern_.vertex_count; ++x) {
                    if (x == pv || s.image[x] < 0) continue;
                    if (!(pattern_adj_[r] >> x & 1)) continue;
                    if (prefix.colors[pair_index(s.image[r], s.image[x])] == c) ok = false;
                }
            }
            if (!ok) break;
            step_colors[step_count++] = c;
        }
        if (!ok) continue;
        s.image[pv] = w;
        s.used_hosts |= 1u << w;
        int mark = s.color_count;
        if (rainbow)
            for (int q = 0; q < step_count; ++q) s.colors[s.color_count++] = step_colors[q];
        if (extend(anchor, prefix, s, t + 1)) return true;
        s.color_count = mark;
        s.used_hosts &= ~(1u << w);
        s.image[pv] = -1;
    }
    return false;
}

bool PatternDetector::copy_through(const ColoringPrefix& prefix, int e) const {
    if (pattern_.vertex_count > prefix.n) return false;
    if (e >= prefix.prefix_len)
        throw std::invalid_argument("copy_through: edge outside the colored prefix");
    auto [u, v] = edge_of_index(e, prefix.n);
    int anchor_color = prefix.colors[e];
    // The reps cover both orientations of every pattern edge, so anchoring
    // each at (u,v) alone reaches every embedding through this host edge.
    Scratch s;
    for (const auto& anchor : anchors_) {
        s.image.fill(-1);
        s.image[anchor.a] = u;
        s.image[anchor.b] = v;
        s.used_hosts = (1u << u) | (1u << v);
        s.color_count = 0;
        if (mode_ == CopyMode::rainbow) s.colors[s.color_count++] = anchor_color;
        if (extend(anchor, prefix, s, 2)) return true;
    }
    return false;
}

bool PatternDetector::copy_anywhere(const EdgeColoring& col) const {
    return find_copy(col, pattern_, mode_).has_value();
}

} // namespace prlab
