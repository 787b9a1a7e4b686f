#include "prlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "prlab/errors.hpp"

namespace prlab {

int pair_count(int n) {
    if (n < 0) throw std::invalid_argument("pair_count: negative n");
    return n * (n - 1) / 2;
}

int edge_index(int i, int j, int n) {
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw std::invalid_argument("edge_index: endpoint out of range");
    if (i == j) throw std::invalid_argument("edge_index: loop");
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

VertexPair edge_of_index(int index, int n) {
    if (index < 0 || index >= pair_count(n))
        throw std::invalid_argument("edge_of_index: index out of range");
    int j = 1;
    while ((j + 1) * j / 2 <= index) ++j;
    return {index - j * (j - 1) / 2, j};
}

namespace {

bool colex_less(const VertexPair& a, const VertexPair& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
}

} // namespace

SimpleGraph SimpleGraph::from_edges(int vertex_count, std::vector<VertexPair> edges) {
    if (vertex_count < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
    for (auto& [i, j] : edges) {
        if (i == j) throw std::invalid_argument("SimpleGraph: loop");
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= vertex_count)
            throw std::invalid_argument("SimpleGraph: endpoint out of range");
    }
    std::sort(edges.begin(), edges.end(), colex_less);
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("SimpleGraph: duplicate edge");
    SimpleGraph g;
    g.vertex_count = vertex_count;
    g.edges = std::move(edges);
    return g;
}

SimpleGraph SimpleGraph::complete(int n) {
    std::vector<VertexPair> e;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) e.emplace_back(i, j);
    return from_edges(n, std::move(e));
}

SimpleGraph SimpleGraph::path(int l) {
    if (l < 2) throw std::invalid_argument("path: need at least 2 vertices");
    std::vector<VertexPair> e;
    for (int i = 0; i + 1 < l; ++i) e.emplace_back(i, i + 1);
    return from_edges(l, std::move(e));
}

SimpleGraph SimpleGraph::cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<VertexPair> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, k - 1);
    return from_edges(k, std::move(e));
}

SimpleGraph SimpleGraph::complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("complete_bipartite: empty part");
    std::vector<VertexPair> e;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < t; ++b) e.emplace_back(a, s + b);
    return from_edges(s + t, std::move(e));
}

bool SimpleGraph::has_edge(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    VertexPair p{i, j};
    auto it = std::lower_bound(edges.begin(), edges.end(), p, colex_less);
    return it != edges.end() && *it == p;
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> d(vertex_count, 0);
    for (auto [i, j] : edges) {
        ++d[i];
        ++d[j];
    }
    return d;
}

std::vector<uint32_t> SimpleGraph::adjacency_bits() const {
    if (vertex_count > 32)
        throw std::invalid_argument("adjacency_bits: more than 32 vertices");
    std::vector<uint32_t> adj(vertex_count, 0);
    for (auto [i, j] : edges) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
    }
    return adj;
}

SimpleGraph SimpleGraph::without_isolated_vertices() const {
    std::vector<int> label(vertex_count, -1);
    auto d = degrees();
    int next = 0;
    for (int v = 0; v < vertex_count; ++v)
        if (d[v] > 0) label[v] = next++;
    std::vector<VertexPair> e;
    e.reserve(edges.size());
    for (auto [i, j] : edges) e.emplace_back(label[i], label[j]);
    return from_edges(next, std::move(e));
}

namespace {

// Token grammar: P<l> | C<k> | K<t> | K<s>,<t> | K4- | bull | C<k>+
long parse_int(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("pattern token: expected a number in '" + s + "'");
    return std::stol(s.substr(start, pos - start));
}

} // namespace

SimpleGraph pattern_from_catalog(const std::string& token) {
    if (token == "bull") {
        // triangle {0,1,2} with pendant edges 0-3 and 1-4; degrees (3,3,2,1,1)
        return SimpleGraph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    }
    if (token == "K4-") {
        // K_4 minus the colex-largest edge (2,3)
        return SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    }
    if (token.empty()) throw ParseError("pattern token: empty");
    char head = token[0];
    size_t pos = 1;
    if (head == 'P') {
        long l = parse_int(token, pos);
        if (pos != token.size()) throw ParseError("pattern token: trailing characters in '" + token + "'");
        if (l < 2) throw ParseError("pattern token: P" + std::to_string(l) + " below minimum P2");
        return SimpleGraph::path(static_cast<int>(l));
    }
    if (head == 'C') {
        long k = parse_int(token, pos);
        bool pendant = pos < token.size() && token[pos] == '+';
        if (pendant) ++pos;
        if (pos != token.size()) throw ParseError("pattern token: trailing characters in '" + token + "'");
        if (k < 3) throw ParseError("pattern token: C" + std::to_string(k) + " below minimum C3");
        if (!pendant) return SimpleGraph::cycle(static_cast<int>(k));
        auto g = SimpleGraph::cycle(static_cast<int>(k));
        std::vector<VertexPair> e = g.edges;
        e.emplace_back(0, static_cast<int>(k)); // pendant vertex k hangs off vertex 0
        return SimpleGraph::from_edges(static_cast<int>(k) + 1, std::move(e));
    }
    if (head == 'K') {
        long s = parse_int(token, pos);
        if (pos < token.size() && token[pos] == ',') {
            ++pos;
            long t = parse_int(token, pos);
            if (pos != token.size()) throw ParseError("pattern token: trailing characters in '" + token + "'");
            if (s < 1 || t < 1) throw ParseError("pattern token: bipartite part below minimum 1");
            return SimpleGraph::complete_bipartite(static_cast<int>(s), static_cast<int>(t));
        }
        if (pos != token.size()) throw ParseError("pattern token: trailing characters in '" + token + "'");
        if (s < 2) throw ParseError("pattern token: K" + std::to_string(s) + " below minimum K2");
        return SimpleGraph::complete(static_cast<int>(s));
    }
    throw ParseError("pattern token: unknown token '" + token + "'");
}

SimpleGraph read_pattern(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw ParseError("pattern file: empty file", 1);
    ++lineno;
    std::istringstream head(line);
    char tag = 0;
    int vc = -1, ec = -1;
    if (!(head >> tag >> vc >> ec) || tag != 'p')
        throw ParseError("pattern file: expected 'p <vertex_count> <edge_count>'", lineno);
    if (vc < 0 || ec < 0) throw ParseError("pattern file: negative counts", lineno);
    std::vector<VertexPair> edges;
    edges.reserve(ec);
    for (int t = 0; t < ec; ++t) {
        if (!std::getline(in, line))
            throw ParseError("pattern file: expected " + std::to_string(ec) + " edge lines", lineno + 1);
        ++lineno;
        std::istringstream row(line);
        int i = -1, j = -1;
        if (!(row >> tag >> i >> j) || tag != 'e')
            throw ParseError("pattern file: expected 'e i j'", lineno);
        if (i == j) throw ParseError("pattern file: loop", lineno);
        if (i < 0 || j < 0 || i >= vc || j >= vc)
            throw ParseError("pattern file: endpoint out of range", lineno);
        if (i > j) std::swap(i, j);
        for (auto& [a, b] : edges)
            if (a == i && b == j) throw ParseError("pattern file: duplicate edge", lineno);
        edges.emplace_back(i, j);
    }
    return SimpleGraph::from_edges(vc, std::move(edges));
}

SimpleGraph read_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("pattern file: cannot open '" + path + "'");
    return read_pattern(in);
}

void write_pattern(std::ostream& out, const SimpleGraph& g) {
    out << "p " << g.vertex_count << ' ' << g.edge_count() << '\n';
    for (auto [i, j] : g.edges) out << "e " << i << ' ' << j << '\n';
}

void write_pattern_file(const std::string& path, const SimpleGraph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("pattern file: cannot open '" + path + "' for writing");
    write_pattern(out, g);
}

namespace {

bool connected(const SimpleGraph& g) {
    if (g.vertex_count == 0) return false;
    auto adj = g.adjacency_bits();
    uint32_t seen = 1;
    uint32_t frontier = 1;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        uint32_t fresh = adj[v] & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    return seen == (g.vertex_count == 32 ? ~0u : (1u << g.vertex_count) - 1);
}

} // namespace

bool is_path_graph(const SimpleGraph& g) {
    if (g.vertex_count < 2 || g.edge_count() != g.vertex_count - 1) return false;
    auto d = g.degrees();
    int ones = 0;
    for (int x : d) {
        if (x == 1) ++ones;
        else if (x != 2) return false;
    }
    return ones == 2 && connected(g);
}

bool is_cycle_graph(const SimpleGraph& g) {
    if (g.vertex_count < 3 || g.edge_count() != g.vertex_count) return false;
    for (int x : g.degrees())
        if (x != 2) return false;
    return connected(g);
}

bool is_complete_graph(const SimpleGraph& g) {
    return g.vertex_count >= 2 && g.edge_count() == pair_count(g.vertex_count);
}

std::optional<std::pair<int, int>> complete_bipartite_parts(const SimpleGraph& g) {
    if (g.vertex_count < 2 || g.edges.empty()) return std::nullopt;
    auto adj = g.adjacency_bits();
    // 2-color by BFS, then require every cross pair to be an edge.
    std::vector<int> side(g.vertex_count, -1);
    for (int start = 0; start < g.vertex_count; ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u = 0; u < g.vertex_count; ++u) {
                if (!(adj[v] >> u & 1)) continue;
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    int s = 0, t = 0;
    for (int v = 0; v < g.vertex_count; ++v) (side[v] == 0 ? s : t)++;
    if (s == 0 || t == 0) return std::nullopt;
    if (g.edge_count() != s * t) return std::nullopt;
    for (auto [i, j] : g.edges)
        if (side[i] == side[j]) return std::nullopt;
    if (s > t) std::swap(s, t);
    return std::make_pair(s, t);
}

} // namespace prlab
