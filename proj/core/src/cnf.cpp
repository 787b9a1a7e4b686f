#include "prlab/cnf.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <sys/wait.h>
#include <unistd.h>

#include "prlab/iso.hpp"

namespace prlab {

namespace {

inline int pair_index(int i, int j) {
    return i < j ? j * (j - 1) / 2 + i : i * (i - 1) / 2 + j;
}

// All injective maps pattern -> [0,n), one representative per pattern
// automorphism orbit (the lexicographically smallest of {map . sigma}).
std::vector<std::vector<int>> canonical_embeddings(const SimpleGraph& pattern, int n) {
    std::vector<std::vector<int>> out;
    if (pattern.vertex_count > n) return out;
    auto auts = automorphisms(pattern);
    int vp = pattern.vertex_count;
    std::vector<int> map(vp, -1);
    std::vector<uint8_t> used(n, 0);
    std::vector<int> composed(vp);

    auto is_canonical = [&]() {
        for (const auto& sigma : auts) {
            for (int v = 0; v < vp; ++v) composed[v] = map[sigma[v]];
            if (std::lexicographical_compare(composed.begin(), composed.end(), map.begin(),
                                             map.end()))
                return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int v) -> void {
        if (v == vp) {
            if (is_canonical()) out.push_back(map);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            map[v] = w;
            used[w] = 1;
            self(self, v + 1);
            used[w] = 0;
        }
        map[v] = -1;
    };
    rec(rec, 0);
    return out;
}

} // namespace

CnfInstance encode_decision_cnf(int n, const SimpleGraph& pattern, int k) {
    int m = pair_count(n);
    if (k < 1 || k > std::max(m, 1))
        throw std::invalid_argument("encode_decision_cnf: need 1 <= k <= C(n,2)");

    CnfInstance inst;
    inst.n = n;
    inst.k = k;
    inst.edge_count = m;

    // adjacent pattern edge pairs; a properly colored copy makes all of them
    // unequal, so blocking needs one equality among their images
    std::vector<std::pair<int, int>> adjacent_pattern_pairs;
    for (size_t s = 0; s < pattern.edges.size(); ++s) {
        auto [a, b] = pattern.edges[s];
        for (size_t t = s + 1; t < pattern.edges.size(); ++t) {
            auto [c, d] = pattern.edges[t];
            if (a == c || a == d || b == c || b == d)
                adjacent_pattern_pairs.emplace_back(static_cast<int>(s), static_cast<int>(t));
        }
    }

    auto embeddings = canonical_embeddings(pattern, n);

    // host edge pairs that must carry an eq variable
    std::vector<std::pair<int, int>> pairs;
    for (const auto& map : embeddings) {
        for (auto [s, t] : adjacent_pattern_pairs) {
            auto [a, b] = pattern.edges[s];
            auto [c, d] = pattern.edges[t];
            int e = pair_index(map[a], map[b]);
            int f = pair_index(map[c], map[d]);
            if (e > f) std::swap(e, f);
            pairs.emplace_back(e, f);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    inst.eq_pairs = pairs;
    inst.variable_count = m * k + static_cast<int>(pairs.size());

    auto pair_var = [&](int e, int f) {
        if (e > f) std::swap(e, f);
        auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(e, f));
        return inst.eq_var(static_cast<int>(it - pairs.begin()));
    };

    // exactly one color per edge
    for (int e = 0; e < m; ++e) {
        std::vector<int> alo;
        for (int c = 0; c < k; ++c) alo.push_back(inst.edge_var(e, c));
        inst.clauses.push_back(std::move(alo));
        for (int c = 0; c < k; ++c)
            for (int c2 = c + 1; c2 < k; ++c2)
                inst.clauses.push_back({-inst.edge_var(e, c), -inst.edge_var(e, c2)});
    }

    // eq_{e,f} <-> edges e and f share their color
    for (size_t p = 0; p < pairs.size(); ++p) {
        auto [e, f] = pairs[p];
        int eq = inst.eq_var(static_cast<int>(p));
        for (int c = 0; c < k; ++c) {
            inst.clauses.push_back({-eq, -inst.edge_var(e, c), inst.edge_var(f, c)});
            inst.clauses.push_back({-inst.edge_var(e, c), -inst.edge_var(f, c), eq});
        }
    }

    // every canonical embedding must see some adjacent equal pair
    for (const auto& map : embeddings) {
        std::vector<int> clause;
        for (auto [s, t] : adjacent_pattern_pairs) {
            auto [a, b] = pattern.edges[s];
            auto [c, d] = pattern.edges[t];
            clause.push_back(pair_var(pair_index(map[a], map[b]), pair_index(map[c], map[d])));
        }
        std::sort(clause.begin(), clause.end());
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        inst.clauses.push_back(std::move(clause));
    }

    // surjectivity: every color on some edge
    for (int c = 0; c < k; ++c) {
        std::vector<int> clause;
        for (int e = 0; e < m; ++e) clause.push_back(inst.edge_var(e, c));
        inst.clauses.push_back(std::move(clause));
    }

    // staircase break: color c on edge e needs color c-1 on an earlier edge
    for (int c = 1; c < k; ++c) {
        for (int e = 0; e < m; ++e) {
            std::vector<int> clause{-inst.edge_var(e, c)};
            for (int f = 0; f < e; ++f) clause.push_back(inst.edge_var(f, c - 1));
            inst.clauses.push_back(std::move(clause));
        }
    }

    return inst;
}

std::string CnfInstance::to_dimacs() const {
    std::ostringstream out;
    out << "p cnf " << variable_count << ' ' << clauses.size() << '\n';
    for (const auto& clause : clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

std::optional<SatOutcome> run_external_sat(const std::string& dimacs,
                                           const std::string& solver_command) {
    if (solver_command.empty()) return std::nullopt;
    char path[] = "/tmp/prlab-cnf-XXXXXX";
    int fd = mkstemp(path);
    if (fd < 0) return std::nullopt;
    {
        std::ofstream out(path);
        out << dimacs;
    }
    close(fd);

    std::string cmd = solver_command + " " + path + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        unlink(path);
        return std::nullopt;
    }
    SatOutcome outcome;
    bool answered = false;
    std::string stdout_text;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) stdout_text.append(buf, got);
    int status = pclose(pipe);
    unlink(path);

    std::istringstream lines(stdout_text);
    std::string line;
    std::vector<int> lits;
    while (std::getline(lines, line)) {
        if (line.rfind("s ", 0) == 0) {
            if (line.find("UNSATISFIABLE") != std::string::npos) {
                outcome.satisfiable = false;
                answered = true;
            } else if (line.find("SATISFIABLE") != std::string::npos) {
                outcome.satisfiable = true;
                answered = true;
            }
        } else if (line.rfind("v ", 0) == 0) {
            std::istringstream vs(line.substr(2));
            int lit;
            while (vs >> lit)
                if (lit != 0) lits.push_back(lit);
        }
    }
    if (!answered && WIFEXITED(status)) {
        int code = WEXITSTATUS(status);
        if (code == 10) {
            outcome.satisfiable = true;
            answered = true;
        } else if (code == 20) {
            outcome.satisfiable = false;
            answered = true;
        }
    }
    if (!answered) return std::nullopt;
    if (outcome.satisfiable && !lits.empty()) {
        int max_var = 0;
        for (int lit : lits) max_var = std::max(max_var, std::abs(lit));
        outcome.model.assign(max_var + 1, 0);
        for (int lit : lits) outcome.model[std::abs(lit)] = lit > 0 ? 1 : 0;
    }
    return outcome;
}

std::optional<EdgeColoring> decode_cnf_model(const CnfInstance& inst,
                                             const std::vector<int>& model) {
    std::vector<int> raw(inst.edge_count, -1);
    for (int e = 0; e < inst.edge_count; ++e) {
        for (int c = 0; c < inst.k; ++c) {
            int var = inst.edge_var(e, c);
            if (var < static_cast<int>(model.size()) && model[var]) {
                if (raw[e] != -1) return std::nullopt;
                raw[e] = c;
            }
        }
        if (raw[e] == -1) return std::nullopt;
    }
    return EdgeColoring::from_colors(inst.n, std::move(raw));
}

} // namespace prlab
