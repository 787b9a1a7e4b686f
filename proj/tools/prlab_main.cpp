// prlab: exact values, bounds and verified colorings for the maximum number
// of colors an edge-coloring of K_n can use while avoiding a properly
// colored (or rainbow) copy of a fixed pattern.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "prlab/bounds.hpp"
#include "prlab/cnf.hpp"
#include "prlab/constructions.hpp"
#include "prlab/errors.hpp"
#include "prlab/solver.hpp"
#include "prlab/turan.hpp"

using namespace prlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCopyFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct PatternArgs {
    std::string token;
    std::string file;

    SimpleGraph resolve() const {
        if (!token.empty() && !file.empty())
            throw ParseError("give either a pattern token or a pattern file, not both");
        if (!token.empty()) return pattern_from_catalog(token);
        if (!file.empty()) return read_pattern_file(file);
        throw ParseError("a pattern is required (--pattern or --pattern-file)");
    }

    std::string display() const { return !token.empty() ? token : file; }

    void attach(CLI::App* cmd) {
        cmd->add_option("--pattern", token,
                        "pattern token (P<l>, C<k>, K<t>, K<s>,<t>, K4-, bull, C<k>+)");
        cmd->add_option("--pattern-file", file, "pattern file ('p n m' header, 'e i j' lines)");
    }
};

struct BudgetArgs {
    Budget budget;

    void attach(CLI::App* cmd) {
        cmd->add_option("--time-limit", budget.time_limit_s, "search time limit in seconds")
            ->capture_default_str();
        cmd->add_option("--node-limit", budget.node_limit, "search node limit")
            ->capture_default_str();
        cmd->add_option("--threads", budget.threads, "parallel search workers")
            ->capture_default_str();
    }
};

void print_embedding(const Embedding& emb) {
    std::ostringstream line;
    line << "copy:";
    for (size_t v = 0; v < emb.map.size(); ++v) line << ' ' << v << "->" << emb.map[v];
    std::cout << line.str() << '\n';
}

int run_compute(const PatternArgs& pat_args, const BudgetArgs& budget_args, int n,
                const std::string& mode, const std::string& witness_path) {
    auto pattern = pat_args.resolve();
    SearchResult res = mode == "ar" ? ar_exact(n, pattern, budget_args.budget)
                                    : pr_exact(n, pattern, budget_args.budget);
    const char* fn = mode == "ar" ? "ar" : "pr";
    if (res.exact)
        std::cout << fn << "(K_" << n << ", " << pat_args.display() << ") = " << res.value << '\n';
    else
        std::cout << fn << "(K_" << n << ", " << pat_args.display() << ") in [" << res.value
                  << ", " << res.upper << "] (budget exhausted)\n";
    std::cout << "n=" << n << " pattern=" << pat_args.display() << " mode=" << fn
              << " value=" << res.value << " upper=" << res.upper
              << " exact=" << (res.exact ? "true" : "false") << " nodes=" << res.stats.nodes
              << " copy_prunes=" << res.stats.copy_prunes
              << " bound_prunes=" << res.stats.bound_prunes << " wall_ms=" << res.stats.wall_ms
              << '\n';
    if (!witness_path.empty()) {
        if (res.witness) {
            write_coloring_file(witness_path, *res.witness);
            std::cout << "witness=" << witness_path << '\n';
        } else {
            std::cout << "witness=none (no valid coloring exists)\n";
        }
    }
    return res.exact ? kExitOk : kExitBudget;
}

int run_construct(const std::string& formula, int n, int l, int k, int r,
                  const PatternArgs& pat_args, const std::string& out_path) {
    ConstructionReport rep;
    if (formula == "blocker") rep = small_path_blocker(n, r);
    else if (formula == "path-clique") rep = path_lower_bound(n, l, Variant::clique);
    else if (formula == "path-join") rep = path_lower_bound(n, l, Variant::join);
    else if (formula == "cycle-clique") rep = cycle_lower_bound(n, k, Variant::clique);
    else if (formula == "cycle-join") rep = cycle_lower_bound(n, k, Variant::join);
    else if (formula == "k4minus") rep = k4minus_lower_bound(n);
    else if (formula == "k23") rep = k23_lower_bound(n);
    else if (formula == "turan") rep = turan_based_lower_bound(n, pat_args.resolve());
    else throw ParseError("unknown formula '" + formula + "'");

    std::ostringstream params;
    for (const auto& [key, value] : rep.parameters) params << ' ' << key << '=' << value;
    std::cout << "construct " << rep.formula_name << ':' << params.str()
              << " colors=" << rep.claimed_colors << " provenance=" << to_string(rep.provenance)
              << '\n';
    if (!rep.note.empty()) std::cout << "note: " << rep.note << '\n';

    if (out_path.empty()) {
        write_coloring(std::cout, rep.coloring);
    } else {
        write_coloring_file(out_path, rep.coloring);
        std::ofstream side(out_path + ".report");
        side << "formula=" << rep.formula_name << '\n';
        for (const auto& [key, value] : rep.parameters) side << key << '=' << value << '\n';
        side << "claimed_colors=" << rep.claimed_colors << '\n';
        side << "provenance=" << to_string(rep.provenance) << '\n';
        if (!rep.note.empty()) side << "note=" << rep.note << '\n';
        std::cout << "output=" << out_path << '\n';
    }
    return kExitOk;
}

int run_verify(const std::string& coloring_path, const PatternArgs& pat_args) {
    std::vector<std::string> warnings;
    auto col = read_coloring_file(coloring_path, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    auto pattern = pat_args.resolve();
    if (auto emb = find_pc_embedding(col, pattern)) {
        std::cout << "PC-COPY-FOUND k=" << col.color_count << '\n';
        print_embedding(*emb);
        return kExitCopyFound;
    }
    std::cout << "NO-PC-COPY k=" << col.color_count << '\n';
    return kExitOk;
}

// "C4,C5,C6" splits into three tokens; "K2,3" stays whole. A comma split is
// taken only when every piece parses as a catalog token on its own.
std::vector<std::string> expand_pattern_list(const std::vector<std::string>& raw) {
    std::vector<std::string> tokens;
    for (const auto& value : raw) {
        std::vector<std::string> pieces;
        std::stringstream ss(value);
        std::string piece;
        while (std::getline(ss, piece, ','))
            if (!piece.empty()) pieces.push_back(piece);
        bool all_parse = pieces.size() > 1;
        for (const auto& p : pieces) {
            try {
                pattern_from_catalog(p);
            } catch (const ParseError&) {
                all_parse = false;
                break;
            }
        }
        if (all_parse) tokens.insert(tokens.end(), pieces.begin(), pieces.end());
        else tokens.push_back(value);
    }
    return tokens;
}

std::string csv_cell(const std::string& value) {
    if (value.find(',') == std::string::npos) return value;
    return "\"" + value + "\"";
}

int run_atlas(const std::vector<std::string>& patterns, int n_min, int n_max, int search_max,
              const BudgetArgs& budget_args, const std::string& out_path) {
    auto tokens = expand_pattern_list(patterns);
    if (tokens.empty()) throw ParseError("atlas: --patterns must name at least one pattern");

    std::ostringstream csv;
    csv << "n,pattern,lower,upper,exact,provenance\n";
    for (int n = n_min; n <= n_max; ++n) {
        for (const auto& t : tokens) {
            auto pattern = pattern_from_catalog(t);
            bool search = n <= search_max;
            auto rep = bounds_report(n, pattern, budget_args.budget, search);
            std::string lower_src = "none", upper_src = "none";
            for (const auto& e : rep.entries) {
                if (!e.proved) continue;
                if (e.kind == BoundEntry::Kind::lower && e.value == rep.lower &&
                    lower_src == "none")
                    lower_src = e.source;
                if (e.kind == BoundEntry::Kind::upper && e.value == rep.upper &&
                    upper_src == "none")
                    upper_src = e.source;
            }
            csv << n << ',' << csv_cell(t) << ',' << rep.lower << ',' << rep.upper << ','
                << (rep.exact ? "true" : "false") << ',' << "lower:" << lower_src
                << ";upper:" << upper_src << '\n';
        }
    }
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("atlas: cannot open '" + out_path + "' for writing");
        out << csv.str();
        std::cout << "output=" << out_path << '\n';
    }
    return kExitOk;
}

int run_cnf(int n, const PatternArgs& pat_args, int k, const std::string& out_path) {
    auto inst = encode_decision_cnf(n, pat_args.resolve(), k);
    std::cout << "variables=" << inst.variable_count << " clauses=" << inst.clauses.size()
              << " eq_pairs=" << inst.eq_pairs.size() << '\n';
    if (out_path.empty()) {
        std::cout << inst.to_dimacs();
    } else {
        std::ofstream out(out_path);
        if (!out) throw ParseError("cnf: cannot open '" + out_path + "' for writing");
        out << inst.to_dimacs();
        std::cout << "output=" << out_path << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pr(K_n, G): exact solver, bounds and extremal colorings"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "exact pr/ar value or bracket by search");
    int c_n = 0;
    std::string c_mode = "pr", c_witness;
    PatternArgs c_pat;
    BudgetArgs c_budget;
    compute->add_option("--n", c_n, "host K_n")->required();
    c_pat.attach(compute);
    compute->add_option("--mode", c_mode, "pr (properly colored) or ar (rainbow)")
        ->check(CLI::IsMember({"pr", "ar"}));
    compute->add_option("--witness", c_witness, "write an optimal coloring here");
    c_budget.attach(compute);

    auto* construct = app.add_subcommand("construct", "emit a lower-bound coloring");
    std::string f_name, f_out;
    int f_n = 0, f_l = 0, f_k = 0, f_r = 0;
    PatternArgs f_pat;
    construct
        ->add_option("formula", f_name,
                     "blocker|path-clique|path-join|cycle-clique|cycle-join|k4minus|k23|turan")
        ->required();
    construct->add_option("--n", f_n, "host K_n")->required();
    construct->add_option("--l", f_l, "path order (path formulas)");
    construct->add_option("--k", f_k, "cycle order (cycle formulas)");
    construct->add_option("--r", f_r, "blocked path = P_{3+r}, r in 0..2 (blocker)");
    f_pat.attach(construct);
    construct->add_option("-o,--output", f_out, "coloring file; sidecar report at <file>.report");

    auto* verify = app.add_subcommand("verify", "check a coloring file against a pattern");
    std::string v_col;
    PatternArgs v_pat;
    verify->add_option("coloring", v_col, "coloring file ('n k' header, 'i j c' lines)")
        ->required();
    v_pat.attach(verify);

    auto* atlas = app.add_subcommand("atlas", "CSV of brackets over an n range");
    std::vector<std::string> a_patterns;
    std::string a_out;
    int a_min = 4, a_max = 6, a_search_max = 6;
    BudgetArgs a_budget;
    atlas->add_option("--patterns", a_patterns,
                      "pattern tokens (repeatable; comma lists split when unambiguous)")
        ->required();
    atlas->add_option("--n-min", a_min, "first n")->capture_default_str();
    atlas->add_option("--n-max", a_max, "last n")->capture_default_str();
    atlas->add_option("--search-max", a_search_max, "run the exact search up to this n")
        ->capture_default_str();
    a_budget.attach(atlas);
    atlas->add_option("-o,--output", a_out, "CSV file (stdout when absent)");

    auto* cnf = app.add_subcommand("cnf", "DIMACS encoding of the k-coloring decision");
    int d_n = 0, d_k = 0;
    std::string d_out;
    PatternArgs d_pat;
    cnf->add_option("--n", d_n, "host K_n")->required();
    d_pat.attach(cnf);
    cnf->add_option("--k", d_k, "number of colors")->required();
    cnf->add_option("-o,--output", d_out, "DIMACS file (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(c_pat, c_budget, c_n, c_mode, c_witness);
        if (construct->parsed()) return run_construct(f_name, f_n, f_l, f_k, f_r, f_pat, f_out);
        if (verify->parsed()) return run_verify(v_col, v_pat);
        if (atlas->parsed())
            return run_atlas(a_patterns, a_min, a_max, a_search_max, a_budget, a_out);
        if (cnf->parsed()) return run_cnf(d_n, d_pat, d_k, d_out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
        std::cerr << '\n';
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
