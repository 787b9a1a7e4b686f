#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prlab/coloring.hpp"
#include "prlab/graph.hpp"

namespace prlab {

// Propositional encoding of "some surjective k-coloring of K_n has no
// properly colored pattern copy". Variables, 1-based:
//   x_{e,c} = e*k + c + 1            edge e gets color c   (m*k variables)
//   eq_p    = m*k + p + 1            the two host edges of pair p are
//                                    equally colored (one per adjacent host
//                                    edge pair hit by some embedding)
// Clauses: exactly-one color per edge (pairwise at-most-one), eq
// equivalences, one blocking clause per automorphism-orbit representative
// embedding, at-least-one edge per color, and the staircase symmetry break
// "color c on edge e implies color c-1 on an earlier edge".
struct CnfInstance {
    int n = 0;
    int k = 0;
    int edge_count = 0;
    int variable_count = 0;
    std::vector<std::pair<int, int>> eq_pairs; // host edge index pairs, sorted
    std::vector<std::vector<int>> clauses;

    int edge_var(int e, int c) const { return e * k + c + 1; }
    int eq_var(int pair_idx) const { return edge_count * k + pair_idx + 1; }

    std::string to_dimacs() const;
};

CnfInstance encode_decision_cnf(int n, const SimpleGraph& pattern, int k);

// Result of an external SAT solver run.
struct SatOutcome {
    bool satisfiable = false;
    std::vector<int> model; // variable truth values, index 1..var_count; empty if none given
};

/// Runs `solver_command <dimacs-file>` through a shell, reading the standard
/// "s SATISFIABLE"/"s UNSATISFIABLE" and "v ..." lines (exit codes 10/20
/// accepted as a fallback). nullopt when the command failed or said nothing
/// recognizable. The adapter is configuration: callers typically pass the
/// PRLAB_SAT_SOLVER environment value.
std::optional<SatOutcome> run_external_sat(const std::string& dimacs,
                                           const std::string& solver_command);

/// Rebuilds the coloring from a model's x variables. nullopt if the model
/// does not give every edge exactly one color.
std::optional<EdgeColoring> decode_cnf_model(const CnfInstance& inst,
                                             const std::vector<int>& model);

} // namespace prlab
