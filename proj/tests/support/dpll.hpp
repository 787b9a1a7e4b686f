#pragma once

// Minimal DPLL solver used as an in-process oracle for the CNF encoder when
// no external SAT solver is configured. Plain unit propagation plus
// first-unassigned branching; fine for the few hundred variables the small
// instances produce.

#include <cstdlib>
#include <optional>
#include <vector>

namespace testsat {

struct Dpll {
    int var_count;
    const std::vector<std::vector<int>>& clauses;
    std::vector<int> assign; // 1-based: -1 unset, 0 false, 1 true

    Dpll(int vars, const std::vector<std::vector<int>>& cls)
        : var_count(vars), clauses(cls), assign(vars + 1, -1) {}

    // 1 satisfied, 0 conflicting, -1 undecided (returns a unit literal via out)
    int clause_state(const std::vector<int>& clause, int* unit) const {
        int unassigned = 0;
        *unit = 0;
        for (int lit : clause) {
            int v = std::abs(lit);
            int want = lit > 0 ? 1 : 0;
            if (assign[v] == -1) {
                ++unassigned;
                *unit = lit;
            } else if (assign[v] == want) {
                return 1;
            }
        }
        if (unassigned == 0) return 0;
        if (unassigned == 1) return 2; // unit
        return -1;
    }

    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : clauses) {
                int unit;
                int state = clause_state(clause, &unit);
                if (state == 0) return false;
                if (state == 2) {
                    int v = std::abs(unit);
                    assign[v] = unit > 0 ? 1 : 0;
                    trail.push_back(v);
                    changed = true;
                }
            }
        }
        return true;
    }

    bool solve() {
        std::vector<int> trail;
        if (!propagate(trail)) {
            for (int v : trail) assign[v] = -1;
            return false;
        }
        int branch = 0;
        for (int v = 1; v <= var_count; ++v)
            if (assign[v] == -1) { branch = v; break; }
        if (branch == 0) return true;
        for (int val : {1, 0}) {
            assign[branch] = val;
            if (solve()) return true;
            assign[branch] = -1;
        }
        for (int v : trail) assign[v] = -1;
        return false;
    }
};

inline std::optional<std::vector<int>> solve(int var_count,
                                             const std::vector<std::vector<int>>& clauses) {
    Dpll solver(var_count, clauses);
    if (!solver.solve()) return std::nullopt;
    std::vector<int> model(var_count + 1, 0);
    for (int v = 1; v <= var_count; ++v) model[v] = solver.assign[v] == 1 ? 1 : 0;
    return model;
}

} // namespace testsat
