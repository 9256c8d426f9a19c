// Exact nonnegative-integer feasibility for A·x = b with variable upper
// bounds: rational phase-1 simplex plus branch-and-bound, all over mpq with
// no floating point anywhere. A depth-first enumeration over nonnegative
// data doubles as an independent cross-check oracle.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octarep/combinatorics.hpp"

namespace octarep {

enum class FeasStatus { feasible, infeasible, resource_limit };
enum class SolveMethod { branch_and_bound, dfs };

struct FeasibilityProblem {
    std::vector<std::string> row_labels;
    std::vector<std::string> var_labels;
    std::vector<std::vector<long long>> columns;  // columns[var][row]
    std::vector<long long> target;
    std::vector<long long> upper_bounds;  // per variable
    std::vector<long long> var_weights;   // branching tie-break, larger first
};

struct SolveBudget {
    long long max_nodes = 100000;
    double time_limit_sec = 60.0;
    SolveMethod method = SolveMethod::branch_and_bound;
};

struct FeasibilityOutcome {
    FeasStatus status = FeasStatus::infeasible;
    // Nonzero assignments only; present exactly when status == feasible, and
    // always re-substituted into the system before being returned.
    std::optional<std::map<std::string, long long>> witness;
    std::string certificate_note;
    long long nodes = 0;
};

FeasibilityOutcome feasible(const FeasibilityProblem& p, const SolveBudget& budget = {});

// The two encodings of the extension-existence question for (n, m):
// multiplicity space restricts each B_{n+1} irreducible and targets the
// parking decomposition; character space evaluates each B_{n+1} irreducible
// character at embedded classes (α,β) ↦ (α ∪ {1}, β) and targets the parking
// character. Both share dimension-derived upper bounds c_v ≤ m^n / dim V_v.
enum class EncodingSpace { multiplicity, character };

FeasibilityProblem build_extension_problem(int n, int m, EncodingSpace space);

FeasibilityOutcome extension_exists(int n, int m, EncodingSpace space,
                                    const SolveBudget& budget = {});

}  // namespace octarep
