// Extension search that layers the closed forms, the tilde solve, and the
// integer feasibility solver, plus the (n, m) sweep with CSV output.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "octarep/branching.hpp"
#include "octarep/ilpsolve.hpp"

namespace octarep {

enum class ExtendStrategy { automatic, tilde, ilp };

std::string status_name(FeasStatus s);

// FNV-1a (64-bit) of the canonical witness rendering, as fixed-width hex.
std::string witness_digest(const MultiplicityVector& v);

// Outcome of one extension search. A present extension has always been
// re-checked against the restriction before being returned; method is one of
// closed-form, tilde-solve, ilp-multiplicity, ilp-character.
struct ExtensionResult {
    FeasStatus status = FeasStatus::infeasible;
    std::string method;
    std::optional<MultiplicityVector> extension;
    long long nodes = 0;
    std::string note;
};

// The automatic strategy tries the closed-form families (m = 3 for every n,
// and n = 2 with even m), then the tilde solve, then the feasibility solver
// in the requested encoding space. The tilde strategy alone decides
// existence over the first-row-extension support only, which is exact: the
// unitriangular system has a unique solution, so a negative entry there is a
// definitive no for that support.
ExtensionResult find_extension(int n, int m,
                               ExtendStrategy strategy = ExtendStrategy::automatic,
                               EncodingSpace space = EncodingSpace::multiplicity,
                               const SolveBudget& budget = {});

struct SweepRecord {
    int n = 0;
    int m = 0;
    FeasStatus status = FeasStatus::infeasible;
    std::string method;
    std::optional<std::string> digest;
    long long wall_ms = 0;
    long long nodes = 0;
};

// One record per pair, n in 1..n_max and m in 1..m_max, row-major. jobs > 1
// distributes pairs over OpenMP threads; records come back in deterministic
// order regardless.
std::vector<SweepRecord> run_sweep(int n_max, int m_max, int jobs = 1,
                                   const SolveBudget& budget = {});

// Header exactly: n,m,status,method,wall_ms,nodes
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

}  // namespace octarep
