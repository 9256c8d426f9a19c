// The acceptance suite: nine checks covering characters, decompositions,
// branching goldens, the closed-form families, table integrity, the
// feasibility sweep, and solver soundness. Shared by the acceptance test
// binary and the `verify-paper` command.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "octarep/ilpsolve.hpp"

namespace octarep {

struct AcceptanceOptions {
    // Probe n ∈ {5,6,7} at m = 2n+1 under deep_budget after the gated
    // criteria; these report their statuses (including resource-limit)
    // without affecting the pass/fail verdict.
    bool deep = false;
    SolveBudget deep_budget{};
};

struct AcceptanceReport {
    struct Line {
        std::string name;
        bool pass = false;
        std::string detail;  // empty on success
    };
    std::vector<Line> lines;

    bool all_pass() const {
        for (const Line& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// Runs every criterion, streaming one PASS/FAIL line each to `log`, then a
// summary (and the deep probes when requested).
AcceptanceReport run_acceptance_suite(std::ostream& log,
                                      const AcceptanceOptions& options = {});

}  // namespace octarep
