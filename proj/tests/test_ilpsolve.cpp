#include <doctest.h>

#include "octarep/ilpsolve.hpp"

#include <map>
#include <string>
#include <vector>

#include "octarep/branching.hpp"
#include "octarep/combinatorics.hpp"
#include "octarep/parkingspace.hpp"

using namespace octarep;

namespace {

FeasibilityProblem tiny(std::vector<std::vector<long long>> columns,
                        std::vector<long long> target,
                        std::vector<long long> upper) {
    FeasibilityProblem p;
    p.columns = std::move(columns);
    p.target = std::move(target);
    p.upper_bounds = std::move(upper);
    for (size_t i = 0; i < p.target.size(); ++i)
        p.row_labels.push_back("r" + std::to_string(i));
    for (size_t j = 0; j < p.columns.size(); ++j) {
        p.var_labels.push_back("x" + std::to_string(j));
        p.var_weights.push_back(1);
    }
    return p;
}

SolveBudget with_method(SolveMethod m) {
    SolveBudget b;
    b.method = m;
    return b;
}

MultiplicityVector witness_to_vector(int n, const std::map<std::string, long long>& w) {
    MultiplicityVector out(n);
    for (const auto& [label, count] : w) out.set(Bipartition::parse(label), count);
    return out;
}

}  // namespace

TEST_CASE("parity-infeasible single column") {
    auto p = tiny({{2}}, {1}, {10});
    for (SolveMethod m : {SolveMethod::branch_and_bound, SolveMethod::dfs}) {
        auto out = feasible(p, with_method(m));
        CHECK(out.status == FeasStatus::infeasible);
        CHECK(!out.witness.has_value());
    }
}

TEST_CASE("zero target is feasible with the empty witness") {
    auto p = tiny({{1, 0}, {0, 1}, {1, 1}}, {0, 0}, {5, 5, 5});
    for (SolveMethod m : {SolveMethod::branch_and_bound, SolveMethod::dfs}) {
        auto out = feasible(p, with_method(m));
        CHECK(out.status == FeasStatus::feasible);
        REQUIRE(out.witness.has_value());
        CHECK(out.witness->empty());
    }
}

TEST_CASE("small positive systems") {
    SUBCASE("2x + 3y = 7 has a solution") {
        auto p = tiny({{2}, {3}}, {7}, {10, 10});
        for (SolveMethod m : {SolveMethod::branch_and_bound, SolveMethod::dfs}) {
            auto out = feasible(p, with_method(m));
            REQUIRE(out.status == FeasStatus::feasible);
            long long x = out.witness->count("x0") ? out.witness->at("x0") : 0;
            long long y = out.witness->count("x1") ? out.witness->at("x1") : 0;
            CHECK(2 * x + 3 * y == 7);
        }
    }
    SUBCASE("2x + 4y = 7 has none") {
        auto p = tiny({{2}, {4}}, {7}, {10, 10});
        for (SolveMethod m : {SolveMethod::branch_and_bound, SolveMethod::dfs})
            CHECK(feasible(p, with_method(m)).status == FeasStatus::infeasible);
    }
    SUBCASE("upper bounds rule out an otherwise solvable system") {
        auto p = tiny({{1}}, {5}, {3});
        for (SolveMethod m : {SolveMethod::branch_and_bound, SolveMethod::dfs})
            CHECK(feasible(p, with_method(m)).status == FeasStatus::infeasible);
        auto q = tiny({{1}, {1}}, {5}, {3, 3});
        for (SolveMethod m : {SolveMethod::branch_and_bound, SolveMethod::dfs}) {
            auto out = feasible(q, with_method(m));
            REQUIRE(out.status == FeasStatus::feasible);
            long long total = 0;
            for (const auto& [label, v] : *out.witness) {
                CHECK(v <= 3);
                total += v;
            }
            CHECK(total == 5);
        }
    }
}

TEST_CASE("signed systems run under branch-and-bound only") {
    // x - y = 1, x + y = 3 forces (2, 1).
    auto p = tiny({{1, 1}, {-1, 1}}, {1, 3}, {10, 10});
    auto out = feasible(p, with_method(SolveMethod::branch_and_bound));
    REQUIRE(out.status == FeasStatus::feasible);
    CHECK(out.witness->at("x0") == 2);
    CHECK(out.witness->at("x1") == 1);
    CHECK_THROWS_AS(feasible(p, with_method(SolveMethod::dfs)), std::invalid_argument);

    // x - y = 1, x + y = 2 has no integer solution.
    auto q = tiny({{1, 1}, {-1, 1}}, {1, 2}, {10, 10});
    CHECK(feasible(q, with_method(SolveMethod::branch_and_bound)).status ==
          FeasStatus::infeasible);
}

TEST_CASE("inconsistent problem shapes are rejected") {
    auto p = tiny({{1}}, {1}, {1});
    p.var_weights.clear();
    CHECK_THROWS_AS(feasible(p), std::invalid_argument);
    auto q = tiny({{1, 2}}, {1}, {1});
    CHECK_THROWS_AS(feasible(q), std::invalid_argument);
    auto r = tiny({{1}}, {1}, {1});
    r.upper_bounds = {-1};
    CHECK_THROWS_AS(feasible(r), std::invalid_argument);
}

TEST_CASE("budget exhaustion reports resource-limit honestly") {
    auto p = build_extension_problem(2, 5, EncodingSpace::multiplicity);
    SolveBudget starved;
    starved.max_nodes = 0;
    auto out = feasible(p, starved);
    CHECK(out.status == FeasStatus::resource_limit);
    CHECK(out.nodes == 0);
    CHECK(!out.witness.has_value());

    SolveBudget rushed;
    rushed.time_limit_sec = 0.0;
    auto timed = feasible(p, rushed);
    CHECK(timed.status == FeasStatus::resource_limit);

    SolveBudget starved_dfs;
    starved_dfs.max_nodes = 1;
    starved_dfs.method = SolveMethod::dfs;
    CHECK(feasible(p, starved_dfs).status == FeasStatus::resource_limit);
}

TEST_CASE("extension problem construction") {
    SUBCASE("multiplicity space for n=1, m=3") {
        auto p = build_extension_problem(1, 3, EncodingSpace::multiplicity);
        REQUIRE(p.row_labels == std::vector<std::string>{"[1]|[]", "[]|[1]"});
        REQUIRE(p.var_labels.size() == 5);
        CHECK((p.target == std::vector<long long>{2, 1}));
        // Columns are removable-box indicators.
        size_t v21 = 0;
        while (p.var_labels[v21] != "[1]|[1]") ++v21;
        CHECK((p.columns[v21] == std::vector<long long>{1, 1}));
        // Weight = dimension of the B_2 irreducible; bound = floor(3 / weight).
        CHECK(p.var_weights[v21] == 2);
        CHECK(p.upper_bounds[v21] == 1);
        size_t v2 = 0;
        while (p.var_labels[v2] != "[2]|[]") ++v2;
        CHECK(p.var_weights[v2] == 1);
        CHECK(p.upper_bounds[v2] == 3);
    }
    SUBCASE("character space for n=1, m=3") {
        auto p = build_extension_problem(1, 3, EncodingSpace::character);
        REQUIRE(p.row_labels == std::vector<std::string>{"[1]|[]", "[]|[1]"});
        CHECK((p.target == std::vector<long long>{3, 1}));
        // Every column starts with the irreducible's dimension because the
        // first row is the identity class.
        for (size_t j = 0; j < p.columns.size(); ++j)
            CHECK(p.columns[j][0] == p.var_weights[j]);
    }
}

TEST_CASE("extension solves verify against the restriction") {
    for (auto [n, m] : {std::pair{1, 2}, {1, 3}, {1, 6}, {2, 3}, {2, 4}, {2, 7}, {3, 3}}) {
        CAPTURE(n);
        CAPTURE(m);
        auto out = extension_exists(n, m, EncodingSpace::multiplicity);
        REQUIRE(out.status == FeasStatus::feasible);
        REQUIRE(out.witness.has_value());
        MultiplicityVector ext = witness_to_vector(n + 1, *out.witness);
        CHECK(verify_extension(ext, ParkingSpec(n, m)).ok);
    }
}

TEST_CASE("character-space witnesses verify as well") {
    for (auto [n, m] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 4}}) {
        CAPTURE(n);
        CAPTURE(m);
        auto out = extension_exists(n, m, EncodingSpace::character);
        REQUIRE(out.status == FeasStatus::feasible);
        MultiplicityVector ext = witness_to_vector(n + 1, *out.witness);
        CHECK(verify_extension(ext, ParkingSpec(n, m)).ok);
    }
}

TEST_CASE("both encodings agree in status on small instances") {
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 6; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            auto mult = extension_exists(n, m, EncodingSpace::multiplicity);
            auto chr = extension_exists(n, m, EncodingSpace::character);
            REQUIRE(mult.status != FeasStatus::resource_limit);
            CHECK(mult.status == chr.status);
        }
}

TEST_CASE("branch-and-bound agrees with depth-first search") {
    SolveBudget dfs = with_method(SolveMethod::dfs);
    for (int n = 1; n <= 2; ++n)
        for (int m = 1; m <= 6; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            auto p = build_extension_problem(n, m, EncodingSpace::multiplicity);
            auto a = feasible(p);
            auto b = feasible(p, dfs);
            REQUIRE(a.status != FeasStatus::resource_limit);
            REQUIRE(b.status != FeasStatus::resource_limit);
            CHECK(a.status == b.status);
        }
}

TEST_CASE("a successful tilde solve implies ILP feasibility") {
    for (auto [n, m] : {std::pair{1, 5}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 9}}) {
        CAPTURE(n);
        CAPTURE(m);
        auto tilde = solve_tilde_extension(n, m);
        REQUIRE(tilde.nonnegative);
        REQUIRE(tilde.extension.has_value());
        CHECK(extension_exists(n, m, EncodingSpace::multiplicity).status ==
              FeasStatus::feasible);
    }
}

TEST_CASE("ILP succeeds where the tilde solve fails") {
    // For n=2 and even m = 2ℓ the tilde coefficient at the top label is
    // 3 − ℓ, so the back-substitution goes negative from m = 8 on, yet
    // extensions exist outside the first-row-extension support.
    for (int m : {8, 10, 12}) {
        CAPTURE(m);
        auto tilde = solve_tilde_extension(2, m);
        CHECK(!tilde.nonnegative);
        CHECK(!tilde.extension.has_value());
        auto out = extension_exists(2, m, EncodingSpace::multiplicity);
        REQUIRE(out.status == FeasStatus::feasible);
        MultiplicityVector ext = witness_to_vector(3, *out.witness);
        CHECK(verify_extension(ext, ParkingSpec(2, m)).ok);
    }
}
