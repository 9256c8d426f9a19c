#include "octarep/ilpsolve.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "octarep/branching.hpp"
#include "octarep/exact.hpp"
#include "octarep/hypchar.hpp"
#include "octarep/parkingspace.hpp"
#include "octarep/reference.hpp"

namespace octarep {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
    const SolveBudget& budget;
    Clock::time_point deadline;
    long long nodes = 0;
    bool exhausted = false;
    std::string reason;

    explicit BudgetState(const SolveBudget& b)
        : budget(b),
          deadline(Clock::now() +
                   std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(b.time_limit_sec))) {}

    // Called inside simplex iterations and on node entry so that a runaway
    // solve stops mid-LP, not only between nodes.
    bool over_time() {
        if (exhausted) return true;
        if (Clock::now() > deadline) {
            exhausted = true;
            reason = "time budget exhausted";
        }
        return exhausted;
    }

    bool take_node() {
        if (exhausted) return false;
        if (nodes >= budget.max_nodes) {
            exhausted = true;
            reason = "node budget exhausted";
            return false;
        }
        ++nodes;
        return true;
    }
};

mpq_class frac_part(const mpq_class& v) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    return v - mpq_class(fl);
}

// Phase-1 simplex for A·x = b with 0 ≤ x ≤ u, exact over mpq. Artificials
// sit on the equality rows, slacks on the bound rows. Entering column by
// most-negative reduced cost, switching to Bland's rule permanently after a
// degenerate stretch so termination is guaranteed; artificials never
// re-enter. Returns nullopt when the relaxation is infeasible, and signals
// through state when a budget ran out mid-solve.
std::optional<std::vector<mpq_class>> solve_relaxation(
    const FeasibilityProblem& p, const std::vector<long long>& lower,
    const std::vector<long long>& upper, BudgetState& state) {
    size_t nvars = p.columns.size();
    size_t neq = p.target.size();
    size_t rows = neq + nvars;
    size_t cols = 2 * nvars + neq;  // x', slacks, artificials; rhs kept separately

    std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(cols, 0));
    std::vector<mpq_class> rhs(rows, 0);
    std::vector<int> basis(rows);

    // Equality rows, shifted by the lower bounds and sign-normalized.
    for (size_t i = 0; i < neq; ++i) {
        mpq_class b = to_mpz(p.target[i]);
        for (size_t j = 0; j < nvars; ++j) b -= to_mpz(p.columns[j][i]) * to_mpz(lower[j]);
        bool flip = b < 0;
        for (size_t j = 0; j < nvars; ++j) {
            mpq_class a = to_mpz(p.columns[j][i]);
            t[i][j] = flip ? -a : a;
        }
        t[i][2 * nvars + i] = 1;
        rhs[i] = flip ? -b : b;
        basis[i] = static_cast<int>(2 * nvars + i);
    }
    // Bound rows x'_j + s_j = u_j − l_j.
    for (size_t j = 0; j < nvars; ++j) {
        size_t r = neq + j;
        t[r][j] = 1;
        t[r][nvars + j] = 1;
        rhs[r] = to_mpz(upper[j] - lower[j]);
        basis[r] = static_cast<int>(nvars + j);
    }

    // Reduced-cost row for minimizing the artificial sum, with the basic
    // artificial columns already priced out.
    std::vector<mpq_class> obj(cols, 0);
    mpq_class obj_value = 0;  // current Σ artificials
    for (size_t i = 0; i < neq; ++i) {
        for (size_t j = 0; j < cols; ++j) obj[j] -= t[i][j];
        obj_value += rhs[i];
    }
    for (size_t i = 0; i < neq; ++i) obj[2 * nvars + i] = 0;

    size_t first_artificial = 2 * nvars;
    bool bland = false;
    int degenerate_streak = 0;
    mpq_class last_value = obj_value;

    while (true) {
        if (state.over_time()) return std::nullopt;

        int enter = -1;
        if (bland) {
            for (size_t j = 0; j < first_artificial; ++j)
                if (obj[j] < 0) {
                    enter = static_cast<int>(j);
                    break;
                }
        } else {
            const mpq_class* best = nullptr;
            for (size_t j = 0; j < first_artificial; ++j)
                if (obj[j] < 0 && (!best || obj[j] < *best)) {
                    best = &obj[j];
                    enter = static_cast<int>(j);
                }
        }
        if (enter < 0) break;  // optimal

        int leave = -1;
        mpq_class best_ratio;
        for (size_t i = 0; i < rows; ++i) {
            if (t[i][static_cast<size_t>(enter)] <= 0) continue;
            mpq_class ratio = rhs[i] / t[i][static_cast<size_t>(enter)];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[static_cast<size_t>(leave)])) {
                leave = static_cast<int>(i);
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("solve_relaxation: phase-1 objective unbounded");

        size_t e = static_cast<size_t>(enter), r = static_cast<size_t>(leave);
        mpq_class pivot = t[r][e];
        for (size_t j = 0; j < cols; ++j) t[r][j] /= pivot;
        rhs[r] /= pivot;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || t[i][e] == 0) continue;
            mpq_class factor = t[i][e];
            for (size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[r][j];
            rhs[i] -= factor * rhs[r];
        }
        if (obj[e] != 0) {
            mpq_class factor = obj[e];
            for (size_t j = 0; j < cols; ++j) obj[j] -= factor * t[r][j];
            obj_value += factor * rhs[r];  // factor < 0, value decreases
        }
        basis[r] = enter;

        if (obj_value == last_value) {
            if (++degenerate_streak > 64) bland = true;
        } else {
            degenerate_streak = 0;
            last_value = obj_value;
        }
    }

    if (obj_value != 0) return std::nullopt;  // infeasible

    std::vector<mpq_class> x(nvars);
    for (size_t j = 0; j < nvars; ++j) x[j] = to_mpz(lower[j]);
    for (size_t i = 0; i < rows; ++i)
        if (basis[i] >= 0 && static_cast<size_t>(basis[i]) < nvars)
            x[static_cast<size_t>(basis[i])] += rhs[i];
    return x;
}

bool resubstitute(const FeasibilityProblem& p, const std::vector<long long>& x) {
    for (size_t i = 0; i < p.target.size(); ++i) {
        mpz_class acc = 0;
        for (size_t j = 0; j < p.columns.size(); ++j)
            acc += to_mpz(p.columns[j][i]) * to_mpz(x[j]);
        if (acc != to_mpz(p.target[i])) return false;
    }
    for (size_t j = 0; j < p.columns.size(); ++j)
        if (x[j] < 0 || x[j] > p.upper_bounds[j]) return false;
    return true;
}

FeasibilityOutcome make_witness_outcome(const FeasibilityProblem& p,
                                        const std::vector<long long>& x, long long nodes,
                                        const std::string& note) {
    if (!resubstitute(p, x))
        throw std::logic_error("feasible: candidate witness failed re-substitution");
    FeasibilityOutcome out;
    out.status = FeasStatus::feasible;
    out.nodes = nodes;
    out.certificate_note = note;
    std::map<std::string, long long> w;
    for (size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0) w[p.var_labels[j]] = x[j];
    out.witness = std::move(w);
    return out;
}

FeasibilityOutcome solve_branch_and_bound(const FeasibilityProblem& p,
                                          const SolveBudget& budget) {
    size_t nvars = p.columns.size();
    BudgetState state(budget);

    struct Node {
        std::vector<long long> lower, upper;
    };
    std::vector<Node> stack;
    stack.push_back({std::vector<long long>(nvars, 0), p.upper_bounds});

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();

        bool empty_box = false;
        for (size_t j = 0; j < nvars; ++j)
            if (node.lower[j] > node.upper[j]) {
                empty_box = true;
                break;
            }
        if (empty_box) continue;

        if (!state.take_node() || state.over_time()) break;

        auto relaxed = solve_relaxation(p, node.lower, node.upper, state);
        if (state.exhausted) break;
        if (!relaxed) continue;  // node infeasible

        // Most-fractional branching; ties by larger variable weight, then
        // lower index. Integral vertices are witnesses directly.
        int branch_var = -1;
        mpq_class best_score = 0;
        for (size_t j = 0; j < nvars; ++j) {
            mpq_class f = frac_part((*relaxed)[j]);
            if (f == 0) continue;
            mpq_class complement = mpq_class(1) - f;
            mpq_class score = f < complement ? f : complement;
            bool better = branch_var < 0 || score > best_score ||
                          (score == best_score &&
                           p.var_weights[j] > p.var_weights[static_cast<size_t>(branch_var)]);
            if (better) {
                branch_var = static_cast<int>(j);
                best_score = score;
            }
        }

        if (branch_var < 0) {
            std::vector<long long> x(nvars);
            for (size_t j = 0; j < nvars; ++j) x[j] = to_ll((*relaxed)[j].get_num());
            return make_witness_outcome(p, x, state.nodes,
                                        "integral LP vertex verified by re-substitution");
        }

        size_t b = static_cast<size_t>(branch_var);
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), (*relaxed)[b].get_num().get_mpz_t(),
                   (*relaxed)[b].get_den().get_mpz_t());
        long long down = to_ll(fl);

        Node up_node = node;
        up_node.lower[b] = down + 1;
        Node down_node = std::move(node);
        down_node.upper[b] = down;
        stack.push_back(std::move(up_node));
        stack.push_back(std::move(down_node));  // explored first
    }

    FeasibilityOutcome out;
    out.nodes = state.nodes;
    if (state.exhausted) {
        out.status = FeasStatus::resource_limit;
        out.certificate_note = state.reason;
    } else {
        out.status = FeasStatus::infeasible;
        out.certificate_note = "branch-and-bound exhausted the search tree";
    }
    return out;
}

FeasibilityOutcome solve_dfs(const FeasibilityProblem& p, const SolveBudget& budget) {
    size_t nvars = p.columns.size();
    for (long long v : p.target)
        if (v < 0)
            throw std::invalid_argument("dfs method requires a nonnegative target");
    for (const auto& col : p.columns)
        for (long long v : col)
            if (v < 0)
                throw std::invalid_argument("dfs method requires nonnegative columns");

    std::vector<size_t> order(nvars);
    for (size_t j = 0; j < nvars; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (p.var_weights[a] != p.var_weights[b]) return p.var_weights[a] > p.var_weights[b];
        return a < b;
    });

    BudgetState state(budget);
    std::vector<long long> residual = p.target;
    std::vector<long long> x(nvars, 0);

    auto rec = [&](auto&& self, size_t oi) -> std::optional<bool> {
        if (!state.take_node() || state.over_time()) return std::nullopt;
        if (oi == nvars)
            return std::all_of(residual.begin(), residual.end(),
                               [](long long r) { return r == 0; });
        size_t j = order[oi];
        const auto& col = p.columns[j];
        long long cap = p.upper_bounds[j];
        for (size_t i = 0; i < col.size(); ++i)
            if (col[i] > 0) cap = std::min(cap, residual[i] / col[i]);
        for (long long v = cap; v >= 0; --v) {
            x[j] = v;
            for (size_t i = 0; i < col.size(); ++i) residual[i] -= v * col[i];
            auto sub = self(self, oi + 1);
            for (size_t i = 0; i < col.size(); ++i) residual[i] += v * col[i];
            if (!sub.has_value()) {
                x[j] = 0;
                return std::nullopt;
            }
            if (*sub) return true;
        }
        x[j] = 0;
        return false;
    };

    auto found = rec(rec, 0);
    FeasibilityOutcome out;
    out.nodes = state.nodes;
    if (!found.has_value()) {
        out.status = FeasStatus::resource_limit;
        out.certificate_note = state.reason;
        return out;
    }
    if (*found)
        return make_witness_outcome(p, x, state.nodes,
                                    "depth-first witness verified by re-substitution");
    out.status = FeasStatus::infeasible;
    out.certificate_note = "depth-first search exhausted the bounded space";
    return out;
}

}  // namespace

FeasibilityOutcome feasible(const FeasibilityProblem& p, const SolveBudget& budget) {
    size_t nvars = p.columns.size();
    if (p.var_labels.size() != nvars || p.upper_bounds.size() != nvars ||
        p.var_weights.size() != nvars)
        throw std::invalid_argument("feasible: inconsistent variable metadata");
    for (const auto& col : p.columns)
        if (col.size() != p.target.size())
            throw std::invalid_argument("feasible: column/target dimension mismatch");
    if (p.row_labels.size() != p.target.size())
        throw std::invalid_argument("feasible: row label count mismatch");
    for (long long u : p.upper_bounds)
        if (u < 0) throw std::invalid_argument("feasible: negative upper bound");

    return budget.method == SolveMethod::dfs ? solve_dfs(p, budget)
                                             : solve_branch_and_bound(p, budget);
}

FeasibilityProblem build_extension_problem(int n, int m, EncodingSpace space) {
    ParkingSpec spec(n, m);
    std::vector<Bipartition> vars = bipartitions_of(n + 1);

    FeasibilityProblem p;
    p.var_labels.reserve(vars.size());
    for (const Bipartition& bp : vars) p.var_labels.push_back(bp.str());

    long long mn = 1;
    for (int i = 0; i < n; ++i) mn *= m;
    for (const Bipartition& bp : vars) {
        long long dim = 1;
        for (int i = 1; i <= bp.first().weight(); ++i)
            dim = dim * (n + 1 - bp.first().weight() + i) / i;
        dim *= reference::hook_length_dimension(bp.first()) *
               reference::hook_length_dimension(bp.second());
        p.var_weights.push_back(dim);
        p.upper_bounds.push_back(mn / dim);
    }

    if (space == EncodingSpace::multiplicity) {
        BipartitionIndex rows(n);
        for (const Bipartition& bp : rows.list()) p.row_labels.push_back(bp.str());
        MultiplicityVector target = parking_decomposition(spec);
        p.target.resize(static_cast<size_t>(rows.size()));
        for (int i = 0; i < rows.size(); ++i)
            p.target[static_cast<size_t>(i)] = target.get(rows.list()[static_cast<size_t>(i)]);
        for (const Bipartition& bp : vars) {
            std::vector<long long> col(static_cast<size_t>(rows.size()), 0);
            for (const Bipartition& down : remove_box(bp))
                col[static_cast<size_t>(rows.index_of(down))] = 1;
            p.columns.push_back(std::move(col));
        }
    } else {
        std::vector<Bipartition> classes = bipartitions_of(n);
        std::vector<Bipartition> embedded;
        embedded.reserve(classes.size());
        for (const Bipartition& c : classes) {
            std::vector<int> parts = c.first().parts();
            parts.push_back(1);
            std::sort(parts.rbegin(), parts.rend());
            embedded.emplace_back(Partition(std::move(parts)), c.second());
        }
        for (const Bipartition& c : classes) p.row_labels.push_back(c.str());
        for (const Bipartition& c : classes)
            p.target.push_back(parking_character(spec, c));
        for (const Bipartition& bp : vars) {
            std::vector<long long> col;
            col.reserve(classes.size());
            for (const Bipartition& ec : embedded)
                col.push_back(irreducible_character(n + 1, bp, ec));
            p.columns.push_back(std::move(col));
        }
    }
    return p;
}

FeasibilityOutcome extension_exists(int n, int m, EncodingSpace space,
                                    const SolveBudget& budget) {
    return feasible(build_extension_problem(n, m, space), budget);
}

}  // namespace octarep
