// Restriction from B_{n+1} to B_n, the restriction matrix R_{n,m} over the
// supports X_{n,m} and X̃_{n,m}, the unitriangular extension solve, and the
// closed-form extension families.

#pragma once

#include <optional>
#include <vector>

#include "octarep/combinatorics.hpp"
#include "octarep/parkingspace.hpp"

namespace octarep {

// Linear extension of the branching rule: each V_{λ,μ} restricts to the
// multiplicity-free sum over single-box removals.
MultiplicityVector restrict_multiplicities(const MultiplicityVector& v);

// 0/1 matrix with rows X_{n,m} and columns X̃_{n,m} (first rows extended by
// one box), both in canonical decreasing order; entry 1 when the row label
// appears in the restriction of the column label.
struct RestrictionMatrix {
    int n = 0;
    int m = 0;
    std::vector<Bipartition> row_index;
    std::vector<Bipartition> col_index;
    std::vector<std::vector<int>> entries;

    bool is_unitriangular() const;
};

RestrictionMatrix build_restriction_matrix(int n, int m);

// Exact integer back-substitution of R_{n,m}·c = parking_decomposition(n,m).
// The solved vector always comes back; the extension is present only when
// every entry is nonnegative.
struct TildeSolveResult {
    int n = 0;
    int m = 0;
    std::vector<Bipartition> col_index;
    std::vector<long long> solved;
    bool nonnegative = false;
    std::optional<MultiplicityVector> extension;
};

TildeSolveResult solve_tilde_extension(int n, int m);

// ⌈a/3⌉, and the same value through the recursion c_a = a − c_{a−1} − c_{a−2}
// with c_1 = c_2 = 1.
long long m3_coefficient(int a);
long long m3_coefficient_recursive(int a);

// The m = 3 extension: coefficient ⌈(λ₁+1−λ₂)/3⌉ at (λ', μ) for each
// ((λ₁,λ₂), μ) in X_{n,3}.
MultiplicityVector closed_form_m3(int n);

// The B_3 extension of EP_{2,ℓ}, valid for every ℓ ≥ 1.
MultiplicityVector ep2_extension(int ell);

// Compares restrict(cand) with parking_decomposition(spec) entrywise.
struct VerifyReport {
    bool ok = false;
    struct Mismatch {
        Bipartition label;
        long long expected = 0;
        long long actual = 0;
    };
    std::vector<Mismatch> mismatches;
};

VerifyReport verify_extension(const MultiplicityVector& cand, const ParkingSpec& spec);

}  // namespace octarep
