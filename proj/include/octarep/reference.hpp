// Brute-force oracles used only by tests and the benchmark harness. Nothing
// here shares code with the production character routines: group elements are
// explicit signed permutations, S_n tables come from permutation characters by
// Gram elimination, and B_n tables from induced representations built as
// explicit block matrices over a coset basis.

#pragma once

#include <vector>

#include "octarep/combinatorics.hpp"

namespace octarep::reference {

// Signed permutation in image form: image[i] = ±(j+1) means i+1 ↦ ±(j+1).
struct SignedPerm {
    std::vector<int> image;

    int n() const { return static_cast<int>(image.size()); }
    bool operator==(const SignedPerm&) const = default;
    auto operator<=>(const SignedPerm&) const = default;
};

// All 2^n·n! elements of B_n.
std::vector<SignedPerm> all_elements(int n);

// (g ∘ h)(x) = g(h(x)).
SignedPerm compose(const SignedPerm& g, const SignedPerm& h);
SignedPerm inverse(const SignedPerm& g);

// (even-cycle type, odd-cycle type); a cycle is odd when the product of the
// signs met along it is −1.
Bipartition signed_cycle_type(const SignedPerm& g);

// Product of the nonzero entries of the monomial matrix of g.
int product_of_signs(const SignedPerm& g);

// Number of tuples x ∈ (ℤ/mℤ)^n fixed by the permute-and-negate action of g.
long long count_fixed_tuples(const SignedPerm& g, int m);

// p(n) by the pentagonal-number recurrence.
long long partition_count(int n);

// f^λ = |λ|! / Π hooks.
long long hook_length_dimension(const Partition& p);

struct SymBruteTable {
    std::vector<Partition> labels;
    std::vector<Partition> classes;
    std::vector<long long> class_sizes;
    std::vector<std::vector<long long>> values;  // [label][class]
};

// Full S_n character table: classes by enumerating all n! permutations,
// permutation-module characters by counting fixed tabloids, irreducibles
// peeled off by Gram elimination in decreasing lexicographic order.
// Practical for n ≤ 5.
SymBruteTable sym_table_bruteforce(int n);

struct HypBruteTable {
    std::vector<Bipartition> labels;
    std::vector<Bipartition> classes;
    std::vector<long long> class_sizes;
    std::vector<std::vector<long long>> values;  // [label][class]
};

// Full B_n character table from explicit matrices: for each label (λ,μ) the
// induced representation Ind_{B_l×B_{n−l}}^{B_n} L_λ ⊠ (L_μ ⊗ ε) is built as
// block matrices over a coset basis and traced on every group element, with
// class constancy checked along the way. Practical for n ≤ 3.
HypBruteTable hyp_table_bruteforce(int n);

}  // namespace octarep::reference
