// Conjugacy classes, class sizes, and irreducible characters of the signed
// symmetric group B_n, plus inner products and decompositions of class
// functions. Character values come from the induced-class-function formula
// over B_l × B_{n−l} with exact rational intermediates.

#pragma once

#include <gmpxx.h>

#include <vector>

#include "octarep/combinatorics.hpp"

namespace octarep {

// A conjugacy class of B_n: (even-cycle type, odd-cycle type).
using SignedClass = Bipartition;

// 2^n·n!; supported for n ≤ 18.
long long hyp_group_order(int n);

// 2^n·n! / (Π_j (2j)^{a_j}·a_j! · Π_j (2j)^{b_j}·b_j!).
long long hyp_class_size(int n, const SignedClass& c);

// Sign character: product of the nonzero matrix entries, (−1)^{#odd cycles}.
int epsilon(const SignedClass& c);

// Character of V_{λ,μ} = Ind_{B_l×B_{n−l}}^{B_n} L_λ ⊠ (L_μ ⊗ ε) at class c.
long long irreducible_character(int n, const Bipartition& label, const SignedClass& c);

// Integer-valued class function, aligned with bipartitions_of(n).
struct ClassFunction {
    int n = 0;
    std::vector<long long> values;

    long long at(int i) const { return values[static_cast<size_t>(i)]; }
};

// Dense character table; rows (labels) and columns (classes) both run over
// bipartitions_of(n) in canonical order. Immutable once built.
class HypCharacterTable {
public:
    // Entry computations are independent; the parallel build distributes them
    // across OpenMP threads. build_serial is the plain-loop reference.
    static HypCharacterTable build(int n, bool parallel = true);
    static HypCharacterTable build_serial(int n);

    // Rebuilds a table from an already-computed values matrix (e.g. a cache
    // file); the matrix must be square of the right size.
    static HypCharacterTable from_values(int n, std::vector<std::vector<long long>> values);

    int n() const { return n_; }
    const std::vector<Bipartition>& labels() const { return index_.list(); }
    const BipartitionIndex& index() const { return index_; }
    int size() const { return index_.size(); }

    long long value_at(int row, int col) const {
        return values_[static_cast<size_t>(row)][static_cast<size_t>(col)];
    }
    const std::vector<std::vector<long long>>& values() const { return values_; }
    ClassFunction row(int i) const;
    ClassFunction row(const Bipartition& label) const;

private:
    explicit HypCharacterTable(int n) : n_(n), index_(n) {}

    int n_ = 0;
    BipartitionIndex index_;
    std::vector<std::vector<long long>> values_;
};

// (1/|B_n|)·Σ_C |C|·f(C)·g(C), exact.
mpq_class inner_product(const ClassFunction& f, const ClassFunction& g);

// Multiplicity of every irreducible in f; throws std::domain_error if any
// inner product is negative or non-integral (f is then not a character).
MultiplicityVector decompose(const ClassFunction& f, const HypCharacterTable& table);

}  // namespace octarep
