// Generalized parking spaces ℂ[(ℤ/mℤ)^n] as B_n-representations: their
// characters, Weyl-dimension closed-form decompositions, and supports.

#pragma once

#include <vector>

#include "octarep/combinatorics.hpp"
#include "octarep/hypchar.hpp"

namespace octarep {

// The space ℂ[(ℤ/mℤ)^n]. Odd m = 2k+1 and even m = 2ℓ behave differently;
// m = 1 is the degenerate trivial representation (k = 0).
struct ParkingSpec {
    int n;
    int m;

    ParkingSpec(int n_, int m_);

    bool odd() const { return m % 2 == 1; }
    int k() const;    // (m−1)/2, odd m only
    int ell() const;  // m/2, even m only
};

// Fixed-point count of any element of class c: m odd → m^{ℓ_even};
// m even → 2^{ℓ_odd}·m^{ℓ_even}.
long long parking_character(const ParkingSpec& spec, const SignedClass& c);

// The full character as a class function over bipartitions_of(n).
ClassFunction parking_character_fn(const ParkingSpec& spec);

// Weyl dimension d(λ, a) of the Schur functor 𝕊^λ on an a-dimensional space:
// zero when rows(λ) > a, else Π_{i<j≤a}(λ_i−λ_j+j−i)/(j−i).
long long weyl_dim(const Partition& lambda, int a);

// Closed-form decomposition: multiplicity of V_{λ,μ} is d(λ,k+1)·d(μ,k) for
// m = 2k+1 and d(λ,ℓ+1)·d(μ,ℓ−1) for m = 2ℓ. Zero entries are omitted.
MultiplicityVector parking_decomposition(const ParkingSpec& spec);

// X_{n,m}: the support of the decomposition in canonical decreasing order;
// equivalently the bipartitions with rows(λ) ≤ k+1, rows(μ) ≤ k (odd m) or
// rows(λ) ≤ ℓ+1, rows(μ) ≤ ℓ−1 (even m).
std::vector<Bipartition> support(const ParkingSpec& spec);

}  // namespace octarep
