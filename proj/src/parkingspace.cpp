#include "octarep/parkingspace.hpp"

#include <stdexcept>

#include "octarep/exact.hpp"

namespace octarep {

ParkingSpec::ParkingSpec(int n_, int m_) : n(n_), m(m_) {
    if (n < 1) throw std::invalid_argument("ParkingSpec: n must be positive");
    if (m < 1) throw std::invalid_argument("ParkingSpec: m must be positive");
}

int ParkingSpec::k() const {
    if (!odd()) throw std::logic_error("ParkingSpec::k: m is even");
    return (m - 1) / 2;
}

int ParkingSpec::ell() const {
    if (odd()) throw std::logic_error("ParkingSpec::ell: m is odd");
    return m / 2;
}

long long parking_character(const ParkingSpec& spec, const SignedClass& c) {
    if (c.weight() != spec.n)
        throw std::invalid_argument("parking_character: |c| != n");
    long long value = 1;
    for (int i = 0; i < c.first().rows(); ++i) value *= spec.m;
    if (!spec.odd())
        for (int i = 0; i < c.second().rows(); ++i) value *= 2;
    return value;
}

ClassFunction parking_character_fn(const ParkingSpec& spec) {
    ClassFunction f{spec.n, {}};
    for (const Bipartition& c : bipartitions_of(spec.n))
        f.values.push_back(parking_character(spec, c));
    return f;
}

long long weyl_dim(const Partition& lambda, int a) {
    if (a < 0) throw std::invalid_argument("weyl_dim: negative dimension");
    if (lambda.rows() > a) return 0;
    mpz_class num = 1, den = 1;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) {
            num *= lambda.part(i) - lambda.part(j) + j - i;
            den *= j - i;
        }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("weyl_dim: non-integer quotient");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return to_ll(q);
}

MultiplicityVector parking_decomposition(const ParkingSpec& spec) {
    int a_first = spec.odd() ? spec.k() + 1 : spec.ell() + 1;
    int a_second = spec.odd() ? spec.k() : spec.ell() - 1;
    MultiplicityVector out(spec.n);
    for (const Bipartition& bp : bipartitions_of(spec.n)) {
        long long mult = weyl_dim(bp.first(), a_first) * weyl_dim(bp.second(), a_second);
        if (mult != 0) out.set(bp, mult);
    }
    return out;
}

std::vector<Bipartition> support(const ParkingSpec& spec) {
    int rows_first = spec.odd() ? spec.k() + 1 : spec.ell() + 1;
    int rows_second = spec.odd() ? spec.k() : spec.ell() - 1;
    std::vector<Bipartition> out;
    for (const Bipartition& bp : bipartitions_of(spec.n))
        if (bp.first().rows() <= rows_first && bp.second().rows() <= rows_second)
            out.push_back(bp);
    return out;
}

}  // namespace octarep
