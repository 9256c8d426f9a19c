#include "octarep/branching.hpp"

#include <algorithm>
#include <stdexcept>

namespace octarep {

MultiplicityVector restrict_multiplicities(const MultiplicityVector& v) {
    if (v.n() < 1)
        throw std::invalid_argument("restrict_multiplicities: nothing below n = 0");
    MultiplicityVector out(v.n() - 1);
    for (const auto& [bp, mult] : v.entries())
        for (const Bipartition& down : remove_box(bp)) out.add(down, mult);
    return out;
}

bool RestrictionMatrix::is_unitriangular() const {
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i][i] != 1) return false;
        for (size_t j = 0; j < i; ++j)
            if (entries[i][j] != 0) return false;
    }
    return true;
}

RestrictionMatrix build_restriction_matrix(int n, int m) {
    RestrictionMatrix r;
    r.n = n;
    r.m = m;
    r.row_index = support(ParkingSpec(n, m));
    r.col_index.reserve(r.row_index.size());
    for (const Bipartition& bp : r.row_index)
        r.col_index.emplace_back(first_row_extend(bp.first()), bp.second());

    r.entries.assign(r.row_index.size(), std::vector<int>(r.col_index.size(), 0));
    for (size_t j = 0; j < r.col_index.size(); ++j) {
        for (const Bipartition& down : remove_box(r.col_index[j])) {
            auto it = std::lower_bound(r.row_index.begin(), r.row_index.end(), down,
                                       std::greater<>{});
            if (it != r.row_index.end() && *it == down)
                r.entries[static_cast<size_t>(it - r.row_index.begin())][j] = 1;
        }
    }
    return r;
}

TildeSolveResult solve_tilde_extension(int n, int m) {
    RestrictionMatrix r = build_restriction_matrix(n, m);
    MultiplicityVector target = parking_decomposition(ParkingSpec(n, m));
    for (const Bipartition& bp : target.support())
        if (!std::binary_search(r.row_index.begin(), r.row_index.end(), bp,
                                std::greater<>{}))
            throw std::logic_error("solve_tilde_extension: target outside X_{n,m}");

    size_t size = r.row_index.size();
    std::vector<long long> v(size);
    for (size_t i = 0; i < size; ++i) v[i] = target.get(r.row_index[i]);

    TildeSolveResult out;
    out.n = n;
    out.m = m;
    out.col_index = r.col_index;
    out.solved.assign(size, 0);
    for (size_t i = size; i-- > 0;) {
        long long c = v[i];
        for (size_t j = i + 1; j < size; ++j) c -= r.entries[i][j] * out.solved[j];
        out.solved[i] = c;
    }
    out.nonnegative =
        std::all_of(out.solved.begin(), out.solved.end(), [](long long c) { return c >= 0; });
    if (out.nonnegative) {
        MultiplicityVector ext(n + 1);
        for (size_t j = 0; j < size; ++j) ext.set(r.col_index[j], out.solved[j]);
        out.extension = std::move(ext);
    }
    return out;
}

long long m3_coefficient(int a) {
    if (a < 1) throw std::invalid_argument("m3_coefficient: a must be positive");
    return (a + 2) / 3;
}

long long m3_coefficient_recursive(int a) {
    if (a < 1) throw std::invalid_argument("m3_coefficient_recursive: a must be positive");
    std::vector<long long> c(static_cast<size_t>(a) + 1, 1);
    for (int i = 3; i <= a; ++i)
        c[static_cast<size_t>(i)] =
            i - c[static_cast<size_t>(i - 1)] - c[static_cast<size_t>(i - 2)];
    return c[static_cast<size_t>(a)];
}

MultiplicityVector closed_form_m3(int n) {
    if (n < 1) throw std::invalid_argument("closed_form_m3: n must be positive");
    MultiplicityVector out(n + 1);
    for (const Bipartition& bp : support(ParkingSpec(n, 3)))
        out.set(Bipartition(first_row_extend(bp.first()), bp.second()),
                m3_coefficient(bp.first().part(0) + 1 - bp.first().part(1)));
    return out;
}

MultiplicityVector ep2_extension(int ell) {
    if (ell < 1) throw std::invalid_argument("ep2_extension: ell must be positive");
    long long L = ell;
    MultiplicityVector out(3);
    out.set(Bipartition::parse("[3]|[]"), L + 1);
    out.set(Bipartition::parse("[2,1]|[]"), L * (L + 1) / 2 - (L - 1));
    out.set(Bipartition::parse("[2]|[1]"), L - 1);
    out.set(Bipartition::parse("[1,1]|[1]"), L - 1);
    out.set(Bipartition::parse("[1]|[2]"), L * (L - 1) / 2);
    out.set(Bipartition::parse("[1]|[1,1]"), (L - 1) * (L - 2) / 2);
    return out;
}

VerifyReport verify_extension(const MultiplicityVector& cand, const ParkingSpec& spec) {
    if (cand.n() != spec.n + 1)
        throw std::invalid_argument("verify_extension: candidate must live over n+1");
    MultiplicityVector actual = restrict_multiplicities(cand);
    MultiplicityVector expected = parking_decomposition(spec);
    VerifyReport report;
    report.ok = true;
    for (const Bipartition& bp : bipartitions_of(spec.n)) {
        long long e = expected.get(bp), a = actual.get(bp);
        if (e != a) {
            report.ok = false;
            report.mismatches.push_back({bp, e, a});
        }
    }
    return report;
}

}  // namespace octarep
