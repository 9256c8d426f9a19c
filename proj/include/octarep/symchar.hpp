// Irreducible characters of the symmetric group S_n, evaluated exactly by the
// Murnaghan–Nakayama border-strip recursion.

#pragma once

#include <vector>

#include "octarep/combinatorics.hpp"

namespace octarep {

// n!/z_α where z_α = Π_j j^{m_j}·m_j!. Supported for |α| ≤ 20.
long long sym_class_size(const Partition& alpha);

// Character of L_λ at cycle type α; requires |λ| = |α|. Class parts are
// consumed largest-first with memoization on (shape, parts consumed).
long long sym_character(const Partition& lambda, const Partition& alpha);

// Dense table with rows (labels) and columns (classes) both running over
// partitions_of(n) in canonical order.
class SymCharacterTable {
public:
    explicit SymCharacterTable(int n);

    // Rebuilds a table from an already-computed values matrix (e.g. a cache
    // file); the matrix must be square of the right size.
    static SymCharacterTable from_values(int n, std::vector<std::vector<long long>> values);

    int n() const { return n_; }
    const std::vector<Partition>& labels() const { return labels_; }
    long long value_at(int row, int col) const {
        return values_[static_cast<size_t>(row)][static_cast<size_t>(col)];
    }
    long long value(const Partition& lambda, const Partition& alpha) const;

private:
    SymCharacterTable() = default;

    int n_ = 0;
    std::vector<Partition> labels_;
    std::vector<std::vector<long long>> values_;
};

}  // namespace octarep
