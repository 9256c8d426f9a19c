#include "octarep/symchar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace octarep {

long long sym_class_size(const Partition& alpha) {
    int n = alpha.weight();
    if (n > 20) throw std::invalid_argument("sym_class_size: n too large for exact long long");
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    long long z = 1;
    int run = 0, prev = 0;
    for (int i = 0; i <= alpha.rows(); ++i) {
        int part = i < alpha.rows() ? alpha.part(i) : 0;
        if (part == prev) {
            ++run;
        } else {
            for (int r = 1; r <= run; ++r) z *= static_cast<long long>(prev) * r;
            prev = part;
            run = 1;
        }
    }
    if (fact % z != 0) throw std::logic_error("sym_class_size: non-integer quotient");
    return fact / z;
}

namespace {

using Memo = std::map<std::pair<std::vector<int>, size_t>, long long>;

// Removes border strips of length parts[idx] from shape in all possible ways
// (via first-column hook lengths) and recurses on the rest.
long long mn_recurse(const std::vector<int>& shape, const std::vector<int>& parts,
                     size_t idx, Memo& memo) {
    if (idx == parts.size()) return 1;
    auto key = std::make_pair(shape, idx);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = static_cast<int>(shape.size());
    int t = parts[idx];
    std::vector<int> beta(shape.size());
    for (int i = 0; i < r; ++i)
        beta[static_cast<size_t>(i)] = shape[static_cast<size_t>(i)] + (r - 1 - i);

    long long total = 0;
    for (int i = 0; i < r; ++i) {
        int b = beta[static_cast<size_t>(i)];
        if (b < t) continue;
        int target = b - t;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < r; ++j) {
            int c = beta[static_cast<size_t>(j)];
            if (c == target) occupied = true;
            if (c > target && c < b) ++between;
        }
        if (occupied) continue;

        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> next;
        next.reserve(nb.size());
        for (int j = 0; j < r; ++j) {
            int part = nb[static_cast<size_t>(j)] - (r - 1 - j);
            if (part > 0) next.push_back(part);
        }
        long long sub = mn_recurse(next, parts, idx + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace

long long sym_character(const Partition& lambda, const Partition& alpha) {
    if (lambda.weight() != alpha.weight())
        throw std::invalid_argument("sym_character: |lambda| != |alpha|");
    Memo memo;
    return mn_recurse(lambda.parts(), alpha.parts(), 0, memo);
}

SymCharacterTable::SymCharacterTable(int n) : n_(n), labels_(partitions_of(n)) {
    values_.reserve(labels_.size());
    for (const Partition& lam : labels_) {
        std::vector<long long> row;
        row.reserve(labels_.size());
        for (const Partition& alpha : labels_) row.push_back(sym_character(lam, alpha));
        values_.push_back(std::move(row));
    }
}

SymCharacterTable SymCharacterTable::from_values(int n,
                                                 std::vector<std::vector<long long>> values) {
    SymCharacterTable t;
    t.n_ = n;
    t.labels_ = partitions_of(n);
    if (values.size() != t.labels_.size())
        throw std::invalid_argument("SymCharacterTable::from_values: wrong row count");
    for (const auto& row : values)
        if (row.size() != t.labels_.size())
            throw std::invalid_argument("SymCharacterTable::from_values: ragged matrix");
    t.values_ = std::move(values);
    return t;
}

long long SymCharacterTable::value(const Partition& lambda, const Partition& alpha) const {
    auto find = [&](const Partition& p) {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), p, std::greater<>{});
        if (it == labels_.end() || !(*it == p))
            throw std::out_of_range("SymCharacterTable: not a partition of " + std::to_string(n_));
        return static_cast<int>(it - labels_.begin());
    };
    return value_at(find(lambda), find(alpha));
}

}  // namespace octarep
