#include "octarep/hypchar.hpp"

#include <algorithm>
#include <stdexcept>

#include "octarep/exact.hpp"
#include "octarep/symchar.hpp"

namespace octarep {

long long hyp_group_order(int n) {
    if (n < 0 || n > 16)
        throw std::invalid_argument("hyp_group_order: n out of exact long long range");
    long long order = 1;
    for (int i = 1; i <= n; ++i) order *= 2LL * i;
    return order;
}

namespace {

// Π_j (2j)^{m_j}·m_j! over the part multiplicities of p.
long long centralizer_factor(const Partition& p) {
    long long z = 1;
    int run = 0, prev = 0;
    for (int i = 0; i <= p.rows(); ++i) {
        int part = i < p.rows() ? p.part(i) : 0;
        if (part == prev) {
            ++run;
        } else {
            for (int r = 1; r <= run; ++r) z *= 2LL * prev * r;
            prev = part;
            run = 1;
        }
    }
    return z;
}

// All sub-multisets of the parts of p, each returned with its complement;
// components stay sorted decreasingly because parts are scanned in order.
struct Split {
    std::vector<int> taken;
    std::vector<int> rest;
};

std::vector<Split> sub_multisets(const Partition& p) {
    std::vector<std::pair<int, int>> groups;  // (value, count)
    for (int i = 0; i < p.rows(); ++i) {
        if (!groups.empty() && groups.back().first == p.part(i))
            groups.back().second += 1;
        else
            groups.emplace_back(p.part(i), 1);
    }
    std::vector<Split> out;
    Split cur;
    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == groups.size()) {
            out.push_back(cur);
            return;
        }
        auto [value, count] = groups[gi];
        for (int take = 0; take <= count; ++take) {
            size_t t = cur.taken.size(), r = cur.rest.size();
            for (int i = 0; i < take; ++i) cur.taken.push_back(value);
            for (int i = take; i < count; ++i) cur.rest.push_back(value);
            self(self, gi + 1);
            cur.taken.resize(t);
            cur.rest.resize(r);
        }
    };
    rec(rec, 0);
    return out;
}

Partition merged_type(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> parts;
    parts.reserve(a.size() + b.size());
    parts.insert(parts.end(), a.begin(), a.end());
    parts.insert(parts.end(), b.begin(), b.end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

int int_sum(const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

}  // namespace

long long hyp_class_size(int n, const SignedClass& c) {
    if (c.weight() != n) throw std::invalid_argument("hyp_class_size: |c| != n");
    long long z = centralizer_factor(c.first()) * centralizer_factor(c.second());
    long long order = hyp_group_order(n);
    if (order % z != 0) throw std::logic_error("hyp_class_size: non-integer quotient");
    return order / z;
}

int epsilon(const SignedClass& c) {
    return c.second().rows() % 2 == 0 ? 1 : -1;
}

long long irreducible_character(int n, const Bipartition& label, const SignedClass& c) {
    if (label.weight() != n || c.weight() != n)
        throw std::invalid_argument("irreducible_character: size mismatch");
    int l = label.first().weight();

    // Classes D of B_l × B_{n−l} meeting C correspond to sub-multiset splits
    // of the even and odd cycle types with first-factor weight l.
    mpq_class acc = 0;
    for (const Split& even : sub_multisets(c.first())) {
        int w_even = int_sum(even.taken);
        if (w_even > l) continue;
        for (const Split& odd : sub_multisets(c.second())) {
            if (w_even + int_sum(odd.taken) != l) continue;
            SignedClass c1{Partition(even.taken), Partition(odd.taken)};
            SignedClass c2{Partition(even.rest), Partition(odd.rest)};
            mpz_class d_size = to_mpz(hyp_class_size(l, c1)) *
                               to_mpz(hyp_class_size(n - l, c2));
            long long inner = sym_character(label.first(), merged_type(even.taken, odd.taken)) *
                              sym_character(label.second(), merged_type(even.rest, odd.rest)) *
                              epsilon(c2);
            acc += mpq_class(d_size * to_mpz(inner));
        }
    }
    mpq_class result = acc * mpq_class(to_mpz(hyp_group_order(n)),
                                       to_mpz(hyp_group_order(l)) *
                                           to_mpz(hyp_group_order(n - l)) *
                                           to_mpz(hyp_class_size(n, c)));
    result.canonicalize();
    if (result.get_den() != 1)
        throw std::logic_error("irreducible_character: non-integer value for " + label.str() +
                               " at " + c.str());
    return to_ll(result.get_num());
}

HypCharacterTable HypCharacterTable::build(int n, bool parallel) {
    HypCharacterTable t(n);
    int size = t.index_.size();
    t.values_.assign(static_cast<size_t>(size), std::vector<long long>(static_cast<size_t>(size), 0));
    const auto& list = t.index_.list();
    if (!parallel) {
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j)
                t.values_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    irreducible_character(n, list[static_cast<size_t>(i)],
                                          list[static_cast<size_t>(j)]);
        return t;
    }
#pragma omp parallel for schedule(dynamic, 8)
    for (int flat = 0; flat < size * size; ++flat) {
        int i = flat / size, j = flat % size;
        t.values_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            irreducible_character(n, list[static_cast<size_t>(i)], list[static_cast<size_t>(j)]);
    }
    return t;
}

HypCharacterTable HypCharacterTable::build_serial(int n) {
    return build(n, false);
}

HypCharacterTable HypCharacterTable::from_values(int n,
                                                 std::vector<std::vector<long long>> values) {
    HypCharacterTable t(n);
    size_t count = static_cast<size_t>(t.size());
    if (values.size() != count)
        throw std::invalid_argument("HypCharacterTable::from_values: wrong row count");
    for (const auto& row : values)
        if (row.size() != count)
            throw std::invalid_argument("HypCharacterTable::from_values: ragged matrix");
    t.values_ = std::move(values);
    return t;
}

ClassFunction HypCharacterTable::row(int i) const {
    return ClassFunction{n_, values_[static_cast<size_t>(i)]};
}

ClassFunction HypCharacterTable::row(const Bipartition& label) const {
    return row(index_.index_of(label));
}

mpq_class inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n) throw std::invalid_argument("inner_product: mismatched n");
    std::vector<Bipartition> classes = bipartitions_of(f.n);
    if (f.values.size() != classes.size() || g.values.size() != classes.size())
        throw std::invalid_argument("inner_product: wrong value count");
    mpz_class acc = 0;
    for (size_t i = 0; i < classes.size(); ++i)
        acc += to_mpz(hyp_class_size(f.n, classes[i])) * to_mpz(f.values[i]) *
               to_mpz(g.values[i]);
    mpq_class result(acc, to_mpz(hyp_group_order(f.n)));
    result.canonicalize();
    return result;
}

MultiplicityVector decompose(const ClassFunction& f, const HypCharacterTable& table) {
    if (f.n != table.n()) throw std::invalid_argument("decompose: mismatched n");
    MultiplicityVector out(f.n);
    for (int i = 0; i < table.size(); ++i) {
        mpq_class q = inner_product(f, table.row(i));
        if (q.get_den() != 1 || q < 0)
            throw std::domain_error("decompose: multiplicity of " +
                                    table.labels()[static_cast<size_t>(i)].str() +
                                    " is not a nonnegative integer");
        out.set(table.labels()[static_cast<size_t>(i)], to_ll(q.get_num()));
    }
    return out;
}

}  // namespace octarep
