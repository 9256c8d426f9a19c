#include "octarep/reference.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace octarep::reference {

namespace {

using Mat = std::vector<std::vector<long long>>;

long long trace(const Mat& a) {
    long long t = 0;
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

Mat kron(const Mat& a, const Mat& b) {
    size_t ra = a.size(), ca = ra ? a[0].size() : 0;
    size_t rb = b.size(), cb = rb ? b[0].size() : 0;
    Mat out(ra * rb, std::vector<long long>(ca * cb, 0));
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < ca; ++j)
            for (size_t k = 0; k < rb; ++k)
                for (size_t l = 0; l < cb; ++l)
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return out;
}

int perm_sign(const std::vector<int>& pi) {
    int k = static_cast<int>(pi.size());
    std::vector<bool> seen(static_cast<size_t>(k), false);
    int cycles = 0;
    for (int i = 0; i < k; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = pi[static_cast<size_t>(j)])
            seen[static_cast<size_t>(j)] = true;
    }
    return (k - cycles) % 2 == 0 ? 1 : -1;
}

// Matrix of the S_k irreducible labeled lam at the permutation pi (one-line,
// 0-indexed). Covers every partition of k ≤ 3: trivial, sign, and the
// standard representation (k−1,1) in the basis v_i = e_i − e_{i+1}.
Mat sym_irrep_matrix(const Partition& lam, const std::vector<int>& pi) {
    int k = static_cast<int>(pi.size());
    if (lam.weight() != k)
        throw std::invalid_argument("sym_irrep_matrix: size mismatch");
    if (k == 0 || lam.rows() <= 1) return {{1}};
    if (lam.part(0) == 1) return {{perm_sign(pi)}};
    if (lam == Partition({k - 1, 1}) && k >= 3) {
        Mat m(static_cast<size_t>(k - 1), std::vector<long long>(static_cast<size_t>(k - 1), 0));
        for (int i = 0; i + 1 < k; ++i) {
            int a = pi[static_cast<size_t>(i)], b = pi[static_cast<size_t>(i + 1)];
            // e_a − e_b expanded in the v basis.
            if (a < b)
                for (int r = a; r < b; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(i)] = 1;
            else
                for (int r = b; r < a; ++r) m[static_cast<size_t>(r)][static_cast<size_t>(i)] = -1;
        }
        return m;
    }
    throw std::logic_error("sym_irrep_matrix: unsupported shape " + lam.str());
}

Partition cycle_type(const std::vector<int>& pi) {
    int k = static_cast<int>(pi.size());
    std::vector<bool> seen(static_cast<size_t>(k), false);
    std::vector<int> lens;
    for (int i = 0; i < k; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = pi[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

}  // namespace

std::vector<SignedPerm> all_elements(int n) {
    if (n < 0) throw std::invalid_argument("all_elements: negative n");
    std::vector<int> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<SignedPerm> out;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            SignedPerm g;
            g.image.resize(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                int v = base[static_cast<size_t>(i)] + 1;
                g.image[static_cast<size_t>(i)] = (mask >> i & 1u) ? -v : v;
            }
            out.push_back(std::move(g));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

SignedPerm compose(const SignedPerm& g, const SignedPerm& h) {
    if (g.n() != h.n()) throw std::invalid_argument("compose: size mismatch");
    SignedPerm out;
    out.image.resize(h.image.size());
    for (size_t i = 0; i < h.image.size(); ++i) {
        int hv = h.image[i];
        int gv = g.image[static_cast<size_t>(std::abs(hv) - 1)];
        out.image[i] = hv > 0 ? gv : -gv;
    }
    return out;
}

SignedPerm inverse(const SignedPerm& g) {
    SignedPerm out;
    out.image.resize(g.image.size());
    for (size_t i = 0; i < g.image.size(); ++i) {
        int v = g.image[i];
        int j = std::abs(v) - 1;
        out.image[static_cast<size_t>(j)] =
            v > 0 ? static_cast<int>(i) + 1 : -(static_cast<int>(i) + 1);
    }
    return out;
}

Bipartition signed_cycle_type(const SignedPerm& g) {
    int n = g.n();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> even, odd;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0, sign = 1, j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            int v = g.image[static_cast<size_t>(j)];
            if (v < 0) sign = -sign;
            j = std::abs(v) - 1;
            ++len;
        }
        (sign > 0 ? even : odd).push_back(len);
    }
    std::sort(even.rbegin(), even.rend());
    std::sort(odd.rbegin(), odd.rend());
    return Bipartition(Partition(std::move(even)), Partition(std::move(odd)));
}

int product_of_signs(const SignedPerm& g) {
    int s = 1;
    for (int v : g.image)
        if (v < 0) s = -s;
    return s;
}

long long count_fixed_tuples(const SignedPerm& g, int m) {
    if (m < 1) throw std::invalid_argument("count_fixed_tuples: m must be positive");
    int n = g.n();
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= m;
    long long fixed = 0;
    std::vector<int> x(static_cast<size_t>(n)), y(static_cast<size_t>(n));
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < n; ++i) {
            x[static_cast<size_t>(i)] = static_cast<int>(c % m);
            c /= m;
        }
        for (int i = 0; i < n; ++i) {
            int v = g.image[static_cast<size_t>(i)];
            int target = std::abs(v) - 1;
            int val = v > 0 ? x[static_cast<size_t>(i)] : (m - x[static_cast<size_t>(i)]) % m;
            y[static_cast<size_t>(target)] = val;
        }
        if (x == y) ++fixed;
    }
    return fixed;
}

long long partition_count(int n) {
    if (n < 0) throw std::invalid_argument("partition_count: negative n");
    std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = 1;
    for (int i = 1; i <= n; ++i) {
        long long acc = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > i && g2 > i) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= i) acc += sign * p[static_cast<size_t>(i - g1)];
            if (g2 <= i) acc += sign * p[static_cast<size_t>(i - g2)];
        }
        p[static_cast<size_t>(i)] = acc;
    }
    return p[static_cast<size_t>(n)];
}

long long hook_length_dimension(const Partition& p) {
    int n = p.weight();
    std::vector<int> conj(static_cast<size_t>(p.part(0)), 0);
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.part(i); ++j) conj[static_cast<size_t>(j)] += 1;
    long long hooks = 1;
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.part(i); ++j)
            hooks *= p.part(i) - j + conj[static_cast<size_t>(j)] - i - 1;
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (fact % hooks != 0)
        throw std::logic_error("hook_length_dimension: non-integer quotient");
    return fact / hooks;
}

namespace {

// Number of ways to place labeled cycles with the given lengths into rows of
// capacities caps, filling each row exactly; this is the permutation-module
// character at a permutation with that cycle multiset.
long long count_tabloid_fixings(const std::vector<int>& lens, size_t idx,
                                std::vector<int>& caps) {
    if (idx == lens.size()) return 1;
    long long total = 0;
    for (size_t r = 0; r < caps.size(); ++r) {
        if (caps[r] < lens[idx]) continue;
        caps[r] -= lens[idx];
        total += count_tabloid_fixings(lens, idx + 1, caps);
        caps[r] += lens[idx];
    }
    return total;
}

}  // namespace

SymBruteTable sym_table_bruteforce(int n) {
    SymBruteTable t;
    t.labels = partitions_of(n);
    t.classes = t.labels;
    size_t nc = t.classes.size();
    std::map<Partition, int> class_pos;
    for (size_t i = 0; i < nc; ++i) class_pos[t.classes[i]] = static_cast<int>(i);

    t.class_sizes.assign(nc, 0);
    std::vector<int> base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    long long order = 0;
    do {
        t.class_sizes[static_cast<size_t>(class_pos.at(cycle_type(base)))] += 1;
        ++order;
    } while (std::next_permutation(base.begin(), base.end()));

    // Permutation-module characters, one row per partition.
    std::vector<std::vector<long long>> phi(t.labels.size(),
                                            std::vector<long long>(nc, 0));
    for (size_t li = 0; li < t.labels.size(); ++li) {
        std::vector<int> caps = t.labels[li].parts();
        for (size_t ci = 0; ci < nc; ++ci)
            phi[li][ci] = count_tabloid_fixings(t.classes[ci].parts(), 0, caps);
    }

    auto dot = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
        long long s = 0;
        for (size_t i = 0; i < nc; ++i) s += t.class_sizes[i] * a[i] * b[i];
        if (s % order != 0)
            throw std::logic_error("sym_table_bruteforce: non-integer inner product");
        return s / order;
    };

    // Decreasing lexicographic order guarantees every irreducible hidden in
    // phi[li] other than its own has already been extracted.
    t.values.assign(t.labels.size(), {});
    for (size_t li = 0; li < t.labels.size(); ++li) {
        std::vector<long long> v = phi[li];
        for (size_t prev = 0; prev < li; ++prev) {
            long long c = dot(v, t.values[prev]);
            for (size_t i = 0; i < nc; ++i) v[i] -= c * t.values[prev][i];
        }
        if (dot(v, v) != 1 || v[nc - 1] <= 0)
            throw std::logic_error("sym_table_bruteforce: peeling failed");
        t.values[li] = std::move(v);
    }
    return t;
}

HypBruteTable hyp_table_bruteforce(int n) {
    HypBruteTable t;
    t.labels = bipartitions_of(n);
    t.classes = t.labels;
    size_t nc = t.classes.size();
    std::map<Bipartition, int> class_pos;
    for (size_t i = 0; i < nc; ++i) class_pos[t.classes[i]] = static_cast<int>(i);

    std::vector<SignedPerm> elements = all_elements(n);
    std::vector<int> elem_class(elements.size());
    t.class_sizes.assign(nc, 0);
    for (size_t e = 0; e < elements.size(); ++e) {
        int c = class_pos.at(signed_cycle_type(elements[e]));
        elem_class[e] = c;
        t.class_sizes[static_cast<size_t>(c)] += 1;
    }

    t.values.assign(t.labels.size(), std::vector<long long>(nc, 0));
    for (size_t li = 0; li < t.labels.size(); ++li) {
        const Bipartition& label = t.labels[li];
        int l = label.first().weight();

        // H = B_l × B_{n−l}: signed permutations preserving the first block.
        auto in_subgroup = [&](const SignedPerm& g) {
            for (int i = 0; i < l; ++i)
                if (std::abs(g.image[static_cast<size_t>(i)]) > l) return false;
            return true;
        };
        std::vector<SignedPerm> reps;
        for (const SignedPerm& g : elements) {
            bool fresh = true;
            for (const SignedPerm& r : reps)
                if (in_subgroup(compose(inverse(r), g))) {
                    fresh = false;
                    break;
                }
            if (fresh) reps.push_back(g);
        }

        // Block ρ_H(h) = M_λ(π₁) ⊗ (ε₂ · M_μ(π₂)).
        auto subgroup_block = [&](const SignedPerm& h) {
            std::vector<int> pi1(static_cast<size_t>(l)), pi2(static_cast<size_t>(n - l));
            int eps2 = 1;
            for (int i = 0; i < l; ++i)
                pi1[static_cast<size_t>(i)] = std::abs(h.image[static_cast<size_t>(i)]) - 1;
            for (int i = l; i < n; ++i) {
                int v = h.image[static_cast<size_t>(i)];
                pi2[static_cast<size_t>(i - l)] = std::abs(v) - 1 - l;
                if (v < 0) eps2 = -eps2;
            }
            Mat block = kron(sym_irrep_matrix(label.first(), pi1),
                             sym_irrep_matrix(label.second(), pi2));
            if (eps2 < 0)
                for (auto& row : block)
                    for (auto& x : row) x = -x;
            return block;
        };

        size_t d = subgroup_block(elements[0]).size();  // identity block size
        size_t dim = reps.size() * d;
        std::vector<long long> computed(elements.size());
        for (size_t e = 0; e < elements.size(); ++e) {
            Mat full(dim, std::vector<long long>(dim, 0));
            for (size_t bi = 0; bi < reps.size(); ++bi)
                for (size_t bj = 0; bj < reps.size(); ++bj) {
                    SignedPerm h = compose(inverse(reps[bi]), compose(elements[e], reps[bj]));
                    if (!in_subgroup(h)) continue;
                    Mat block = subgroup_block(h);
                    for (size_t r = 0; r < d; ++r)
                        for (size_t c = 0; c < d; ++c)
                            full[bi * d + r][bj * d + c] = block[r][c];
                }
            computed[e] = trace(full);
        }

        std::vector<bool> assigned(nc, false);
        for (size_t e = 0; e < elements.size(); ++e) {
            size_t c = static_cast<size_t>(elem_class[e]);
            if (!assigned[c]) {
                t.values[li][c] = computed[e];
                assigned[c] = true;
            } else if (t.values[li][c] != computed[e]) {
                throw std::logic_error("hyp_table_bruteforce: character not constant on class");
            }
        }
    }
    return t;
}

}  // namespace octarep::reference
