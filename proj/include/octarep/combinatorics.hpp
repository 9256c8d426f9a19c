// Partitions, bipartitions, Young-diagram box moves, and the total order
// used to index every matrix in this project. All values are immutable
// after construction and all operations are pure.

#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace octarep {

// Weakly decreasing sequence of positive integers. Trailing zeros are never
// stored, so the empty sequence is the unique partition of 0 and equality of
// the stored parts is equality of partitions.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Parses the canonical text form, e.g. "[2,1]" or "[]".
    static Partition parse(std::string_view text);

    int weight() const { return weight_; }          // |λ|
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // Zero-padded access: part(i) == 0 for i >= rows().
    int part(int i) const {
        return (i >= 0 && i < rows()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    std::string str() const;

    bool operator==(const Partition&) const = default;
    // Lexicographic comparison with zero padding; total on all partitions.
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Ordered pair of partitions. Depending on context this labels either an
// irreducible representation of B_n or a conjugacy class of B_n (first
// component = even-cycle type, second = odd-cycle type).
class Bipartition {
public:
    Bipartition() = default;
    Bipartition(Partition first, Partition second);

    // Parses "[2,1]|[1]".
    static Bipartition parse(std::string_view text);

    const Partition& first() const { return first_; }
    const Partition& second() const { return second_; }
    int weight() const { return first_.weight() + second_.weight(); }

    std::string str() const;

    bool operator==(const Bipartition&) const = default;
    // First components compared lexicographically, ties broken by second.
    std::strong_ordering operator<=>(const Bipartition& other) const;

private:
    Partition first_;
    Partition second_;
};

// All partitions of n in decreasing lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// All bipartitions of n in decreasing order (first component dominant,
// ties broken by the second); this is the row/column order of every table.
std::vector<Bipartition> bipartitions_of(int n);

// Every bipartition obtained by deleting one removable corner box from
// either component. Throws std::domain_error on the empty bipartition.
std::set<Bipartition> remove_box(const Bipartition& bp);

// (λ₁+1, λ₂, ...); maps ∅ to (1). Preserves the lexicographic order.
Partition first_row_extend(const Partition& p);

// Total order on bipartitions of equal size; throws std::invalid_argument
// on a size mismatch.
std::strong_ordering compare_lex(const Bipartition& a, const Bipartition& b);

// Canonical list of bipartitions of n together with position lookup.
class BipartitionIndex {
public:
    explicit BipartitionIndex(int n);

    int n() const { return n_; }
    const std::vector<Bipartition>& list() const { return list_; }
    int size() const { return static_cast<int>(list_.size()); }
    // Throws std::out_of_range if bp is not a bipartition of n.
    int index_of(const Bipartition& bp) const;

private:
    int n_ = 0;
    std::vector<Bipartition> list_;
    std::map<Bipartition, int> position_;
};

// A formal nonnegative-integer combination of bipartitions of n, i.e. a
// representation of B_n up to isomorphism. Zero entries are not stored;
// iteration follows the canonical decreasing order.
class MultiplicityVector {
public:
    using Map = std::map<Bipartition, long long, std::greater<Bipartition>>;

    MultiplicityVector() = default;
    explicit MultiplicityVector(int n) : n_(n) {}

    int n() const { return n_; }
    long long get(const Bipartition& bp) const;
    void set(const Bipartition& bp, long long value);
    void add(const Bipartition& bp, long long delta);

    const Map& entries() const { return entries_; }
    std::vector<Bipartition> support() const;
    bool operator==(const MultiplicityVector&) const = default;

private:
    int n_ = 0;
    Map entries_;
};

}  // namespace octarep
