#include "octarep/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace octarep {

namespace {

// Parses "[a,b,c]" into a vector of ints; used for both partition components.
std::vector<int> parse_bracket_list(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("malformed partition: " + std::string(text));
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<int> out;
    if (body.empty()) return out;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view token =
            body.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                             : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed partition part: " + std::string(token));
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

void append_bracket_list(std::ostringstream& os, const std::vector<int>& parts) {
    os << '[';
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ']';
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
    return Partition(parse_bracket_list(text));
}

std::string Partition::str() const {
    std::ostringstream os;
    append_bracket_list(os, parts_);
    return os.str();
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    int rows = std::max(this->rows(), other.rows());
    for (int i = 0; i < rows; ++i) {
        if (auto c = part(i) <=> other.part(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

Bipartition::Bipartition(Partition first, Partition second)
    : first_(std::move(first)), second_(std::move(second)) {}

Bipartition Bipartition::parse(std::string_view text) {
    size_t bar = text.find('|');
    if (bar == std::string_view::npos)
        throw std::invalid_argument("malformed bipartition: " + std::string(text));
    return Bipartition(Partition::parse(text.substr(0, bar)),
                       Partition::parse(text.substr(bar + 1)));
}

std::string Bipartition::str() const {
    return first_.str() + "|" + second_.str();
}

std::strong_ordering Bipartition::operator<=>(const Bipartition& other) const {
    if (auto c = first_ <=> other.first_; c != 0) return c;
    return second_ <=> other.second_;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> current;
    // Builds parts left to right, largest feasible first, which yields
    // decreasing lexicographic order directly.
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int next = std::min(cap, remaining); next >= 1; --next) {
            current.push_back(next);
            self(self, remaining - next, next);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
    if (n < 0) throw std::invalid_argument("bipartitions_of: negative n");
    std::vector<Bipartition> out;
    for (int l = 0; l <= n; ++l) {
        for (const Partition& lam : partitions_of(l))
            for (const Partition& mu : partitions_of(n - l))
                out.emplace_back(lam, mu);
    }
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

std::set<Bipartition> remove_box(const Bipartition& bp) {
    if (bp.weight() == 0)
        throw std::domain_error("remove_box: empty bipartition");
    std::set<Bipartition> out;
    auto strip_component = [&](const Partition& p, bool is_first) {
        const std::vector<int>& parts = p.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
            // A corner box is removable when the next row is strictly shorter.
            if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;
            std::vector<int> reduced = parts;
            reduced[i] -= 1;
            Partition q(std::move(reduced));
            if (is_first)
                out.emplace(std::move(q), bp.second());
            else
                out.emplace(bp.first(), std::move(q));
        }
    };
    strip_component(bp.first(), true);
    strip_component(bp.second(), false);
    return out;
}

Partition first_row_extend(const Partition& p) {
    std::vector<int> parts = p.parts();
    if (parts.empty())
        parts.push_back(1);
    else
        parts[0] += 1;
    return Partition(std::move(parts));
}

std::strong_ordering compare_lex(const Bipartition& a, const Bipartition& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("compare_lex: bipartitions of unequal size");
    return a <=> b;
}

BipartitionIndex::BipartitionIndex(int n) : n_(n), list_(bipartitions_of(n)) {
    for (int i = 0; i < static_cast<int>(list_.size()); ++i)
        position_.emplace(list_[static_cast<size_t>(i)], i);
}

int BipartitionIndex::index_of(const Bipartition& bp) const {
    auto it = position_.find(bp);
    if (it == position_.end())
        throw std::out_of_range("BipartitionIndex: not a bipartition of " +
                                std::to_string(n_) + ": " + bp.str());
    return it->second;
}

long long MultiplicityVector::get(const Bipartition& bp) const {
    auto it = entries_.find(bp);
    return it == entries_.end() ? 0 : it->second;
}

void MultiplicityVector::set(const Bipartition& bp, long long value) {
    if (bp.weight() != n_)
        throw std::invalid_argument("MultiplicityVector: size mismatch");
    if (value == 0)
        entries_.erase(bp);
    else
        entries_[bp] = value;
}

void MultiplicityVector::add(const Bipartition& bp, long long delta) {
    set(bp, get(bp) + delta);
}

std::vector<Bipartition> MultiplicityVector::support() const {
    std::vector<Bipartition> out;
    out.reserve(entries_.size());
    for (const auto& [bp, mult] : entries_) out.push_back(bp);
    return out;
}

}  // namespace octarep
