#include <doctest.h>

#include "octarep/reference.hpp"
#include "octarep/symchar.hpp"

using namespace octarep;

TEST_CASE("sym_class_size examples and totals") {
    CHECK(sym_class_size(Partition({1, 1, 1})) == 1);
    CHECK(sym_class_size(Partition({2, 1})) == 3);
    CHECK(sym_class_size(Partition({3})) == 2);
    CHECK(sym_class_size(Partition{}) == 1);

    for (int n = 0; n <= 10; ++n) {
        long long total = 0, fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        for (const Partition& alpha : partitions_of(n)) total += sym_class_size(alpha);
        CHECK(total == fact);
    }
}

TEST_CASE("sym_character spot values") {
    for (const Partition& alpha : partitions_of(5))
        CHECK(sym_character(Partition({5}), alpha) == 1);
    CHECK(sym_character(Partition({1, 1}), Partition({2})) == -1);
    CHECK(sym_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(sym_character(Partition({2, 2}), Partition({2, 2})) == 2);
    CHECK(sym_character(Partition({3, 1}), Partition({2, 1, 1})) == 1);
    CHECK(sym_character(Partition({2, 1, 1}), Partition({4})) == 1);
    CHECK_THROWS_AS(sym_character(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("dimension column equals hook length formula") {
    for (int n = 0; n <= 8; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        Partition id(ones);
        for (const Partition& lam : partitions_of(n))
            CHECK(sym_character(lam, id) == reference::hook_length_dimension(lam));
    }
}

TEST_CASE("sign column alternates with strip heights") {
    // χ_λ on the full cycle (n) is ±1 on hooks and 0 otherwise.
    CHECK(sym_character(Partition({3, 1, 1}), Partition({5})) == 1);
    CHECK(sym_character(Partition({2, 2, 1}), Partition({5})) == 0);
}

TEST_CASE("table orthogonality") {
    for (int n = 1; n <= 8; ++n) {
        SymCharacterTable t(n);
        int p = static_cast<int>(t.labels().size());
        std::vector<long long> sizes;
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        for (const Partition& alpha : t.labels()) sizes.push_back(sym_class_size(alpha));

        for (int a = 0; a < p; ++a)
            for (int b = a; b < p; ++b) {
                long long dot = 0;
                for (int c = 0; c < p; ++c)
                    dot += sizes[static_cast<size_t>(c)] * t.value_at(a, c) * t.value_at(b, c);
                CHECK(dot == (a == b ? fact : 0));
            }

        for (int c1 = 0; c1 < p; ++c1)
            for (int c2 = c1; c2 < p; ++c2) {
                long long dot = 0;
                for (int a = 0; a < p; ++a) dot += t.value_at(a, c1) * t.value_at(a, c2);
                CHECK(dot == (c1 == c2 ? fact / sizes[static_cast<size_t>(c1)] : 0));
            }
    }
}

TEST_CASE("table equals brute-force oracle up to n = 4") {
    for (int n = 0; n <= 4; ++n) {
        SymCharacterTable t(n);
        auto brute = reference::sym_table_bruteforce(n);
        REQUIRE(brute.labels == t.labels());
        for (size_t i = 0; i < brute.labels.size(); ++i)
            for (size_t j = 0; j < brute.classes.size(); ++j)
                CHECK(t.value_at(static_cast<int>(i), static_cast<int>(j)) ==
                      brute.values[i][j]);
    }
}

TEST_CASE("table lookup by partition") {
    SymCharacterTable t(4);
    CHECK(t.value(Partition({2, 2}), Partition({1, 1, 1, 1})) == 2);
    CHECK_THROWS_AS(t.value(Partition({3}), Partition({4})), std::out_of_range);
}
