#include <doctest.h>

#include <map>

#include "octarep/hypchar.hpp"
#include "octarep/reference.hpp"

using namespace octarep;

namespace {

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("group order and class sizes") {
    CHECK(hyp_group_order(0) == 1);
    CHECK(hyp_group_order(1) == 2);
    CHECK(hyp_group_order(2) == 8);
    CHECK(hyp_group_order(3) == 48);

    CHECK(hyp_class_size(1, Bipartition::parse("[1]|[]")) == 1);
    CHECK(hyp_class_size(2, Bipartition::parse("[1,1]|[]")) == 1);
    CHECK(hyp_class_size(2, Bipartition::parse("[1]|[1]")) == 2);
    CHECK(hyp_class_size(2, Bipartition::parse("[]|[2]")) == 2);
    CHECK_THROWS_AS(hyp_class_size(3, Bipartition::parse("[1]|[1]")),
                    std::invalid_argument);

    for (int n = 0; n <= 7; ++n) {
        long long total = 0;
        for (const Bipartition& c : bipartitions_of(n)) total += hyp_class_size(n, c);
        CHECK(total == hyp_group_order(n));
    }
}

TEST_CASE("class sizes match element enumeration for n <= 3") {
    for (int n = 0; n <= 3; ++n) {
        std::map<Bipartition, long long> counted;
        for (const auto& g : reference::all_elements(n))
            counted[reference::signed_cycle_type(g)] += 1;
        for (const Bipartition& c : bipartitions_of(n))
            CHECK(hyp_class_size(n, c) == counted[c]);
    }
}

TEST_CASE("epsilon") {
    CHECK(epsilon(Bipartition::parse("[3]|[]")) == 1);
    CHECK(epsilon(Bipartition::parse("[]|[1]")) == -1);
    CHECK(epsilon(Bipartition::parse("[1]|[1]")) == -1);
    CHECK(epsilon(Bipartition::parse("[]|[1,1]")) == 1);
    for (const auto& g : reference::all_elements(3))
        CHECK(epsilon(reference::signed_cycle_type(g)) == reference::product_of_signs(g));
}

TEST_CASE("B_1 and B_2 character values") {
    CHECK(irreducible_character(1, Bipartition::parse("[1]|[]"),
                                Bipartition::parse("[1]|[]")) == 1);
    CHECK(irreducible_character(1, Bipartition::parse("[1]|[]"),
                                Bipartition::parse("[]|[1]")) == 1);
    CHECK(irreducible_character(1, Bipartition::parse("[]|[1]"),
                                Bipartition::parse("[1]|[]")) == 1);
    CHECK(irreducible_character(1, Bipartition::parse("[]|[1]"),
                                Bipartition::parse("[]|[1]")) == -1);
    CHECK(irreducible_character(2, Bipartition::parse("[1]|[1]"),
                                Bipartition::parse("[1,1]|[]")) == 2);

    HypCharacterTable t = HypCharacterTable::build_serial(2);
    CHECK(t.values()[0] == std::vector<long long>{1, 1, 1, 1, 1});
    CHECK(t.values()[1] == std::vector<long long>{-1, 1, 1, -1, 1});
    CHECK(t.values()[2] == std::vector<long long>{0, 2, 0, 0, -2});
    CHECK(t.values()[3] == std::vector<long long>{1, 1, -1, -1, 1});
    CHECK(t.values()[4] == std::vector<long long>{-1, 1, -1, 1, 1});
}

TEST_CASE("identity column dimensions") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        SignedClass id{Partition(ones), Partition{}};
        for (const Bipartition& label : bipartitions_of(n)) {
            long long expect = binomial(n, label.first().weight()) *
                               reference::hook_length_dimension(label.first()) *
                               reference::hook_length_dimension(label.second());
            CHECK(irreducible_character(n, label, id) == expect);
        }
    }
}

TEST_CASE("orthogonality for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        HypCharacterTable t = HypCharacterTable::build_serial(n);
        int p = t.size();
        std::vector<long long> sizes;
        for (const Bipartition& c : t.labels()) sizes.push_back(hyp_class_size(n, c));
        long long order = hyp_group_order(n);

        for (int a = 0; a < p; ++a)
            for (int b = a; b < p; ++b) {
                long long dot = 0;
                for (int c = 0; c < p; ++c)
                    dot += sizes[static_cast<size_t>(c)] * t.value_at(a, c) * t.value_at(b, c);
                CHECK(dot == (a == b ? order : 0));
            }
        for (int c1 = 0; c1 < p; ++c1)
            for (int c2 = c1; c2 < p; ++c2) {
                long long dot = 0;
                for (int a = 0; a < p; ++a) dot += t.value_at(a, c1) * t.value_at(a, c2);
                CHECK(dot == (c1 == c2 ? order / sizes[static_cast<size_t>(c1)] : 0));
            }
    }
}

TEST_CASE("table equals explicit-matrix oracle for n <= 3") {
    for (int n = 0; n <= 3; ++n) {
        HypCharacterTable t = HypCharacterTable::build_serial(n);
        auto brute = reference::hyp_table_bruteforce(n);
        REQUIRE(brute.labels == t.labels());
        for (int i = 0; i < t.size(); ++i)
            for (int j = 0; j < t.size(); ++j)
                CHECK(t.value_at(i, j) ==
                      brute.values[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
}

TEST_CASE("parallel build equals serial build") {
    for (int n = 2; n <= 4; ++n) {
        HypCharacterTable par = HypCharacterTable::build(n, true);
        HypCharacterTable ser = HypCharacterTable::build_serial(n);
        CHECK(par.values() == ser.values());
    }
}

TEST_CASE("inner products and decomposition of irreducible rows") {
    HypCharacterTable t = HypCharacterTable::build_serial(3);
    for (int i = 0; i < t.size(); ++i) {
        for (int j = 0; j < t.size(); ++j) {
            mpq_class ip = inner_product(t.row(i), t.row(j));
            CHECK(ip == (i == j ? 1 : 0));
        }
        MultiplicityVector dec = decompose(t.row(i), t);
        CHECK(dec.entries().size() == 1);
        CHECK(dec.get(t.labels()[static_cast<size_t>(i)]) == 1);
    }
}

TEST_CASE("decompose rejects non-characters") {
    HypCharacterTable t = HypCharacterTable::build_serial(2);
    ClassFunction f{2, {1, 0, 0, 0, 0}};
    CHECK_THROWS_AS(decompose(f, t), std::domain_error);
}
