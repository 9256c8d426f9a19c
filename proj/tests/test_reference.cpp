#include <doctest.h>

#include <map>

#include "octarep/reference.hpp"

using namespace octarep;
using namespace octarep::reference;

TEST_CASE("signed permutation algebra") {
    // g: 1 ↦ −2, 2 ↦ 3, 3 ↦ −1 is a single positive 3-cycle.
    SignedPerm g{{-2, 3, -1}};
    CHECK(product_of_signs(g) == 1);
    CHECK(signed_cycle_type(g) == Bipartition::parse("[3]|[]"));

    SignedPerm id{{1, 2, 3}};
    CHECK(compose(g, inverse(g)) == id);
    CHECK(compose(inverse(g), g) == id);

    // h: 1 ↦ −1, 2 ↦ 3, 3 ↦ −2: a negative 1-cycle and a negative 2-cycle.
    SignedPerm h{{-1, 3, -2}};
    CHECK(signed_cycle_type(h) == Bipartition::parse("[]|[2,1]"));
    CHECK(product_of_signs(h) == 1);
    CHECK(product_of_signs(SignedPerm{{-1, 3, 2}}) == -1);
    CHECK(signed_cycle_type(compose(g, compose(h, inverse(g)))) ==
          signed_cycle_type(h));
}

TEST_CASE("all_elements has order 2^n n! and full class coverage") {
    CHECK(all_elements(0).size() == 1);
    CHECK(all_elements(1).size() == 2);
    CHECK(all_elements(2).size() == 8);
    CHECK(all_elements(3).size() == 48);

    std::map<Bipartition, long long> sizes;
    for (const auto& g : all_elements(3)) sizes[signed_cycle_type(g)] += 1;
    CHECK(sizes.size() == bipartitions_of(3).size());
    CHECK(sizes.at(Bipartition::parse("[1,1,1]|[]")) == 1);
    CHECK(sizes.at(Bipartition::parse("[3]|[]")) == 8);
}

TEST_CASE("count_fixed_tuples matches closed counts on cycles") {
    // A positive cycle contributes m fixed values, a negative one gcd(2,m).
    SignedPerm pos3{{2, 3, 1}};
    CHECK(count_fixed_tuples(pos3, 5) == 5);
    CHECK(count_fixed_tuples(pos3, 4) == 4);
    SignedPerm neg1{{-1}};
    CHECK(count_fixed_tuples(neg1, 5) == 1);
    CHECK(count_fixed_tuples(neg1, 4) == 2);
    SignedPerm mixed{{1, -2, 3}};
    CHECK(count_fixed_tuples(mixed, 6) == 6 * 2 * 6);
}

TEST_CASE("partition_count matches enumeration and known values") {
    long long known[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        CHECK(partition_count(n) == known[n]);
        CHECK(partition_count(n) ==
              static_cast<long long>(partitions_of(n).size()));
    }
    CHECK(partition_count(20) == 627);
    CHECK(partition_count(50) == 204226);
}

TEST_CASE("hook length dimensions") {
    CHECK(hook_length_dimension(Partition{}) == 1);
    CHECK(hook_length_dimension(Partition({4})) == 1);
    CHECK(hook_length_dimension(Partition({1, 1, 1, 1})) == 1);
    CHECK(hook_length_dimension(Partition({2, 1})) == 2);
    CHECK(hook_length_dimension(Partition({3, 2})) == 5);
    CHECK(hook_length_dimension(Partition({2, 2})) == 2);
    CHECK(hook_length_dimension(Partition({4, 3, 2, 1})) == 768);
}

TEST_CASE("brute-force S_3 table") {
    auto t = sym_table_bruteforce(3);
    REQUIRE(t.labels.size() == 3);
    // Classes in order (3), (2,1), (1,1,1); labels likewise.
    CHECK(t.class_sizes == std::vector<long long>{2, 3, 1});
    CHECK(t.values[0] == std::vector<long long>{1, 1, 1});
    CHECK(t.values[1] == std::vector<long long>{-1, 0, 2});
    CHECK(t.values[2] == std::vector<long long>{1, -1, 1});
}

TEST_CASE("brute-force B_1 and B_2 tables") {
    auto t1 = hyp_table_bruteforce(1);
    CHECK(t1.class_sizes == std::vector<long long>{1, 1});
    CHECK(t1.values[0] == std::vector<long long>{1, 1});
    CHECK(t1.values[1] == std::vector<long long>{1, -1});

    auto t2 = hyp_table_bruteforce(2);
    REQUIRE(t2.labels.size() == 5);
    CHECK(t2.class_sizes == std::vector<long long>{2, 1, 2, 2, 1});
    CHECK(t2.values[0] == std::vector<long long>{1, 1, 1, 1, 1});
    CHECK(t2.values[1] == std::vector<long long>{-1, 1, 1, -1, 1});
    CHECK(t2.values[2] == std::vector<long long>{0, 2, 0, 0, -2});
    CHECK(t2.values[3] == std::vector<long long>{1, 1, -1, -1, 1});
    CHECK(t2.values[4] == std::vector<long long>{-1, 1, -1, 1, 1});
}
