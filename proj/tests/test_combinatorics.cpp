#include <doctest.h>

#include <algorithm>
#include <set>

#include "octarep/combinatorics.hpp"

using namespace octarep;

TEST_CASE("partition construction and normalization") {
    CHECK(Partition({3, 2, 2}).weight() == 7);
    CHECK(Partition({3, 2, 2}).rows() == 3);
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition{}.rows() == 0);
    CHECK(Partition({4, 0, 0}) == Partition({4}));
    CHECK(Partition({2, 1}).part(0) == 2);
    CHECK(Partition({2, 1}).part(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("partition text round trip") {
    CHECK(Partition({2, 1}).str() == "[2,1]");
    CHECK(Partition{}.str() == "[]");
    CHECK(Partition::parse("[2,1]") == Partition({2, 1}));
    CHECK(Partition::parse("[]") == Partition{});
    CHECK_THROWS_AS(Partition::parse("2,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[2,x]"), std::invalid_argument);
}

TEST_CASE("partition order is padded lexicographic") {
    CHECK(Partition({2}) > Partition({1, 1}));
    CHECK(Partition({3, 1}) > Partition({2, 2}));
    CHECK(Partition({2, 1}) > Partition({2}));
    CHECK(Partition{} < Partition({1}));
}

TEST_CASE("partitions_of enumerates in decreasing lexicographic order") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(7).size() == 15);
    CHECK(partitions_of(10).size() == 42);
    CHECK(std::is_sorted(p4.begin(), p4.end(), std::greater<>{}));
}

TEST_CASE("bipartition text and order") {
    Bipartition bp(Partition({2, 1}), Partition({1}));
    CHECK(bp.str() == "[2,1]|[1]");
    CHECK(Bipartition::parse("[2,1]|[1]") == bp);
    CHECK(Bipartition::parse("[]|[]") == Bipartition{});
    CHECK(bp.weight() == 4);

    CHECK(Bipartition(Partition({2}), Partition{}) >
          Bipartition(Partition({1, 1}), Partition{}));
    CHECK(Bipartition(Partition({1}), Partition({1})) >
          Bipartition(Partition{}, Partition({2})));
}

TEST_CASE("bipartitions_of matches known counts and order") {
    auto b2 = bipartitions_of(2);
    REQUIRE(b2.size() == 5);
    CHECK(b2[0].str() == "[2]|[]");
    CHECK(b2[1].str() == "[1,1]|[]");
    CHECK(b2[2].str() == "[1]|[1]");
    CHECK(b2[3].str() == "[]|[2]");
    CHECK(b2[4].str() == "[]|[1,1]");

    CHECK(bipartitions_of(0).size() == 1);
    CHECK(bipartitions_of(1).size() == 2);
    CHECK(bipartitions_of(4).size() == 20);
    CHECK(bipartitions_of(5).size() == 36);
    CHECK(bipartitions_of(7).size() == 110);
    CHECK(bipartitions_of(8).size() == 185);

    auto b5 = bipartitions_of(5);
    CHECK(std::is_sorted(b5.begin(), b5.end(), std::greater<>{}));
}

TEST_CASE("remove_box lists single-box downward moves") {
    auto down = remove_box(Bipartition::parse("[2,1]|[1]"));
    std::set<std::string> got;
    for (const auto& bp : down) got.insert(bp.str());
    CHECK(got == std::set<std::string>{"[1,1]|[1]", "[2]|[1]", "[2,1]|[]"});

    auto from_row = remove_box(Bipartition::parse("[2,2]|[]"));
    REQUIRE(from_row.size() == 1);
    CHECK(from_row.begin()->str() == "[2,1]|[]");

    CHECK_THROWS_AS(remove_box(Bipartition{}), std::domain_error);
}

TEST_CASE("first_row_extend is order preserving") {
    CHECK(first_row_extend(Partition{}) == Partition({1}));
    CHECK(first_row_extend(Partition({2, 1})) == Partition({3, 1}));

    auto p5 = partitions_of(5);
    for (size_t i = 0; i + 1 < p5.size(); ++i) {
        CHECK(first_row_extend(p5[i]) > first_row_extend(p5[i + 1]));
    }
}

TEST_CASE("compare_lex requires equal size") {
    CHECK(compare_lex(Bipartition::parse("[2]|[]"), Bipartition::parse("[1]|[1]")) ==
          std::strong_ordering::greater);
    CHECK_THROWS_AS(compare_lex(Bipartition::parse("[1]|[]"), Bipartition::parse("[2]|[]")),
                    std::invalid_argument);
}

TEST_CASE("BipartitionIndex lookup") {
    BipartitionIndex idx(3);
    REQUIRE(idx.size() == 10);
    for (int i = 0; i < idx.size(); ++i)
        CHECK(idx.index_of(idx.list()[static_cast<size_t>(i)]) == i);
    CHECK_THROWS_AS(idx.index_of(Bipartition::parse("[2]|[]")), std::out_of_range);
}

TEST_CASE("MultiplicityVector stores sparse nonzero entries") {
    MultiplicityVector v(3);
    Bipartition a = Bipartition::parse("[3]|[]");
    Bipartition b = Bipartition::parse("[1]|[2]");
    v.set(a, 2);
    v.add(b, 5);
    v.add(b, -5);
    CHECK(v.get(a) == 2);
    CHECK(v.get(b) == 0);
    CHECK(v.entries().size() == 1);
    CHECK(v.support() == std::vector<Bipartition>{a});
    CHECK_THROWS_AS(v.set(Bipartition::parse("[1]|[]"), 1), std::invalid_argument);
}
