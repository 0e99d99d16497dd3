#include <doctest.h>

#include "schub/partition.hpp"

using namespace schub;

TEST_CASE("make_partition canonical forms") {
    CHECK(make_partition({2, 2}).parts() == std::vector<int>{2, 2});
    CHECK(make_partition({3, 1, 0}).parts() == std::vector<int>{3, 1});
    CHECK(make_partition({}).empty());
    CHECK(make_partition({0, 0}).empty());
    CHECK(make_partition({5}).weight() == 5);
}

TEST_CASE("make_partition rejects bad input") {
    CHECK_THROWS_AS(make_partition({1, 2}), DomainError);
    CHECK_THROWS_AS(make_partition({3, -1}), DomainError);
    CHECK_THROWS_AS(make_partition({2, 0, 1}), DomainError);
}

TEST_CASE("box fitting and complement") {
    Partition lam = make_partition({2, 1});
    CHECK(lam.fits(2, 2));
    CHECK(!lam.fits(1, 2));
    CHECK(!lam.fits(2, 1));
    CHECK(lam.complement(2, 2) == make_partition({1}));
    CHECK(lam.complement(3, 2) == make_partition({2, 1}));
    CHECK(make_partition({}).complement(2, 3) == make_partition({3, 3}));
    CHECK_THROWS_AS(lam.complement(1, 1), DomainError);
}

TEST_CASE("partitions_in_box enumerates exactly") {
    auto all = partitions_in_box(4, 2, 2);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == make_partition({2, 2}));
    CHECK(partitions_in_box(3, 2, 2).size() == 1);  // only (2,1)
    CHECK(partitions_in_box(0, 3, 3).size() == 1);  // the empty partition
    CHECK(partitions_in_box(7, 2, 2).empty());
}
