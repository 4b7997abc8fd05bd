#include <doctest.h>

#include "nestloc/partition.hpp"

using namespace nestloc;

TEST_CASE("conjugate transposes the diagram") {
    CHECK(Partition::empty().conjugate() == Partition::empty());
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
}

TEST_CASE("conjugation is an involution up to size 12") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& mu : enumerate_partitions(n))
            CHECK(mu.conjugate().conjugate() == mu);
}

TEST_CASE("arm and leg with zero padding") {
    Partition one({1});
    CHECK(arm(Box{1, 1}, one) == 0);
    CHECK(leg(Box{1, 1}, one) == 0);
    Partition mu({3, 2});
    CHECK(arm(Box{1, 1}, mu) == 2);
    CHECK(leg(Box{1, 1}, mu) == 1);
    // outside the diagram the statistics go negative
    CHECK(arm(Box{2, 3}, one) == -3);
    CHECK(leg(Box{2, 3}, one) == -2);
}

TEST_CASE("hook consistency: nonnegative arm and leg exactly inside") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            int inside = 0;
            for (int r = 1; r <= n + 1; ++r)
                for (int c = 1; c <= n + 1; ++c) {
                    Box s{r, c};
                    bool in = mu.contains_box(r, c);
                    bool stat = arm(s, mu) >= 0 && leg(s, mu) >= 0;
                    CHECK(in == stat);
                    if (in)
                        ++inside;
                }
            CHECK(inside == mu.size());
        }
}

TEST_CASE("partition enumeration") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0] == Partition::empty());
    CHECK(enumerate_partitions(1).size() == 1);
    CHECK(enumerate_partitions(4).size() == 5);
    // deterministic order: largest part first
    auto p4 = enumerate_partitions(4);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));
    // counting function agrees with enumeration
    for (int n = 0; n <= 10; ++n)
        CHECK(partition_count(n) == Int(enumerate_partitions(n).size()));
}

TEST_CASE("subpartition enumeration respects containment") {
    Partition outer({2, 1});
    auto subs = enumerate_subpartitions(2, outer);
    REQUIRE(subs.size() == 2);
    CHECK(subs[0] == Partition({2}));
    CHECK(subs[1] == Partition({1, 1}));
    CHECK(enumerate_subpartitions(3, Partition({3})).size() == 1);
    CHECK(enumerate_subpartitions(2, Partition({1})).empty());
}

TEST_CASE("plane partition counts by brute force") {
    CHECK(plane_partition_count(0) == 1);
    CHECK(plane_partition_count(1) == 1);
    CHECK(plane_partition_count(2) == 3);
    CHECK(plane_partition_count(3) == 6);
    CHECK(plane_partition_count(4) == 13);
    CHECK(plane_partition_count(5) == 24);
    CHECK(plane_partition_count(6) == 48);
}

TEST_CASE("invalid partitions are rejected") {
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, 0}));
}
