#include "gordonlab/partition.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace gordonlab;

namespace {

// p(n) by Euler's pentagonal recurrence — independent of the enumerator.
std::vector<long long> partition_counts(int max_n) {
    std::vector<long long> p(static_cast<std::size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        long long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) total += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

}  // namespace

TEST_CASE("partition construction validates input") {
    CHECK(Partition{}.empty());
    CHECK(Partition({3, 2, 2, 1}).weight() == 8);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("partition accessors") {
    Partition p({4, 2, 2, 1, 1, 1});
    CHECK(p.length() == 6);
    CHECK(p.weight() == 11);
    CHECK(p.max_part() == 4);
    CHECK(p.multiplicity(1) == 3);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.multiplicity(3) == 0);
    CHECK(p.multiplicity(4) == 1);
    CHECK(p.multiplicity_profile() == std::vector<int>{0, 3, 2, 0, 1});

    Partition empty;
    CHECK(empty.weight() == 0);
    CHECK(empty.max_part() == 0);
    CHECK(empty.multiplicity_profile() == std::vector<int>{0});
}

TEST_CASE("partition text round-trip") {
    CHECK(Partition({2, 1, 1, 1}).to_string() == "2,1,1,1");
    CHECK(Partition{}.to_string() == "()");
    CHECK(parse_partition("2,1,1,1") == Partition({2, 1, 1, 1}));
    CHECK(parse_partition(" 10 , 4 ") == Partition({10, 4}));
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("()") == Partition{});
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,-1"), std::invalid_argument);

    for (const Partition& p : enumerate_partitions(9))
        CHECK(parse_partition(p.to_string()) == p);
}

TEST_CASE("enumeration counts match the pentagonal recurrence") {
    std::vector<long long> expected = partition_counts(30);
    for (int n = 0; n <= 30; ++n)
        CHECK(enumerate_partitions(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("enumeration order is lexicographically decreasing") {
    std::vector<Partition> fives = enumerate_partitions(5);
    std::vector<Partition> expected = {Partition({5}),          Partition({4, 1}),
                                       Partition({3, 2}),       Partition({3, 1, 1}),
                                       Partition({2, 2, 1}),    Partition({2, 1, 1, 1}),
                                       Partition({1, 1, 1, 1, 1})};
    CHECK(fives == expected);

    for (int n : {0, 1, 7, 12}) {
        std::vector<Partition> all = enumerate_partitions(n);
        for (std::size_t k = 0; k + 1 < all.size(); ++k)
            CHECK(all[k].parts() > all[k + 1].parts());
    }
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
}

TEST_CASE("bounded enumeration agrees with filtering") {
    for (int n = 0; n <= 14; ++n)
        for (int bound_one : {0, 1, 3})
            for (int bound_rest : {1, 2, 4}) {
                std::vector<Partition> filtered;
                for (const Partition& p : enumerate_partitions(n)) {
                    bool ok = p.multiplicity(1) <= bound_one;
                    for (int v = 2; v <= p.max_part() && ok; ++v)
                        if (p.multiplicity(v) > bound_rest) ok = false;
                    if (ok) filtered.push_back(p);
                }
                CHECK(enumerate_partitions_bounded(n, bound_one, bound_rest) == filtered);
            }
}
