#include "gordonlab/qseries.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace gordonlab;

TEST_CASE("product side frozen at r = i = 3") {
    // Allowed exponents 0,+-3 mod 7 up to 10: {3, 4, 7, 10}.
    TruncatedSeries s = product_side(3, 3, 10);
    CHECK(s.coeffs() == std::vector<Integer>{Integer(1), Integer(0), Integer(0), Integer(-1),
                                             Integer(-1), Integer(0), Integer(0), Integer(0),
                                             Integer(0), Integer(0), Integer(0)});
}

TEST_CASE("product side equals the signed distinct-part count") {
    // Expanding a product of distinct (1 - q^j) term by term is exactly the
    // signed enumeration of distinct subsets; check a few (r, i).
    for (int r = 1; r <= 4; ++r)
        for (int i = 1; i <= r; ++i)
            CHECK(product_side(r, i, 20) == signed_R_series(r, i, 20));
}

TEST_CASE("multiple-sum side reproduces the distinct-gap counts at r = 2") {
    // i = 2: partitions with adjacent parts differing by at least 2.
    TruncatedSeries s22 = andrews_gordon_sum_side(2, 2, 20);
    std::vector<long long> expected22 = {1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6,
                                         7, 9, 10, 12, 14, 17, 19, 23, 26, 31};
    for (int n = 0; n <= 20; ++n) CHECK(s22.coeff(n) == expected22[n]);

    // i = 1: additionally no part equal to 1.
    TruncatedSeries s21 = andrews_gordon_sum_side(2, 1, 20);
    std::vector<long long> expected21 = {1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4,
                                         4, 6, 6, 8, 9, 11, 12, 15, 16, 20};
    for (int n = 0; n <= 20; ++n) CHECK(s21.coeff(n) == expected21[n]);
}

TEST_CASE("multiple-sum side equals the product side") {
    for (int r = 2; r <= 4; ++r)
        for (int i = 1; i <= r; ++i)
            CHECK(andrews_gordon_sum_side(r, i, 25) == andrews_gordon_product_side(r, i, 25));
}

TEST_CASE("the two gordon classes count alike") {
    for (int r = 2; r <= 3; ++r)
        for (int i = 1; i <= r; ++i)
            CHECK(class_series(PartitionClass::gordon_b(r, i), 18) ==
                  class_series(PartitionClass::gordon_a(r, i), 18));
}

TEST_CASE("gordon-b counts match the multiple-sum side") {
    for (int r = 2; r <= 3; ++r)
        for (int i = 1; i <= r; ++i)
            CHECK(class_series(PartitionClass::gordon_b(r, i), 16) ==
                  andrews_gordon_sum_side(r, i, 16));
}

TEST_CASE("all-partitions series equals the inverse Euler product") {
    TruncatedSeries counted = class_series(PartitionClass::all(), 18);
    TruncatedSeries product = TruncatedSeries::one(18);
    for (int j = 1; j <= 18; ++j) product = mul_inv_one_minus_qk(product, j);
    CHECK(counted == product);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(product_side(2, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(andrews_gordon_sum_side(1, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(andrews_gordon_product_side(1, 1, 5), std::invalid_argument);
}
