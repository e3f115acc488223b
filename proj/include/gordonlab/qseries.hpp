#pragma once

#include "gordonlab/partition_classes.hpp"
#include "gordonlab/series.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace gordonlab {

/// prod_{j >= 1, j = 0, +-i mod 2r+1} (1 - q^j), truncated.
inline TruncatedSeries product_side(int r, int i, int trunc) {
    detail::check_ri(r, i);
    const int mod = 2 * r + 1;
    TruncatedSeries s = TruncatedSeries::one(trunc);
    for (int j = 1; j <= trunc; ++j) {
        int res = j % mod;
        if (res == 0 || res == i || res == mod - i) s = mul_one_minus_qk(s, j);
    }
    return s;
}

/// sum over N_1 >= ... >= N_{r-1} >= 0 of
///   q^(N_1^2 + ... + N_{r-1}^2 + N_i + ... + N_{r-1}) / ((q)_{n_1} ... (q)_{n_{r-1}})
/// with n_j = N_j - N_{j+1}, N_r = 0 and (q)_n = (1-q)...(1-q^n).
inline TruncatedSeries andrews_gordon_sum_side(int r, int i, int trunc) {
    detail::check_ri(r, i);
    if (r < 2) throw std::invalid_argument("andrews_gordon_sum_side requires r >= 2");

    // inv_poch[n] = 1 / (q)_n; the exponent already spends N_1^2 <= trunc,
    // so n never exceeds floor(sqrt(trunc)).
    const int n_max = static_cast<int>(std::sqrt(static_cast<double>(trunc))) + 1;
    std::vector<TruncatedSeries> inv_poch;
    inv_poch.push_back(TruncatedSeries::one(trunc));
    for (int n = 1; n <= n_max; ++n)
        inv_poch.push_back(mul_inv_one_minus_qk(inv_poch.back(), n));

    TruncatedSeries total(trunc);
    std::vector<int> chosen(static_cast<std::size_t>(r), 0);  // chosen[j] = N_j for 1 <= j <= r-1
    std::function<void(int, int, int)> rec = [&](int j, int upper, int exponent) {
        if (j == r) {  // N_1..N_{r-1} fixed
            TruncatedSeries term = TruncatedSeries::monomial(trunc, exponent);
            for (int t = 1; t < r; ++t) {
                int n_t = chosen[static_cast<std::size_t>(t)] - (t + 1 < r ? chosen[static_cast<std::size_t>(t + 1)] : 0);
                term = term * inv_poch[static_cast<std::size_t>(n_t)];
            }
            total = total + term;
            return;
        }
        // N_j runs over 0..N_{j-1}; the square in the exponent prunes the
        // first level to N_1 <= sqrt(trunc).
        for (int v = 0; v <= upper; ++v) {
            int add = v * v + (j >= i ? v : 0);
            if (exponent + add > trunc) break;
            chosen[static_cast<std::size_t>(j)] = v;
            rec(j + 1, v, exponent + add);
        }
        chosen[static_cast<std::size_t>(j)] = 0;
    };
    rec(1, trunc, 0);
    return total;
}

/// prod_{n >= 1, n != 0, +-i mod 2r+1} 1 / (1 - q^n), truncated.
inline TruncatedSeries andrews_gordon_product_side(int r, int i, int trunc) {
    detail::check_ri(r, i);
    if (r < 2) throw std::invalid_argument("andrews_gordon_product_side requires r >= 2");
    const int mod = 2 * r + 1;
    TruncatedSeries s = TruncatedSeries::one(trunc);
    for (int n = 1; n <= trunc; ++n) {
        int res = n % mod;
        if (!(res == 0 || res == i || res == mod - i)) s = mul_inv_one_minus_qk(s, n);
    }
    return s;
}

/// Counting series of a partition class: coefficient of q^n is the number of
/// partitions of n in the class (computed by enumeration, not by formula).
inline TruncatedSeries class_series(const PartitionClass& cls, int trunc,
                                    Interpretation interp = Interpretation::InducedNoIsolated) {
    TruncatedSeries s(trunc);
    for (int n = 0; n <= trunc; ++n) s.set_coeff(n, count_class(n, cls, interp));
    return s;
}

/// Signed counting series of the distinct 0,+-i mod 2r+1 class: coefficient of
/// q^n is sum of (-1)^(number of parts).
inline TruncatedSeries signed_R_series(int r, int i, int trunc) {
    detail::check_ri(r, i);
    TruncatedSeries s(trunc);
    for (int n = 0; n <= trunc; ++n) s.set_coeff(n, signed_count_R(n, r, i));
    return s;
}

}  // namespace gordonlab
