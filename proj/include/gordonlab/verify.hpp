#pragma once

#include "gordonlab/hilbert.hpp"
#include "gordonlab/hypergraph.hpp"
#include "gordonlab/partition_classes.hpp"
#include "gordonlab/qseries.hpp"
#include "gordonlab/series.hpp"
#include "gordonlab/signature.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gordonlab {

/// One compared value pair; `index` is the coefficient degree or case number.
struct ReportRow {
    long long index = 0;
    Integer lhs;
    Integer rhs;
    bool equal = false;
};

struct VerificationReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<ReportRow> rows;
    bool pass = true;
    std::optional<long long> first_failure;
    double elapsed_ms = 0.0;

    void add_row(long long index, Integer lhs, Integer rhs) {
        bool equal = (lhs == rhs);
        if (!equal) {
            pass = false;
            if (!first_failure) first_failure = index;
        }
        rows.push_back({index, std::move(lhs), std::move(rhs), equal});
    }
};

namespace detail {
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline void compare_series(VerificationReport& report, const TruncatedSeries& lhs,
                           const TruncatedSeries& rhs) {
    for (int n = 0; n <= std::min(lhs.trunc(), rhs.trunc()); ++n)
        report.add_row(n, lhs.coeff(n), rhs.coeff(n));
}
}  // namespace detail

/// Coefficientwise check, for n <= trunc:
///   sum of signatures over (r,i)-neighborly partitions of n
///   == [q^n] prod_{j = 0,+-i mod 2r+1} (1 - q^j)
///   == signed count of distinct-part partitions into those residues.
inline VerificationReport verify_main_identity(int r, int i, int trunc,
                                               Interpretation interp = Interpretation::InducedNoIsolated) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.identity = "main";
    report.params = {{"r", std::to_string(r)},
                     {"i", std::to_string(i)},
                     {"trunc", std::to_string(trunc)},
                     {"interp", to_string(interp)}};
    TruncatedSeries lhs = neighborly_signed_series(r, i, trunc, interp);
    TruncatedSeries product = product_side(r, i, trunc);
    TruncatedSeries signed_r = signed_R_series(r, i, trunc);
    // Two rows per degree: signature sum against the product, and the product
    // against the signed distinct-part count (two routes to the same side).
    for (int n = 0; n <= trunc; ++n) {
        report.add_row(n, lhs.coeff(n), product.coeff(n));
        report.add_row(n, product.coeff(n), signed_r.coeff(n));
    }
    report.elapsed_ms = clock.ms();
    return report;
}

/// Coefficientwise equality of the two Gordon partition classes, counted by
/// brute-force enumeration.
inline VerificationReport verify_gordon(int r, int i, int trunc) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.identity = "gordon";
    report.params = {{"r", std::to_string(r)},
                     {"i", std::to_string(i)},
                     {"trunc", std::to_string(trunc)}};
    for (int n = 0; n <= trunc; ++n)
        report.add_row(n, count_class(n, PartitionClass::gordon_b(r, i)),
                       count_class(n, PartitionClass::gordon_a(r, i)));
    report.elapsed_ms = clock.ms();
    return report;
}

/// Coefficientwise equality of the multiple-sum side and the product side.
inline VerificationReport verify_andrews_gordon(int r, int i, int trunc) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.identity = "andrews-gordon";
    report.params = {{"r", std::to_string(r)},
                     {"i", std::to_string(i)},
                     {"trunc", std::to_string(trunc)}};
    detail::compare_series(report, andrews_gordon_sum_side(r, i, trunc),
                           andrews_gordon_product_side(r, i, trunc));
    report.elapsed_ms = clock.ms();
    return report;
}

/// Random simple hypergraph with its weight assignment, for property checks.
/// Candidate edges that would nest inside (or swallow) an accepted edge are
/// rejected, so the result is simple by construction.
inline std::pair<Hypergraph, WeightAssignment> random_weighted_hypergraph(std::mt19937_64& rng,
                                                                          int max_vertices,
                                                                          int max_edges,
                                                                          int max_weight) {
    std::uniform_int_distribution<int> nv_dist(1, max_vertices);
    const int nv = nv_dist(rng);
    std::vector<Vertex> vertices;
    for (int t = 1; t <= nv; ++t) vertices.push_back({t, 1});

    std::uniform_int_distribution<int> ne_dist(0, max_edges);
    std::uniform_int_distribution<int> coin(0, 1);
    const int target = ne_dist(rng);
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < 20 * max_edges && static_cast<int>(edges.size()) < target;
         ++attempt) {
        Edge candidate;
        for (const Vertex& v : vertices)
            if (coin(rng)) candidate.push_back(v);
        if (candidate.empty()) continue;
        bool comparable = false;
        for (const Edge& e : edges) {
            if (std::includes(e.begin(), e.end(), candidate.begin(), candidate.end()) ||
                std::includes(candidate.begin(), candidate.end(), e.begin(), e.end())) {
                comparable = true;
                break;
            }
        }
        if (!comparable) edges.push_back(candidate);
    }

    Hypergraph h(std::move(vertices), std::move(edges));
    std::uniform_int_distribution<int> w_dist(1, max_weight);
    WeightAssignment w;
    for (const Vertex& v : h.vertices()) w.weights[v] = w_dist(rng);
    return {std::move(h), std::move(w)};
}

/// On random simple weighted hypergraphs, checks that the inclusion-exclusion
/// numerator equals the edge-free-support series times the vertex factors
/// prod_v (1 - q^w(v)). Row indices are case * (trunc+1) + degree.
inline VerificationReport verify_hilbert_numerator(int cases, int trunc, std::uint64_t seed,
                                                   int max_vertices = 8, int max_edges = 10,
                                                   int max_weight = 3) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.identity = "hilbert-numerator";
    report.params = {{"cases", std::to_string(cases)},
                     {"trunc", std::to_string(trunc)},
                     {"seed", std::to_string(seed)},
                     {"max_vertices", std::to_string(max_vertices)},
                     {"max_edges", std::to_string(max_edges)},
                     {"max_weight", std::to_string(max_weight)}};
    std::mt19937_64 rng(seed);
    for (int c = 0; c < cases; ++c) {
        auto [h, w] = random_weighted_hypergraph(rng, max_vertices, max_edges, max_weight);
        TruncatedSeries lhs = hilbert_numerator_weighted(h, w, trunc);
        TruncatedSeries rhs = quotient_series_by_support(h, w, trunc);
        for (const Vertex& v : h.vertices()) {
            int weight = w.weight_of(v);
            if (weight <= trunc) rhs = mul_one_minus_qk(rhs, weight);
        }
        for (int n = 0; n <= trunc; ++n)
            report.add_row(static_cast<long long>(c) * (trunc + 1) + n, lhs.coeff(n), rhs.coeff(n));
    }
    report.elapsed_ms = clock.ms();
    return report;
}

/// Checks hp_P_ri * (1-q)^(i-1) * prod_{j>=2} (1-q^j)^(r-1) == hp_quotient_J,
/// the specialization relating the polarized and unpolarized quotients.
inline VerificationReport verify_polarization_relation(int r, int i, int trunc,
                                                       Interpretation interp = Interpretation::InducedNoIsolated) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.identity = "polarization";
    report.params = {{"r", std::to_string(r)},
                     {"i", std::to_string(i)},
                     {"trunc", std::to_string(trunc)},
                     {"interp", to_string(interp)}};
    TruncatedSeries lhs = hp_P_ri(r, i, trunc, interp);
    for (int k = 0; k < i - 1; ++k) lhs = mul_one_minus_qk(lhs, 1);
    for (int j = 2; j <= trunc; ++j)
        for (int k = 0; k < r - 1; ++k) lhs = mul_one_minus_qk(lhs, j);
    detail::compare_series(report, lhs, hp_quotient_J(r, i, trunc));
    report.elapsed_ms = clock.ms();
    return report;
}

/// Recomputes every signature over neighborly partitions of weight <= max_n
/// by direct edge-subset enumeration and compares with the level DP.
/// Row indices count cases in enumeration order.
inline VerificationReport verify_dp_vs_brute(int r, int i, int max_n, Interpretation interp) {
    detail::Stopwatch clock;
    VerificationReport report;
    report.identity = "dp-vs-brute";
    report.params = {{"r", std::to_string(r)},
                     {"i", std::to_string(i)},
                     {"trunc", std::to_string(max_n)},
                     {"interp", to_string(interp)}};
    long long case_id = 0;
    for (int n = 0; n <= max_n; ++n)
        for (const Partition& p : enumerate_class(n, PartitionClass::neighborly(r, i), interp)) {
            SignatureResult brute = signature_bruteforce(build_H_lambda(p, r, i, interp));
            SignatureResult fast = signature_fast(p, r, i, interp);
            report.add_row(case_id++, brute.value, fast.value);
            if (brute.edge_count != fast.edge_count)
                report.add_row(case_id++, brute.edge_count, fast.edge_count);
        }
    report.elapsed_ms = clock.ms();
    return report;
}

}  // namespace gordonlab
