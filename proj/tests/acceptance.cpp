// Release gate: every acceptance check in one binary, one [PASS]/[FAIL] line
// each, wall time included. Exit status 0 iff every line passes. All
// comparisons are exact; a check with a time budget also fails on overrun.
#include <gordonlab/gordonlab.hpp>

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace gordonlab;

namespace {

constexpr Interpretation kInduced = Interpretation::InducedNoIsolated;
constexpr Interpretation kDefinition = Interpretation::DefinitionConditions;

std::string at(int r, int i) {
    return "(r=" + std::to_string(r) + ", i=" + std::to_string(i) + ")";
}

std::string at(int r, int i, int n) {
    return "(r=" + std::to_string(r) + ", i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")";
}

// Worked examples kept exact: the three neighborly sets at n = 5, the three
// signatures at n = 7 (by both methods), and their zero total against the
// signed distinct-part count.
std::string criterion_examples() {
    auto names = [](int n, int i) {
        std::vector<std::string> out;
        for (const Partition& p : enumerate_class(n, PartitionClass::neighborly(3, i), kInduced))
            out.push_back(p.to_string());
        return out;
    };
    if (names(5, 3) != std::vector<std::string>{"2,2,1", "2,1,1,1"})
        return "neighborly (3,3) partitions of 5 are not {2,2,1; 2,1,1,1}";
    if (names(5, 2) != std::vector<std::string>{"2,2,1"})
        return "neighborly (3,2) partitions of 5 are not {2,2,1}";
    if (!names(5, 1).empty()) return "neighborly (3,1) partitions of 5 should be empty";

    const std::vector<std::pair<std::string, long long>> expected = {
        {"3,2,2", -1}, {"2,2,2,1", 1}, {"2,2,1,1,1", 0}};
    long long total = 0;
    for (const auto& [text, value] : expected) {
        Partition p = parse_partition(text);
        SignatureResult fast = signature_fast(p, 3, 3, kInduced);
        SignatureResult brute = signature_bruteforce(build_H_lambda(p, 3, 3, kInduced));
        if (fast.value != value)
            return "DP signature of " + text + " is " + std::to_string(fast.value) + ", expected " +
                   std::to_string(value);
        if (brute.value != value)
            return "brute signature of " + text + " is " + std::to_string(brute.value) +
                   ", expected " + std::to_string(value);
        total += value;
    }
    if (count_class(7, PartitionClass::neighborly(3, 3), kInduced) != 3)
        return "neighborly (3,3) partitions of 7 should be exactly the three listed";
    if (total != 0) return "signatures at n=7 do not sum to zero";
    if (signed_count_R(7, 3, 3) != 0) return "signed distinct-part count at n=7 is nonzero";
    return {};
}

// Signed neighborly series == mod-(2r+1) product == signed distinct-part
// series, coefficientwise to n = 25, plus interpretation agreement to n = 20:
// equal signed sums, and every partition admitted only by the literal
// conditions must carry signature zero.
std::string criterion_main_identity() {
    for (int r = 2; r <= 4; ++r)
        for (int i = 1; i <= r; ++i) {
            TruncatedSeries sig = neighborly_signed_series(r, i, 25, kInduced);
            TruncatedSeries prod = product_side(r, i, 25);
            TruncatedSeries signed_r = signed_R_series(r, i, 25);
            for (int n = 0; n <= 25; ++n) {
                if (sig.coeff(n) != prod.coeff(n))
                    return "signature sum differs from product coefficient at " + at(r, i, n);
                if (prod.coeff(n) != signed_r.coeff(n))
                    return "product coefficient differs from signed distinct count at " + at(r, i, n);
            }

            for (int n = 0; n <= 20; ++n) {
                std::vector<Partition> ind =
                    enumerate_class(n, PartitionClass::neighborly(r, i), kInduced);
                std::vector<Partition> def =
                    enumerate_class(n, PartitionClass::neighborly(r, i), kDefinition);
                std::set<Partition> ind_set(ind.begin(), ind.end());
                std::set<Partition> def_set(def.begin(), def.end());

                long long sum_ind = 0;
                for (const Partition& p : ind) {
                    if (!def_set.count(p))
                        return "induced-admitted " + p.to_string() +
                               " fails the literal conditions at " + at(r, i, n);
                    sum_ind += signature_fast(p, r, i, kInduced).value;
                }
                long long sum_def = 0;
                for (const Partition& p : def) {
                    long long d = signature_fast(p, r, i, kDefinition).value;
                    sum_def += d;
                    if (!ind_set.count(p) && d != 0)
                        return "literal-only partition " + p.to_string() +
                               " has nonzero signature at " + at(r, i, n);
                }
                if (sum_ind != sum_def)
                    return "signed sums disagree between interpretations at " + at(r, i, n);
            }
        }
    return {};
}

// Flat-difference class counts equal the forbidden-residue class counts,
// each side by filtering a single enumeration of all partitions of n.
std::string criterion_gordon() {
    for (int n = 0; n <= 40; ++n) {
        long long count_b[5][5] = {};
        long long count_a[5][5] = {};
        for (const Partition& p : enumerate_partitions(n))
            for (int r = 2; r <= 4; ++r)
                for (int i = 1; i <= r; ++i) {
                    if (is_gordon_b(p, r, i)) ++count_b[r][i];
                    if (is_gordon_a(p, r, i)) ++count_a[r][i];
                }
        for (int r = 2; r <= 4; ++r)
            for (int i = 1; i <= r; ++i)
                if (count_b[r][i] != count_a[r][i])
                    return "class counts differ at " + at(r, i, n) + ": " +
                           std::to_string(count_b[r][i]) + " vs " + std::to_string(count_a[r][i]);
        // Anchors against an independent computation, so an accidentally
        // empty sweep cannot pass.
        if (n == 40 && (count_b[2][2] != 374 || count_b[3][2] != 2154 || count_b[4][4] != 6524))
            return "class counts at n=40 disagree with the recorded values";
    }
    return {};
}

std::string criterion_sum_vs_product() {
    for (int r = 2; r <= 4; ++r)
        for (int i = 1; i <= r; ++i) {
            TruncatedSeries sum = andrews_gordon_sum_side(r, i, 40);
            TruncatedSeries prod = andrews_gordon_product_side(r, i, 40);
            for (int n = 0; n <= 40; ++n)
                if (sum.coeff(n) != prod.coeff(n))
                    return "sum side differs from product side at " + at(r, i, n);
        }
    return {};
}

// Level DP against direct edge-subset enumeration, for every neighborly
// partition of weight <= 22, both interpretations. Values and edge counts.
std::string criterion_dp_vs_brute() {
    long long cases = 0;
    for (int r = 1; r <= 4; ++r)
        for (int i = 1; i <= r; ++i)
            for (Interpretation interp : {kInduced, kDefinition}) {
                VerificationReport rep = verify_dp_vs_brute(r, i, 22, interp);
                if (!rep.pass)
                    return "DP and brute force disagree at " + at(r, i) + ", " + to_string(interp) +
                           ", case " + std::to_string(*rep.first_failure);
                cases += static_cast<long long>(rep.rows.size());
            }
    if (cases == 0) return "sweep was empty";
    return {};
}

std::string criterion_numerator_oracle() {
    VerificationReport rep = verify_hilbert_numerator(50, 15, 20240917);
    if (!rep.pass) {
        long long idx = *rep.first_failure;
        return "mismatch in case " + std::to_string(idx / 16) + " at degree " +
               std::to_string(idx % 16);
    }
    if (rep.rows.size() != 50u * 16u) return "unexpected row count";
    return {};
}

// Both quotient-series routes (truncated-numerator and signature generating
// function) to order 12, then the specialization relating the two quotients
// to order 20.
std::string criterion_quotient_series() {
    for (int r = 1; r <= 3; ++r)
        for (int i = 1; i <= r; ++i) {
            if (!hp_P_ri_hilbert_route_available(r, i, 12))
                return "numerator route unavailable at " + at(r, i);
            if (hp_P_ri_via_hilbert(r, i, 12) != hp_P_ri_via_signature(r, i, 12, kInduced))
                return "quotient-series routes disagree at " + at(r, i);
        }
    for (int r = 2; r <= 4; ++r)
        for (int i = 1; i <= r; ++i) {
            VerificationReport rep = verify_polarization_relation(r, i, 20, kInduced);
            if (!rep.pass)
                return "specialization relation fails at " + at(r, i) + ", degree " +
                       std::to_string(*rep.first_failure);
        }
    return {};
}

// Truncations must be simple, and weight-n prefix vertex subsets of the
// ambient truncation with no isolated vertex in their induced sub-hypergraph
// must biject with the neighborly partitions of n (matching profiles).
std::string criterion_structure() {
    for (int r = 1; r <= 5; ++r)
        for (int i = 1; i <= r; ++i)
            for (int levels = 1; levels <= 8; ++levels)
                if (!truncate_H_infinity(r, i, levels).is_simple())
                    return "truncation not simple at " + at(r, i) + ", levels " +
                           std::to_string(levels);

    long long matched = 0;
    for (int r = 1; r <= 4; ++r)
        for (int i = 1; i <= r; ++i)
            for (int n = 0; n <= 18; ++n) {
                // n levels make every vertex of weight <= n available.
                Hypergraph ambient = truncate_H_infinity(r, i, std::max(1, n));
                std::set<std::vector<int>> from_subsets;
                for (const Partition& p : enumerate_partitions_bounded(n, i, r)) {
                    Hypergraph induced = ambient.induced_on_vertices(partition_vertices(p));
                    if (induced.isolated_vertices().empty())
                        from_subsets.insert(p.multiplicity_profile());
                }
                std::set<std::vector<int>> from_class;
                for (const Partition& p : enumerate_class(n, PartitionClass::neighborly(r, i), kInduced))
                    from_class.insert(p.multiplicity_profile());
                if (from_subsets != from_class)
                    return "vertex-subset side and partition side differ at " + at(r, i, n);
                matched += static_cast<long long>(from_class.size());
            }
    if (matched == 0) return "bijection sweep was empty";
    return {};
}

struct Criterion {
    int number;
    const char* label;
    double budget_seconds;  // 0 means no runtime bound
    std::function<std::string()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "worked examples: classes at n=5, signatures at n=7", 1.0, criterion_examples},
        {2, "signed series = product = signed distinct counts (n<=25), interpretations agree (n<=20)",
         120.0, criterion_main_identity},
        {3, "flat-difference counts = forbidden-residue counts (r<=4, n<=40)", 120.0,
         criterion_gordon},
        {4, "multiple-sum side = product side (r=2..4, n<=40)", 60.0, criterion_sum_vs_product},
        {5, "signature DP = brute force, all neighborly partitions, |lambda|<=22, both interpretations",
         0.0, criterion_dp_vs_brute},
        {6, "numerator = support oracle on 50 random weighted hypergraphs (n<=15)", 0.0,
         criterion_numerator_oracle},
        {7, "quotient-series routes agree (n<=12, r<=3); specialization relation (n<=20, r<=4)", 0.0,
         criterion_quotient_series},
        {8, "truncations simple (r<=5, levels<=8); partition<->vertex-subset bijection (n<=18, r<=4)",
         0.0, criterion_structure},
    };

    int passed = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (detail.empty() && c.budget_seconds > 0 && seconds > c.budget_seconds)
            detail = "time budget of " + std::to_string(c.budget_seconds) + " s exceeded";
        if (detail.empty()) {
            ++passed;
            std::printf("[PASS] %d. %s (%.2f s)\n", c.number, c.label, seconds);
        } else {
            std::printf("[FAIL] %d. %s (%.2f s): %s\n", c.number, c.label, seconds, detail.c_str());
        }
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
