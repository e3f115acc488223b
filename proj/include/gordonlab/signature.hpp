#pragma once

#include "gordonlab/hypergraph.hpp"
#include "gordonlab/partition.hpp"
#include "gordonlab/partition_classes.hpp"
#include "gordonlab/series.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gordonlab {

enum class SignatureMethod { BruteForce, LevelDP };

inline std::string to_string(SignatureMethod m) {
    return m == SignatureMethod::BruteForce ? "brute" : "dp";
}

inline SignatureMethod parse_signature_method(const std::string& name) {
    if (name == "brute") return SignatureMethod::BruteForce;
    if (name == "dp") return SignatureMethod::LevelDP;
    throw std::invalid_argument("unknown signature method: '" + name + "' (expected brute|dp)");
}

struct SignatureResult {
    long long value = 0;
    SignatureMethod method = SignatureMethod::BruteForce;
    int edge_count = 0;
    // Number of edge subsets whose union is the full vertex set; only the
    // brute-force method counts them (0 under LevelDP).
    unsigned long long spanning_subset_count = 0;
};

inline constexpr std::size_t kSignatureBruteForceEdgeLimit = 25;
inline constexpr std::size_t kSignatureBruteForceVertexLimit = 63;

/// Signature of a hypergraph: sum of (-1)^|F| over edge subsets F whose union
/// is the whole vertex set. The empty hypergraph has signature 1 (F = {}).
/// Enumerates subsets directly; throws std::length_error past the size limits.
inline SignatureResult signature_bruteforce(const Hypergraph& h) {
    if (h.edge_count() > kSignatureBruteForceEdgeLimit)
        throw std::length_error("edge count exceeds the brute-force limit");
    if (h.vertex_count() > kSignatureBruteForceVertexLimit)
        throw std::length_error("vertex count exceeds the brute-force limit");

    const std::size_t ne = h.edge_count();
    std::vector<std::uint64_t> edge_mask(ne, 0);
    std::uint64_t full = 0;
    for (std::size_t k = 0; k < h.vertex_count(); ++k) full |= std::uint64_t{1} << k;
    for (std::size_t e = 0; e < ne; ++e)
        for (const Vertex& v : h.edges()[e]) {
            auto it = std::lower_bound(h.vertices().begin(), h.vertices().end(), v);
            edge_mask[e] |= std::uint64_t{1} << static_cast<std::size_t>(it - h.vertices().begin());
        }

    // suffix_union[e] = union of edges e..ne-1; lets us abandon branches that
    // can no longer cover the vertex set.
    std::vector<std::uint64_t> suffix_union(ne + 1, 0);
    for (std::size_t e = ne; e-- > 0;) suffix_union[e] = suffix_union[e + 1] | edge_mask[e];

    SignatureResult result{0, SignatureMethod::BruteForce, static_cast<int>(ne), 0};
    auto rec = [&](auto&& self, std::size_t e, std::uint64_t covered, long long sign) -> void {
        if ((covered | suffix_union[e]) != full) return;
        if (e == ne) {
            result.value += sign;
            ++result.spanning_subset_count;
            return;
        }
        self(self, e + 1, covered, sign);
        self(self, e + 1, covered | edge_mask[e], -sign);
    };
    rec(rec, 0, 0, 1);
    return result;
}

// ---------------------------------------------------------------------------
// Level DP for partition hypergraphs.
//
// Write V for the vertex set and, for an edge subset F, supp(F) for its
// union. Since sum_{U subset of S} (-1)^|U| = [S empty] for any finite S,
//
//   delta = sum_F (-1)^|F| [supp(F) = V]
//         = sum_F (-1)^|F| sum_{U subset of V \ supp(F)} (-1)^|U|.
//
// Swap the sums and substitute W = V \ U (so W contains supp(F)):
//
//   delta = sum_{W subset of V} (-1)^(|V|-|W|) sum_{F with supp(F) in W} (-1)^|F|
//         = (-1)^|V| * sum_{W subset of V, W edge-free} (-1)^|W|,
//
// because the inner sum runs over all subsets of {edges lying inside W} and
// vanishes unless that edge set is empty. "Edge-free" = W contains no edge.
//
// For a partition hypergraph every edge is a pair of prefixes: it uses copies
// 1..s of one level and copies 1..(r-s) of the next (or a single prefix, for
// the level-1 edge and the all-equal edges). Hence whether W contains an edge
// depends only on the per-level prefix lengths
//
//   p_l(W) = max { t : x_{l,1},...,x_{l,t} all lie in W }  (0 if x_{l,1} not in W).
//
// Group the sum over W by the vector (p_1,...,p_L). At level l with m_l
// vertices, the copies above the prefix may be any subset of {p_l+2,...,m_l}
// once copy p_l+1 is excluded; signs cancel pairwise, so
//
//   g(m, p) = sum over level-l subsets with prefix exactly p of (-1)^|subset|
//           = (-1)^m   if p = m        (the full level),
//             (-1)^(m-1) if p = m - 1  (all but the boundary copy x_{l,p+1}),
//             0          otherwise.
//
// So only two prefix states survive per level: "full" (d_l = 0) and "one
// dropped" (d_l = 1, only when m_l >= 1), and
//
//   delta = (-1)^|V| * sum_{d in {0,1}^L feasible} prod_l (-1)^(m_l - d_l)
//         = sum_{d feasible} (-1)^(sum_l d_l),
//
// where feasible means the prefix vector p_l = m_l - d_l contains no edge:
// no split s with 1 <= s <= s_max(l), s <= p_l, r - s <= p_{l+1} (p_{L+1} = 0;
// s_max(l) = r for l >= 2, while s_max(1) = i - 1 under InducedNoIsolated and
// r under DefinitionConditions), and p_1 <= i - 1 whenever the level-1 edge
// (x_{1,1..i}) is present, i.e. when m_1 = i. A left-to-right scan over levels
// with the two-state frontier evaluates this in O(L) time.
// ---------------------------------------------------------------------------

/// Signature of the partition's hypergraph via the prefix-state DP above.
/// Throws std::domain_error when the partition is not (r,i)-neighborly under
/// the chosen interpretation.
inline SignatureResult signature_fast(const Partition& p, int r, int i, Interpretation interp) {
    detail::check_ri(r, i);
    if (!is_neighborly(p, r, i, interp))
        throw std::domain_error("partition is not (r,i)-neighborly under the chosen interpretation");

    SignatureResult result{0, SignatureMethod::LevelDP, 0, 0};
    if (p.empty()) {
        result.value = 1;
        return result;
    }

    const int top = p.max_part();
    std::vector<int> m = p.multiplicity_profile();
    auto mult = [&](int l) { return l <= top ? m[static_cast<std::size_t>(l)] : 0; };
    auto s_max = [&](int l) {
        if (l >= 2) return r;
        return interp == Interpretation::InducedNoIsolated ? i - 1 : r;
    };
    // True when the prefix pair (p_l, p_next) contains some split edge at l.
    auto blocked = [&](int l, int p_l, int p_next) {
        int lo = std::max(1, r - p_next);
        int hi = std::min(p_l, s_max(l));
        return lo <= hi;
    };

    for (int l = 1; l <= top; ++l) {
        int cnt = 0;
        for (int s = 1; s <= s_max(l); ++s)
            if (mult(l) >= s && mult(l + 1) >= r - s) ++cnt;
        result.edge_count += cnt;
    }
    if (mult(1) == i) ++result.edge_count;
    if (interp == Interpretation::DefinitionConditions && i == r && mult(1) == r)
        --result.edge_count;  // the level-1 edge coincides with the s = r split

    // val[d] = signed count of feasible prefix choices for levels 1..l with
    // d_l = d. Levels with m_l = 0 admit only d = 0.
    long long val[2] = {0, 0};
    const bool level1_edge = (mult(1) == i);
    for (int d = 0; d <= (mult(1) >= 1 ? 1 : 0); ++d) {
        int p1 = mult(1) - d;
        if (level1_edge && p1 >= i) continue;
        val[d] = (d == 1) ? -1 : 1;
    }
    for (int l = 1; l < top; ++l) {
        long long next[2] = {0, 0};
        for (int dn = 0; dn <= (mult(l + 1) >= 1 ? 1 : 0); ++dn) {
            int p_next = mult(l + 1) - dn;
            long long acc = 0;
            for (int d = 0; d <= 1; ++d) {
                if (val[d] == 0) continue;
                if (!blocked(l, mult(l) - d, p_next)) acc += val[d];
            }
            next[dn] = (dn == 1) ? -acc : acc;
        }
        val[0] = next[0];
        val[1] = next[1];
    }
    for (int d = 0; d <= 1; ++d) {
        if (val[d] == 0) continue;
        if (!blocked(top, mult(top) - d, 0)) result.value += val[d];
    }
    return result;
}

inline SignatureResult signature_of_partition(const Partition& p, int r, int i,
                                              Interpretation interp, SignatureMethod method) {
    if (method == SignatureMethod::LevelDP) return signature_fast(p, r, i, interp);
    if (!is_neighborly(p, r, i, interp))
        throw std::domain_error("partition is not (r,i)-neighborly under the chosen interpretation");
    return signature_bruteforce(build_H_lambda(p, r, i, interp));
}

/// Generating series of total signature: coefficient of q^n is the sum of
/// signatures over all (r,i)-neighborly partitions of n.
inline TruncatedSeries neighborly_signed_series(int r, int i, int trunc,
                                                Interpretation interp = Interpretation::InducedNoIsolated,
                                                SignatureMethod method = SignatureMethod::LevelDP) {
    detail::check_ri(r, i);
    TruncatedSeries out(trunc);
    for (int n = 0; n <= trunc; ++n) {
        Integer total = 0;
        for (const Partition& p : enumerate_class(n, PartitionClass::neighborly(r, i), interp))
            total += signature_of_partition(p, r, i, interp, method).value;
        out.set_coeff(n, total);
    }
    return out;
}

}  // namespace gordonlab
