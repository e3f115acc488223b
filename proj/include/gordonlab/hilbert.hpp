#pragma once

#include "gordonlab/hypergraph.hpp"
#include "gordonlab/partition_classes.hpp"
#include "gordonlab/qseries.hpp"
#include "gordonlab/series.hpp"
#include "gordonlab/signature.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace gordonlab {

/// Positive weight per vertex; weight of a monomial is the weighted degree.
struct WeightAssignment {
    std::map<Vertex, int> weights;

    int weight_of(const Vertex& v) const {
        auto it = weights.find(v);
        if (it == weights.end()) throw std::invalid_argument("vertex has no assigned weight");
        if (it->second < 1) throw std::invalid_argument("weights must be positive");
        return it->second;
    }
};

/// The grading used for partition hypergraphs: x_{j,k} weighs j.
inline WeightAssignment level_weights(const Hypergraph& h) {
    WeightAssignment w;
    for (const Vertex& v : h.vertices()) w.weights[v] = v.level;
    return w;
}

/// Monomial in the x_{level,copy} variables (exponents >= 1 stored).
class Monomial {
public:
    Monomial() = default;

    static Monomial from_vertices(const std::vector<Vertex>& vs) {
        Monomial m;
        for (const Vertex& v : vs) ++m.exps_[v];
        return m;
    }

    const std::map<Vertex, int>& exponents() const { return exps_; }

    int exponent(const Vertex& v) const {
        auto it = exps_.find(v);
        return it == exps_.end() ? 0 : it->second;
    }

    void set_exponent(const Vertex& v, int e) {
        if (e < 0) throw std::invalid_argument("exponents must be >= 0");
        if (e == 0)
            exps_.erase(v);
        else
            exps_[v] = e;
    }

    bool is_one() const { return exps_.empty(); }

    bool is_squarefree() const {
        for (const auto& [v, e] : exps_)
            if (e > 1) return false;
        return true;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }

    long long weight(const WeightAssignment& w) const {
        long long total = 0;
        for (const auto& [v, e] : exps_) total += static_cast<long long>(e) * w.weight_of(v);
        return total;
    }

    bool divides(const Monomial& other) const {
        for (const auto& [v, e] : exps_)
            if (other.exponent(v) < e) return false;
        return true;
    }

    Monomial lcm(const Monomial& other) const {
        Monomial m(*this);
        for (const auto& [v, e] : other.exps_) {
            auto it = m.exps_.find(v);
            if (it == m.exps_.end() || it->second < e) m.exps_[v] = e;
        }
        return m;
    }

    auto operator<=>(const Monomial&) const = default;

private:
    std::map<Vertex, int> exps_;
};

/// Squarefree monomial ideal generated by the products of the edges'
/// vertices, one generator per edge, in the hypergraph's edge order.
struct EdgeIdeal {
    std::vector<Monomial> generators;
};

inline EdgeIdeal edge_ideal(const Hypergraph& h) {
    EdgeIdeal ideal;
    for (const Edge& e : h.edges()) ideal.generators.push_back(Monomial::from_vertices(e));
    return ideal;
}

inline constexpr std::size_t kHilbertEdgeLimit = 25;
inline constexpr std::size_t kSupportVertexLimit = 20;

/// Weighted numerator of the quotient by the edge ideal:
///   sum over edge subsets F of (-1)^|F| q^(weight of lcm of F).
/// Since generators are squarefree, the lcm's weight is the weight of the
/// union of the edges in F. Requires a simple hypergraph; branches whose
/// union already outweighs the truncation order are pruned.
inline TruncatedSeries hilbert_numerator_weighted(const Hypergraph& h, const WeightAssignment& w,
                                                  int trunc) {
    if (!h.is_simple())
        throw std::invalid_argument("hilbert_numerator_weighted requires a simple hypergraph");
    if (h.edge_count() > kHilbertEdgeLimit)
        throw std::length_error("edge count exceeds the numerator enumeration limit");
    if (h.vertex_count() > 63)
        throw std::length_error("vertex count exceeds the numerator enumeration limit");

    const std::size_t nv = h.vertex_count();
    std::vector<long long> vweight(nv);
    for (std::size_t k = 0; k < nv; ++k) vweight[k] = w.weight_of(h.vertices()[k]);

    const std::size_t ne = h.edge_count();
    std::vector<std::uint64_t> edge_mask(ne, 0);
    for (std::size_t e = 0; e < ne; ++e)
        for (const Vertex& v : h.edges()[e]) {
            auto it = std::lower_bound(h.vertices().begin(), h.vertices().end(), v);
            edge_mask[e] |= std::uint64_t{1} << static_cast<std::size_t>(it - h.vertices().begin());
        }

    TruncatedSeries out(trunc);
    auto rec = [&](auto&& self, std::size_t e, std::uint64_t covered, long long weight,
                   long long sign) -> void {
        if (e == ne) {
            out.add_to_coeff(static_cast<int>(weight), sign);
            return;
        }
        self(self, e + 1, covered, weight, sign);
        std::uint64_t fresh = edge_mask[e] & ~covered;
        long long grown = weight;
        for (std::uint64_t bits = fresh; bits;) {
            std::size_t k = static_cast<std::size_t>(std::countr_zero(bits));
            grown += vweight[k];
            bits &= bits - 1;
        }
        if (grown <= trunc) self(self, e + 1, covered | edge_mask[e], grown, -sign);
    };
    rec(rec, 0, 0, 0, 1);
    return out;
}

/// Weighted Hilbert series of the quotient by the edge ideal, computed from
/// the standard-monomial description: a monomial survives iff its support is
/// edge-free, so the series is
///   sum over edge-free subsets S of prod_{v in S} q^w(v) / (1 - q^w(v)).
inline TruncatedSeries quotient_series_by_support(const Hypergraph& h, const WeightAssignment& w,
                                                  int trunc) {
    if (h.vertex_count() > kSupportVertexLimit)
        throw std::length_error("vertex count exceeds the support enumeration limit");

    const std::size_t nv = h.vertex_count();
    std::vector<int> vweight(nv);
    for (std::size_t k = 0; k < nv; ++k) vweight[k] = static_cast<int>(w.weight_of(h.vertices()[k]));

    const std::size_t ne = h.edge_count();
    std::vector<std::uint32_t> edge_mask(ne, 0);
    for (std::size_t e = 0; e < ne; ++e)
        for (const Vertex& v : h.edges()[e]) {
            auto it = std::lower_bound(h.vertices().begin(), h.vertices().end(), v);
            edge_mask[e] |= std::uint32_t{1} << static_cast<std::size_t>(it - h.vertices().begin());
        }

    TruncatedSeries total(trunc);
    const std::uint32_t subsets = nv >= 32 ? 0 : (std::uint32_t{1} << nv);
    for (std::uint32_t s = 0; s < subsets; ++s) {
        bool edge_free = true;
        for (std::size_t e = 0; e < ne && edge_free; ++e)
            if ((edge_mask[e] & s) == edge_mask[e]) edge_free = false;
        if (!edge_free) continue;

        TruncatedSeries term = TruncatedSeries::one(trunc);
        bool dead = false;
        for (std::size_t k = 0; k < nv && !dead; ++k) {
            if (!(s & (std::uint32_t{1} << k))) continue;
            if (vweight[k] > trunc) {
                dead = true;  // q^w / (1 - q^w) vanishes below the order
                break;
            }
            term = mul_inv_one_minus_qk(shifted(term, vweight[k]), vweight[k]);
        }
        if (!dead) total = total + term;
    }
    return total;
}

namespace detail {
/// Divide by (1-q)^i * prod_{j=2..trunc} (1-q^j)^r — the weighted vertex
/// factors of the doubly-indexed family.
inline TruncatedSeries divide_by_vertex_factors(TruncatedSeries s, int r, int i) {
    for (int k = 0; k < i; ++k) s = mul_inv_one_minus_qk(s, 1);
    for (int j = 2; j <= s.trunc(); ++j)
        for (int k = 0; k < r; ++k) s = mul_inv_one_minus_qk(s, j);
    return s;
}
}  // namespace detail

/// Fewest levels whose truncation determines the numerator exactly at this
/// order: every omitted edge then weighs at least r*L + 1 > trunc.
inline int hp_P_ri_exact_levels(int r, int trunc) {
    return std::max(1, (trunc + r - 1) / r);
}

/// True when the finite-truncation numerator route is usable: exact levels as
/// above, edge count within the enumeration budget.
inline bool hp_P_ri_hilbert_route_available(int r, int i, int trunc) {
    detail::check_ri(r, i);
    return truncate_H_infinity(r, i, hp_P_ri_exact_levels(r, trunc)).edge_count() <=
           kHilbertEdgeLimit;
}

/// Weighted Hilbert series of the quotient by the edge ideal of the
/// doubly-indexed family, via the finite truncation's numerator. The level
/// count is chosen so that every omitted edge outweighs the truncation order,
/// making the result exact; throws when that many levels carry too many edges
/// for subset enumeration.
inline TruncatedSeries hp_P_ri_via_hilbert(int r, int i, int trunc) {
    detail::check_ri(r, i);
    Hypergraph h = truncate_H_infinity(r, i, hp_P_ri_exact_levels(r, trunc));
    TruncatedSeries num = hilbert_numerator_weighted(h, level_weights(h), trunc);
    return detail::divide_by_vertex_factors(num, r, i);
}

/// Same series via the signature generating function as numerator.
inline TruncatedSeries hp_P_ri_via_signature(int r, int i, int trunc,
                                             Interpretation interp = Interpretation::InducedNoIsolated) {
    return detail::divide_by_vertex_factors(neighborly_signed_series(r, i, trunc, interp), r, i);
}

/// Production entry point: computes the series via the signature route and,
/// whenever the finite-truncation route is exact and small enough, recomputes
/// it that way and insists the two agree.
inline TruncatedSeries hp_P_ri(int r, int i, int trunc,
                               Interpretation interp = Interpretation::InducedNoIsolated) {
    TruncatedSeries s = hp_P_ri_via_signature(r, i, trunc, interp);
    if (interp == Interpretation::InducedNoIsolated && hp_P_ri_hilbert_route_available(r, i, trunc)) {
        if (hp_P_ri_via_hilbert(r, i, trunc) != s)
            throw std::logic_error("internal cross-check failed: numerator routes disagree");
    }
    return s;
}

/// Weighted Hilbert series of K[x_1,x_2,...]/J_{r,i} where J is generated by
/// x_1^i and x_l^s x_{l+1}^(r-s); equals the counting series of the
/// flat-difference partition class.
inline TruncatedSeries hp_quotient_J(int r, int i, int trunc) {
    detail::check_ri(r, i);
    if (r < 2) throw std::invalid_argument("hp_quotient_J requires r >= 2");
    return class_series(PartitionClass::gordon_b(r, i), trunc);
}

// --- one-variable-per-level monomials and polarization ---------------------

/// Exponent map of a monomial in x_1, x_2, ... (level -> exponent >= 1).
using VariableExponents = std::map<int, int>;

inline bool var_divides(const VariableExponents& a, const VariableExponents& b) {
    for (const auto& [level, e] : a) {
        auto it = b.find(level);
        if (it == b.end() || it->second < e) return false;
    }
    return true;
}

/// Raw generator list of J_{r,i} restricted to levels <= max_level:
/// x_1^i plus x_l^s x_{l+1}^(r-s) for 1 <= s <= r (deduplicated).
inline std::vector<VariableExponents> jri_generators(int r, int i, int max_level) {
    detail::check_ri(r, i);
    if (max_level < 1) throw std::invalid_argument("max_level must be >= 1");
    std::vector<VariableExponents> gens;
    auto push = [&](VariableExponents g) {
        for (const auto& have : gens)
            if (have == g) return;
        gens.push_back(std::move(g));
    };
    push({{1, i}});
    for (int l = 1; l <= max_level; ++l)
        for (int s = 1; s <= r; ++s) {
            if (s < r && l + 1 > max_level) continue;
            VariableExponents g;
            g[l] = s;
            if (s < r) g[l + 1] = r - s;
            push(std::move(g));
        }
    return gens;
}

/// Divisibility-minimal subset of jri_generators.
inline std::vector<VariableExponents> jri_minimal_generators(int r, int i, int max_level) {
    std::vector<VariableExponents> gens = jri_generators(r, i, max_level);
    std::vector<VariableExponents> minimal;
    for (std::size_t a = 0; a < gens.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < gens.size() && !redundant; ++b)
            if (a != b && var_divides(gens[b], gens[a])) redundant = true;
        if (!redundant) minimal.push_back(gens[a]);
    }
    return minimal;
}

/// Polarization: x_l^e becomes x_{l,1} x_{l,2} ... x_{l,e}.
inline Monomial polarize(const VariableExponents& g) {
    Monomial m;
    for (const auto& [level, e] : g)
        for (int k = 1; k <= e; ++k) m.set_exponent({level, k}, 1);
    return m;
}

}  // namespace gordonlab
