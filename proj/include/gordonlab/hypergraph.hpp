#pragma once

#include "gordonlab/partition.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gordonlab {

/// Which reading of "(r,i)-neighborly" to use.
///   InducedNoIsolated: the vertex set of the partition induces a
///     sub-hypergraph of the doubly-indexed family with no isolated vertex.
///   DefinitionConditions: the literal per-part window conditions.
/// The two differ only for partitions with m(1) = i and m(2) >= r - i; the
/// induced reading is the default everywhere.
enum class Interpretation { InducedNoIsolated, DefinitionConditions };

inline std::string to_string(Interpretation interp) {
    return interp == Interpretation::InducedNoIsolated ? "induced" : "definition";
}

inline Interpretation parse_interpretation(const std::string& name) {
    if (name == "induced") return Interpretation::InducedNoIsolated;
    if (name == "definition") return Interpretation::DefinitionConditions;
    throw std::invalid_argument("unknown interpretation: '" + name + "' (expected induced|definition)");
}

/// Vertex x_{level,copy}: `level` is a part value, `copy` a 1-based occurrence index.
struct Vertex {
    int level = 0;
    int copy = 0;
    auto operator<=>(const Vertex&) const = default;
};

/// An edge is a set of vertices, stored sorted.
using Edge = std::vector<Vertex>;

/// Finite hypergraph on x_{level,copy} vertices. Vertices and edges are kept
/// in canonical sorted order; edges must be nonempty subsets of the vertex set.
/// Repeated edges are collapsed.
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        std::sort(vertices_.begin(), vertices_.end());
        vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
        for (auto& e : edges_) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            if (e.empty()) throw std::invalid_argument("edges must be nonempty");
            for (const Vertex& v : e)
                if (!contains(v)) throw std::invalid_argument("edge references a vertex outside the vertex set");
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool contains(const Vertex& v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// True when no edge contains another (in particular, no repeated edges).
    bool is_simple() const {
        for (std::size_t a = 0; a < edges_.size(); ++a)
            for (std::size_t b = 0; b < edges_.size(); ++b) {
                if (a == b) continue;
                if (std::includes(edges_[b].begin(), edges_[b].end(),
                                  edges_[a].begin(), edges_[a].end()))
                    return false;
            }
        return true;
    }

    std::map<Vertex, int> degrees() const {
        std::map<Vertex, int> deg;
        for (const Vertex& v : vertices_) deg[v] = 0;
        for (const Edge& e : edges_)
            for (const Vertex& v : e) ++deg[v];
        return deg;
    }

    std::vector<Vertex> isolated_vertices() const {
        std::vector<Vertex> out;
        for (const auto& [v, d] : degrees())
            if (d == 0) out.push_back(v);
        return out;
    }

    /// Sub-hypergraph on vertex subset W: keeps exactly the edges lying inside W.
    /// Throws if W is not a subset of the vertex set.
    Hypergraph induced_on_vertices(const std::vector<Vertex>& w) const {
        for (const Vertex& v : w)
            if (!contains(v)) throw std::invalid_argument("induced_on_vertices: vertex not in hypergraph");
        std::vector<Vertex> ws(w);
        std::sort(ws.begin(), ws.end());
        ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
        std::vector<Edge> kept;
        for (const Edge& e : edges_)
            if (std::includes(ws.begin(), ws.end(), e.begin(), e.end()))
                kept.push_back(e);
        return Hypergraph(std::move(ws), std::move(kept));
    }

    /// Sub-hypergraph spanned by an edge subset F: vertex set is the union of F.
    /// Throws if some member of F is not an edge.
    Hypergraph spanned_by_edges(const std::vector<Edge>& f) const {
        std::set<Vertex> support;
        for (const Edge& e : f) {
            Edge canon(e);
            std::sort(canon.begin(), canon.end());
            if (!std::binary_search(edges_.begin(), edges_.end(), canon))
                throw std::invalid_argument("spanned_by_edges: not an edge of the hypergraph");
            support.insert(canon.begin(), canon.end());
        }
        return Hypergraph(std::vector<Vertex>(support.begin(), support.end()),
                          std::vector<Edge>(f));
    }

    bool operator==(const Hypergraph&) const = default;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
};

namespace detail {
inline void check_ri(int r, int i) {
    if (r < 1 || i < 1 || i > r)
        throw std::invalid_argument("require 1 <= i <= r");
}

inline Edge prefix_edge(int level_a, int count_a, int level_b, int count_b) {
    Edge e;
    for (int k = 1; k <= count_a; ++k) e.push_back({level_a, k});
    for (int k = 1; k <= count_b; ++k) e.push_back({level_b, k});
    std::sort(e.begin(), e.end());
    return e;
}
}  // namespace detail

/// Finite truncation of the doubly-indexed hypergraph family at `max_level`
/// levels. Vertices: x_{1,1..i} and x_{j,1..r} for 2 <= j <= max_level.
/// Edges: the level-1 edge (x_{1,1},...,x_{1,i}); split edges
/// (x_{l,1..s}, x_{l+1,1..r-s}) with 1 <= s <= i-1 when l = 1 and
/// 1 <= s <= r-1 when l >= 2; and all-equal edges (x_{l,1..r}) for l >= 2.
inline Hypergraph truncate_H_infinity(int r, int i, int max_level) {
    detail::check_ri(r, i);
    if (max_level < 1) throw std::invalid_argument("max_level must be >= 1");

    std::vector<Vertex> vertices;
    for (int k = 1; k <= i; ++k) vertices.push_back({1, k});
    for (int j = 2; j <= max_level; ++j)
        for (int k = 1; k <= r; ++k) vertices.push_back({j, k});

    std::vector<Edge> edges;
    edges.push_back(detail::prefix_edge(1, i, 0, 0));
    for (int l = 1; l < max_level; ++l) {
        int s_hi = (l == 1) ? i - 1 : r - 1;
        for (int s = 1; s <= s_hi; ++s)
            edges.push_back(detail::prefix_edge(l, s, l + 1, r - s));
    }
    for (int l = 2; l <= max_level; ++l)
        edges.push_back(detail::prefix_edge(l, r, 0, 0));

    return Hypergraph(std::move(vertices), std::move(edges));
}

/// Multiplicity bounds every (r,i)-neighborly partition must satisfy:
/// m(1) <= i and m(v) <= r for v >= 2.
inline bool satisfies_neighborly_bounds(const Partition& p, int r, int i) {
    detail::check_ri(r, i);
    for (const auto& [value, mult] : p.multiplicities()) {
        if (value == 1 ? mult > i : mult > r) return false;
    }
    return true;
}

/// Vertex set attached to a partition: x_{v,1..m(v)} for each part value v.
inline std::vector<Vertex> partition_vertices(const Partition& p) {
    std::vector<Vertex> out;
    for (const auto& [value, mult] : p.multiplicities())
        for (int k = 1; k <= mult; ++k) out.push_back({value, k});
    std::sort(out.begin(), out.end());
    return out;
}

/// Hypergraph attached to a partition satisfying the multiplicity bounds
/// (throws std::domain_error otherwise).
///
/// InducedNoIsolated: the sub-hypergraph of truncate_H_infinity(r, i, max+1)
/// induced on the partition's vertex set.
///
/// DefinitionConditions: the level-1 edge when m(1) = i, plus every split edge
/// (x_{l,1..s}, x_{l+1,1..r-s}) with 1 <= s <= r whose vertices all exist
/// (s = r gives the all-equal edge (x_{l,1..r})). Note s ranges up to r even
/// at l = 1 under this reading.
inline Hypergraph build_H_lambda(const Partition& p, int r, int i, Interpretation interp) {
    detail::check_ri(r, i);
    if (!satisfies_neighborly_bounds(p, r, i))
        throw std::domain_error("partition violates the multiplicity bounds m(1) <= i, m(v) <= r");
    if (p.empty()) return Hypergraph{};

    std::vector<Vertex> vertices = partition_vertices(p);
    if (interp == Interpretation::InducedNoIsolated) {
        Hypergraph ambient = truncate_H_infinity(r, i, p.max_part() + 1);
        return ambient.induced_on_vertices(vertices);
    }

    std::vector<int> m = p.multiplicity_profile();
    auto mult = [&](int v) { return v <= p.max_part() ? m[static_cast<std::size_t>(v)] : 0; };
    std::vector<Edge> edges;
    if (mult(1) == i) edges.push_back(detail::prefix_edge(1, i, 0, 0));
    for (int l = 1; l <= p.max_part(); ++l)
        for (int s = 1; s <= r; ++s)
            if (mult(l) >= s && mult(l + 1) >= r - s)
                edges.push_back(s == r ? detail::prefix_edge(l, r, 0, 0)
                                       : detail::prefix_edge(l, s, l + 1, r - s));
    return Hypergraph(std::move(vertices), std::move(edges));
}

/// ASCII PAOH rendering: one row per vertex, one column per edge, a bullet at
/// each incidence.
inline std::string render_paoh(const Hypergraph& h) {
    auto label = [](const Vertex& v) {
        return "x" + std::to_string(v.level) + "," + std::to_string(v.copy);
    };
    std::size_t width = 0;
    for (const Vertex& v : h.vertices()) width = std::max(width, label(v).size());

    std::string out;
    for (const Vertex& v : h.vertices()) {
        std::string row = label(v);
        row.append(width - row.size(), ' ');
        for (const Edge& e : h.edges()) {
            row += ' ';
            row += std::binary_search(e.begin(), e.end(), v) ? "●" : "·";
        }
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace gordonlab
