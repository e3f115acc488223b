#pragma once

#include "gordonlab/hilbert.hpp"
#include "gordonlab/hypergraph.hpp"
#include "gordonlab/partition.hpp"
#include "gordonlab/series.hpp"
#include "gordonlab/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace gordonlab {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits serialize as JSON numbers, larger ones as
/// decimal strings; both forms parse back.
inline Json integer_to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

inline Json partition_to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array of parts");
    return Partition(j.get<std::vector<int>>());
}

inline Json vertex_to_json(const Vertex& v) { return Json::array({v.level, v.copy}); }

inline Vertex vertex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("vertex must be a [level, copy] pair");
    return {j[0].get<int>(), j[1].get<int>()};
}

inline Json hypergraph_to_json(const Hypergraph& h) {
    Json vertices = Json::array();
    for (const Vertex& v : h.vertices()) vertices.push_back(vertex_to_json(v));
    Json edges = Json::array();
    for (const Edge& e : h.edges()) {
        Json edge = Json::array();
        for (const Vertex& v : e) edge.push_back(vertex_to_json(v));
        edges.push_back(std::move(edge));
    }
    return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

inline Hypergraph hypergraph_from_json(const Json& j) {
    std::vector<Vertex> vertices;
    for (const Json& v : j.at("vertices")) vertices.push_back(vertex_from_json(v));
    std::vector<Edge> edges;
    for (const Json& ej : j.at("edges")) {
        Edge e;
        for (const Json& v : ej) e.push_back(vertex_from_json(v));
        edges.push_back(std::move(e));
    }
    return Hypergraph(std::move(vertices), std::move(edges));
}

inline Json series_to_json(const TruncatedSeries& s) {
    Json coeffs = Json::array();
    for (const Integer& c : s.coeffs()) coeffs.push_back(integer_to_json(c));
    return Json{{"trunc", s.trunc()}, {"coeffs", std::move(coeffs)}};
}

inline TruncatedSeries series_from_json(const Json& j) {
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.empty())
        throw std::invalid_argument("series coeffs must be a nonempty array");
    std::vector<Integer> out;
    for (const Json& c : coeffs) out.push_back(integer_from_json(c));
    TruncatedSeries s = TruncatedSeries::from_coeffs(std::move(out));
    if (j.contains("trunc") && j.at("trunc").get<int>() != s.trunc())
        throw std::invalid_argument("series trunc does not match coefficient count");
    return s;
}

/// Monomials serialize as {"level,copy": exponent} objects; ideals as lists.
inline Json monomial_to_json(const Monomial& m) {
    Json j = Json::object();
    for (const auto& [v, e] : m.exponents())
        j[std::to_string(v.level) + "," + std::to_string(v.copy)] = e;
    return j;
}

inline Json edge_ideal_to_json(const EdgeIdeal& ideal) {
    Json j = Json::array();
    for (const Monomial& g : ideal.generators) j.push_back(monomial_to_json(g));
    return j;
}

inline Json report_to_json(const VerificationReport& report) {
    Json params = Json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    Json rows = Json::array();
    for (const ReportRow& row : report.rows)
        rows.push_back(Json{{"index", row.index},
                            {"lhs", integer_to_json(row.lhs)},
                            {"rhs", integer_to_json(row.rhs)},
                            {"equal", row.equal}});
    Json j{{"identity", report.identity},
           {"params", std::move(params)},
           {"rows", std::move(rows)},
           {"pass", report.pass}};
    if (report.first_failure) j["first_failure"] = *report.first_failure;
    return j;
}

}  // namespace gordonlab
