#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "sptutte/errors.hpp"
#include "sptutte/graph.hpp"

namespace sptutte {

// Graph document format (JSON):
//   {"vertices": <int>, "edges": [{"u": <int>, "v": <int>, "w": <string>}, ...]}
// Weights are strings so decimals stay exact ("0.05" parses to 1/20). Integer
// JSON numbers are accepted for "w"; non-integer numbers are rejected because
// they would round through binary floating point.
inline WeightedMultigraph parse_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid graph document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
    if (!doc.contains("vertices") || !doc["vertices"].is_number_integer()) {
        throw ParseError("graph document needs an integer \"vertices\" field");
    }
    const long long n = doc["vertices"].get<long long>();
    if (n < 1) throw ParseError("graph needs at least one vertex");
    if (n > (1LL << 30)) throw ParseError("vertex count out of supported range");
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw ParseError("graph document needs an \"edges\" array");
    }

    WeightedMultigraph g(static_cast<int>(n));
    for (const auto& item : doc["edges"]) {
        if (!item.is_object() || !item.contains("u") || !item.contains("v") || !item.contains("w")) {
            throw ParseError("each edge needs \"u\", \"v\" and \"w\" fields");
        }
        if (!item["u"].is_number_integer() || !item["v"].is_number_integer()) {
            throw ParseError("edge endpoints must be integers");
        }
        const long long u = item["u"].get<long long>();
        const long long v = item["v"].get<long long>();
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError("edge endpoint out of range [0, " + std::to_string(n) + ")");
        }
        Rational w;
        if (item["w"].is_string()) {
            w = Rational::from_string(item["w"].get<std::string>());
        } else if (item["w"].is_number_integer()) {
            w = Rational(item["w"].get<long long>());
        } else {
            throw ParseError("edge weight must be a string (exact) or an integer");
        }
        g.add_edge(static_cast<int>(u), static_cast<int>(v), std::move(w));
    }
    return g;
}

// Canonical serialization: weights in lowest-terms "num/den" (bare integer
// when the denominator is 1), edges in id order, fixed key order. A graph
// round-trips byte-identically through parse_graph/serialize_graph.
inline std::string serialize_graph(const WeightedMultigraph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = g.vertex_count();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const EdgeRecord& e : g.edges()) {
        nlohmann::ordered_json item;
        item["u"] = e.u;
        item["v"] = e.v;
        item["w"] = e.weight.str();
        edges.push_back(std::move(item));
    }
    doc["edges"] = std::move(edges);
    return doc.dump() + "\n";
}

} // namespace sptutte
