// JSON text format for the three object kinds. One object per file:
//   {"vertices": ["x1", ...], "facets": [["x1","x2"], ...]}
//   {"vertices": [...], "edges": [["a","b"], ...]}
//   {"vertices": [...], "generators": [{"x1": 2, "x3": 1}, ...]}
// Expanded vertex names serialize as base_copy; parse-then-serialize is the
// identity on canonical output.
#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cmt/core.hpp"

namespace cmt {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline std::vector<VertexLabel> parse_vertex_list(const Json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("expected a \"vertices\" array");
    std::vector<VertexLabel> labels;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex names must be strings");
        labels.push_back(VertexLabel::parse(v.get<std::string>()));
    }
    check_labels_distinct(labels);
    return labels;
}

inline std::map<std::string, int> label_index(const std::vector<VertexLabel>& labels) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i].str()] = static_cast<int>(i);
    return index;
}

inline int lookup_label(const std::map<std::string, int>& index, const Json& j) {
    if (!j.is_string()) throw ParseError("vertex references must be strings");
    auto it = index.find(j.get<std::string>());
    if (it == index.end())
        throw BadIndexError("unknown vertex \"" + j.get<std::string>() + "\"");
    return it->second;
}

inline void require_exactly_one_of(const Json& j) {
    int present = static_cast<int>(j.contains("facets")) + static_cast<int>(j.contains("edges")) +
                  static_cast<int>(j.contains("generators"));
    if (present != 1)
        throw ParseError("expected exactly one of \"facets\", \"edges\", \"generators\"");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parsing

inline SimplicialComplex parse_complex(const std::string& text) {
    Json j = detail::parse_json(text);
    if (!j.is_object()) throw ParseError("expected a JSON object");
    if (!j.contains("facets") || !j["facets"].is_array())
        throw ParseError("expected a \"facets\" array");
    if (j["facets"].empty()) throw EmptyInputError("\"facets\" must not be empty");
    auto labels = j.contains("vertices") ? detail::parse_vertex_list(j) : std::vector<VertexLabel>{};
    auto index = detail::label_index(labels);
    std::vector<Face> faces;
    for (const auto& facet : j["facets"]) {
        if (!facet.is_array()) throw ParseError("each facet must be an array of vertex names");
        Face f = 0;
        for (const auto& v : facet) f |= face_bit(detail::lookup_label(index, v));
        faces.push_back(f);
    }
    return SimplicialComplex(std::move(labels), faces);
}

inline SimpleGraph parse_graph(const std::string& text) {
    Json j = detail::parse_json(text);
    if (!j.is_object()) throw ParseError("expected a JSON object");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw ParseError("expected an \"edges\" array");
    auto labels = detail::parse_vertex_list(j);
    auto index = detail::label_index(labels);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("each edge must be a pair of vertex names");
        edges.emplace_back(detail::lookup_label(index, e[0]), detail::lookup_label(index, e[1]));
    }
    return SimpleGraph(std::move(labels), std::move(edges));
}

inline MonomialIdeal parse_ideal(const std::string& text) {
    Json j = detail::parse_json(text);
    if (!j.is_object()) throw ParseError("expected a JSON object");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw ParseError("expected a \"generators\" array");
    auto labels = detail::parse_vertex_list(j);
    auto index = detail::label_index(labels);
    std::vector<Monomial> gens;
    for (const auto& g : j["generators"]) {
        if (!g.is_object()) throw ParseError("each generator must be an object of variable: exponent");
        std::vector<std::pair<int, int>> exps;
        for (const auto& [key, value] : g.items()) {
            auto it = index.find(key);
            if (it == index.end()) throw BadIndexError("unknown variable \"" + key + "\"");
            if (!value.is_number_integer() || value.get<int>() < 1)
                throw ParseError("exponents must be positive integers");
            exps.emplace_back(it->second, value.get<int>());
        }
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(std::move(labels), std::move(gens));
}

// ---------------------------------------------------------------------------
// Serialization (canonical form)

inline Json to_json(const SimplicialComplex& dx) {
    Json j = Json::object();
    auto& vertices = j["vertices"] = Json::array();
    for (const auto& v : dx.vertices()) vertices.push_back(v.str());
    auto& facets = j["facets"] = Json::array();
    for (Face f : dx.facets()) {
        Json facet = Json::array();
        for (int v : face_indices(f)) facet.push_back(dx.vertices()[static_cast<std::size_t>(v)].str());
        facets.push_back(std::move(facet));
    }
    return j;
}

inline Json to_json(const SimpleGraph& g) {
    Json j = Json::object();
    auto& vertices = j["vertices"] = Json::array();
    for (const auto& v : g.vertices()) vertices.push_back(v.str());
    auto& edges = j["edges"] = Json::array();
    for (auto [a, b] : g.edges()) {
        Json e = Json::array();
        e.push_back(g.vertices()[static_cast<std::size_t>(a)].str());
        e.push_back(g.vertices()[static_cast<std::size_t>(b)].str());
        edges.push_back(std::move(e));
    }
    return j;
}

inline Json to_json(const MonomialIdeal& ideal) {
    Json j = Json::object();
    auto& vertices = j["vertices"] = Json::array();
    for (const auto& v : ideal.ring_vertices()) vertices.push_back(v.str());
    auto& gens = j["generators"] = Json::array();
    for (const auto& g : ideal.generators()) {
        Json gen = Json::object();
        for (auto [v, e] : g.exponents())
            gen[ideal.ring_vertices()[static_cast<std::size_t>(v)].str()] = e;
        gens.push_back(std::move(gen));
    }
    return j;
}

template <class T>
std::string serialize(const T& value) {
    return to_json(value).dump();
}

// For commands that accept any of the three kinds.
using ParsedObject = std::variant<SimplicialComplex, SimpleGraph, MonomialIdeal>;

inline ParsedObject parse_any(const std::string& text) {
    Json j = detail::parse_json(text);
    if (!j.is_object()) throw ParseError("expected a JSON object");
    detail::require_exactly_one_of(j);
    if (j.contains("facets")) return parse_complex(text);
    if (j.contains("edges")) return parse_graph(text);
    return parse_ideal(text);
}

}  // namespace cmt
