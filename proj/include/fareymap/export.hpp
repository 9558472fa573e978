#pragma once

/**
 * Deterministic graph exporters for the level-n map: DOT, GraphML, JSON and
 * CSV. Vertices are labelled with their canonical "a/c" text; vertex and edge
 * listings are sorted lexicographically by label, so identical input produces
 * byte-identical output.
 */

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fareymap/errors.hpp"
#include "fareymap/graph.hpp"
#include "fareymap/map.hpp"
#include "fareymap/modular.hpp"

namespace fareymap {

enum class export_format {
    dot,
    graphml,
    json,
    csv,
};

inline export_format parse_export_format(std::string_view s) {
    if (s == "dot") return export_format::dot;
    if (s == "graphml") return export_format::graphml;
    if (s == "json") return export_format::json;
    if (s == "csv") return export_format::csv;
    throw format_error("unsupported export format '" + std::string(s) +
                       "' (expected dot, graphml, json or csv)");
}

namespace detail {

struct labeled_graph {
    std::vector<std::string> labels;                       // sorted lexicographically
    std::vector<std::pair<std::string, std::string>> edges; // label pairs, sorted
    std::vector<std::pair<std::string, std::vector<std::string>>> rotations;
};

inline labeled_graph label_graph(level n) {
    const auto g = build_graph(n);
    labeled_graph out;
    out.labels.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (const auto& v : g.vertices()) out.labels.push_back(v.str());

    for (std::int32_t i = 0; i < g.vertex_count(); ++i) {
        for (const std::int32_t j : g.neighbors(i)) {
            if (j <= i) continue;
            auto u = out.labels[static_cast<std::size_t>(i)];
            auto w = out.labels[static_cast<std::size_t>(j)];
            if (w < u) std::swap(u, w);
            out.edges.emplace_back(std::move(u), std::move(w));
        }
    }

    for (std::int32_t i = 0; i < g.vertex_count(); ++i) {
        std::vector<std::string> row;
        row.reserve(static_cast<std::size_t>(g.level_value()));
        for (const std::int32_t j : g.neighbors(i)) row.push_back(out.labels[static_cast<std::size_t>(j)]);
        out.rotations.emplace_back(out.labels[static_cast<std::size_t>(i)], std::move(row));
    }

    std::sort(out.labels.begin(), out.labels.end());
    std::sort(out.edges.begin(), out.edges.end());
    std::sort(out.rotations.begin(), out.rotations.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace detail

/// Serializes the level-n graph in the requested format. Output is a pure
/// function of (n, fmt), byte for byte.
inline std::string export_graph(level n, export_format fmt,
                                std::int64_t max_level = default_level_cap) {
    require_level_within(n, max_level);
    const auto g = detail::label_graph(n);
    const std::string name = "farey_map_" + std::to_string(n.value());

    switch (fmt) {
    case export_format::dot: {
        std::string out = "graph " + name + " {\n";
        for (const auto& label : g.labels) out += "  \"" + label + "\";\n";
        for (const auto& [u, v] : g.edges) out += "  \"" + u + "\" -- \"" + v + "\";\n";
        out += "}\n";
        return out;
    }
    case export_format::graphml: {
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
        out += "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
        out += "  <graph id=\"" + name + "\" edgedefault=\"undirected\">\n";
        for (std::size_t i = 0; i < g.labels.size(); ++i)
            out += "    <node id=\"n" + std::to_string(i) + "\"><data key=\"label\">" +
                   g.labels[i] + "</data></node>\n";
        const auto id_of = [&](const std::string& label) {
            const auto it = std::lower_bound(g.labels.begin(), g.labels.end(), label);
            return std::to_string(it - g.labels.begin());
        };
        for (const auto& [u, v] : g.edges)
            out += "    <edge source=\"n" + id_of(u) + "\" target=\"n" + id_of(v) + "\"/>\n";
        out += "  </graph>\n</graphml>\n";
        return out;
    }
    case export_format::json: {
        const auto st = statistics(n);
        nlohmann::json j;
        j["level"] = n.value();
        j["statistics"] = {
            {"darts", st.darts},   {"edges", st.edges},     {"faces", st.faces},
            {"vertices", st.vertices}, {"valency", st.valency}, {"genus", st.genus},
        };
        j["vertices"] = g.labels;
        auto& edges = j["edges"] = nlohmann::json::array();
        for (const auto& [u, v] : g.edges) edges.push_back({u, v});
        auto& rotations = j["rotations"] = nlohmann::json::object();
        for (const auto& [label, row] : g.rotations) rotations[label] = row;
        return j.dump(2) + "\n";
    }
    case export_format::csv: {
        std::string out = "u,v\n";
        for (const auto& [u, v] : g.edges) out += u + "," + v + "\n";
        return out;
    }
    }
    throw format_error("unsupported export format");
}

} // namespace fareymap
