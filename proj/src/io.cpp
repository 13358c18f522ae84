#include "okp/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace okp {

double round_sig(double value, int digits) {
    if (!std::isfinite(value)) return value;
    return std::strtod(format_sig(value, digits).c_str(), nullptr);
}

std::string format_sig(double value, int digits) {
    if (std::isnan(value)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

json graph_to_json(const ConvexGraph& g) {
    json doc;
    doc["n"] = g.n();
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.a, e.b});
    doc["edges"] = std::move(edges);
    if (g.coloring()) {
        json colors = json::array();
        for (auto c : *g.coloring()) colors.push_back(static_cast<int>(c));
        doc["coloring"] = std::move(colors);
    }
    return doc;
}

ConvexGraph graph_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("graph JSON must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer()) throw InputError("graph JSON needs integer \"n\"");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw InputError("graph JSON needs array \"edges\"");
    const int n = doc["n"].get<int>();
    std::vector<Chord> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw InputError("each edge must be a pair of integers");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::optional<Coloring> coloring;
    if (doc.contains("coloring") && !doc["coloring"].is_null()) {
        if (!doc["coloring"].is_array()) throw InputError("\"coloring\" must be an array");
        coloring = Coloring();
        for (const auto& c : doc["coloring"]) {
            if (!c.is_number_integer() || c.get<int>() < 0 || c.get<int>() > 1) {
                throw InputError("coloring entries must be 0 or 1");
            }
            coloring->push_back(static_cast<std::uint8_t>(c.get<int>()));
        }
    }
    return ConvexGraph(n, std::move(edges), std::move(coloring));
}

ConvexGraph parse_graph(std::string_view text) {
    return graph_from_json(json::parse(text));
}

json outercopy_to_json(const OuterCopyGraph& g) {
    auto pairs = [](const std::vector<Chord>& chords) {
        json out = json::array();
        for (const auto& e : chords) out.push_back({e.a, e.b});
        return out;
    };
    json doc;
    doc["n"] = g.base.n();
    doc["inside"] = pairs(g.inside);
    doc["outside"] = pairs(g.outside);
    doc["edge_count"] = g.edge_count();
    doc["max_multiplicity"] = g.max_multiplicity();
    doc["max_crossing"] = g.max_crossing();
    return doc;
}

json search_result_to_json(const SearchResult& r) {
    json doc;
    doc["max_edges"] = r.max_edges;
    doc["witness"] = graph_to_json(r.witness);
    doc["nodes_explored"] = r.nodes_explored;
    doc["proven_optimal"] = r.proven_optimal;
    doc["settings"] = {{"n", r.n}, {"k", r.k}, {"mode", std::string(to_string(r.mode))}};
    return doc;
}

json bound_report_to_json(const BoundReport& report, int digits) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        json row;
        row["name"] = e.name;
        row["kind"] = std::string(to_string(e.kind));
        row["family"] = std::string(to_string(e.family));
        if (std::isnan(e.value)) {
            row["value"] = nullptr;
        } else {
            row["value"] = round_sig(e.value, digits);
        }
        row["validity"] = std::string(to_string(e.validity));
        row["valid_when"] = e.valid_when;
        row["source"] = e.source;
        if (!e.note.empty()) row["note"] = e.note;
        entries.push_back(std::move(row));
    }
    return {{"n", report.n}, {"k", report.k}, {"entries", std::move(entries)}};
}

std::string bound_report_to_csv(const BoundReport& report, int digits) {
    std::ostringstream out;
    out << "name,kind,value,valid,source\n";
    for (const auto& e : report.entries) {
        out << e.name << ',' << to_string(e.kind) << ',' << format_sig(e.value, digits) << ','
            << to_string(e.validity) << ",\"" << e.source << "\"\n";
    }
    return out.str();
}

}  // namespace okp
