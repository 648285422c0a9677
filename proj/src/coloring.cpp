#include "vsdt/coloring.hpp"

#include <algorithm>

#include <json.hpp>

namespace vsdt {

const char* violation_kind_name(Violation::Kind kind) {
    switch (kind) {
    case Violation::Kind::adjacent_vertices: return "adjacent-vertices";
    case Violation::Kind::adjacent_edges: return "adjacent-edges";
    case Violation::Kind::incident: return "incident";
    case Violation::Kind::same_color_set: return "same-color-set";
    }
    return "unknown";
}

namespace {

void check_shape(const Graph& g, const TotalColoring& f) {
    require(static_cast<int>(f.vertex_colors.size()) == g.vertex_count() &&
                static_cast<int>(f.edge_colors.size()) == g.edge_count(),
            errc::invalid_input, "coloring shape does not match graph");
    for (int c : f.vertex_colors)
        require(c >= 0 && c <= f.palette_size, errc::invalid_input,
                "vertex color outside palette");
    for (int c : f.edge_colors)
        require(c >= 0 && c <= f.palette_size, errc::invalid_input, "edge color outside palette");
}

void check_total(const Graph& g, const TotalColoring& f) {
    check_shape(g, f);
    require(f.total(), errc::incomplete_coloring, "coloring has unassigned elements");
}

void properness_violations(const Graph& g, const TotalColoring& f,
                           std::vector<Violation>& out) {
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (f.vertex_colors[u] == f.vertex_colors[v])
            out.push_back({Violation::Kind::adjacent_vertices, Element::vertex(u),
                           Element::vertex(v), -1});
        if (f.edge_colors[e] == f.vertex_colors[u])
            out.push_back(
                {Violation::Kind::incident, Element::edge(e), Element::vertex(u), -1});
        if (f.edge_colors[e] == f.vertex_colors[v])
            out.push_back(
                {Violation::Kind::incident, Element::edge(e), Element::vertex(v), -1});
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        const auto& inc = g.incident_edges(u);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                if (f.edge_colors[inc[i]] == f.edge_colors[inc[j]])
                    out.push_back({Violation::Kind::adjacent_edges, Element::edge(inc[i]),
                                   Element::edge(inc[j]), -1});
    }
}

} // namespace

VerificationReport is_proper_total(const Graph& g, const TotalColoring& f) {
    check_total(g, f);
    VerificationReport report;
    properness_violations(g, f, report.violations);
    report.proper = report.violations.empty();
    report.distinguishing = true; // not examined here
    return report;
}

ColorSet color_set(const Graph& g, const TotalColoring& f, int u) {
    g.check_vertex(u);
    check_shape(g, f);
    ColorSet set;
    require(f.vertex_colors[u] != 0, errc::bad_vertex,
            "vertex " + std::to_string(u) + " has an uncolored incidence set");
    set.insert(f.vertex_colors[u]);
    for (int w : g.neighbors(u)) {
        require(f.vertex_colors[w] != 0, errc::bad_vertex,
                "vertex " + std::to_string(u) + " has an uncolored incidence set");
        set.insert(f.vertex_colors[w]);
    }
    for (int e : g.incident_edges(u)) {
        require(f.edge_colors[e] != 0, errc::bad_vertex,
                "vertex " + std::to_string(u) + " has an uncolored incidence set");
        set.insert(f.edge_colors[e]);
    }
    return set;
}

ColorSet edge_color_set(const Graph& g, const TotalColoring& f, int u) {
    g.check_vertex(u);
    ColorSet set;
    for (int e : g.incident_edges(u)) {
        if (f.edge_colors[e] != 0) set.insert(f.edge_colors[e]);
    }
    return set;
}

VerificationReport verify_r_vsdtc(const Graph& g, const TotalColoring& f, int r) {
    require(r >= 1, errc::invalid_input, "radius must be at least 1");
    check_total(g, f);

    VerificationReport report;
    properness_violations(g, f, report.violations);
    report.proper = report.violations.empty();

    std::vector<ColorSet> sets(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) sets[u] = color_set(g, f, u);

    size_t before = report.violations.size();
    for (int u = 0; u < g.vertex_count(); ++u) {
        auto dist = distance_within(g, u, r);
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (dist[v] < 1) continue;
            if (sets[u] == sets[v])
                report.violations.push_back({Violation::Kind::same_color_set,
                                             Element::vertex(u), Element::vertex(v), dist[v]});
        }
    }
    report.distinguishing = report.violations.size() == before;
    return report;
}

Bound lower_bound(const Graph& g, int r) {
    require(r >= 1, errc::invalid_input, "radius must be at least 1");
    require(!has_isolated_edge(g), errc::isolated_edge,
            "graph has an isolated-edge component");
    const int delta = g.max_degree();
    std::vector<int> max_deg_vertices;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (g.degree(u) == delta) max_deg_vertices.push_back(u);
    for (int u : max_deg_vertices) {
        auto dist = distance_within(g, u, r);
        for (int v : max_deg_vertices)
            if (v != u && dist[v] >= 1)
                return {delta + 2, Bound::Provenance::close_max_degree_pair};
    }
    return {delta + 1, Bound::Provenance::max_degree_plus_one};
}

std::optional<int> find_extension_color(const ColorSet& a, const ColorSet& b, int palette) {
    require(a != b, errc::precondition_violated, "sets must differ");
    auto c = a.symmetric_difference_single(b);
    if (c && *c <= palette) return c;
    return std::nullopt;
}

std::optional<int> find_equalizing_color(const ColorSet& a, const ColorSet& b, int palette) {
    require(a != b, errc::precondition_violated, "sets must differ");
    auto c = a.symmetric_difference_single(b);
    if (c && *c <= palette) return c;
    return std::nullopt;
}

std::string coloring_to_json(const Graph& g, const TotalColoring& f, int r) {
    check_shape(g, f);
    nlohmann::json doc;
    doc["palette_size"] = f.palette_size;
    doc["r"] = r;
    doc["vertices"] = f.vertex_colors;
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        edges.push_back({{"u", u + 1}, {"v", v + 1}, {"color", f.edge_colors[e]}});
    }
    auto& summary = doc["verification"];
    if (f.total()) {
        auto report = verify_r_vsdtc(g, f, r);
        summary["proper"] = report.proper;
        summary["distinguishing"] = report.distinguishing;
        auto& violations = summary["violations"] = nlohmann::json::array();
        for (const auto& violation : report.violations) {
            nlohmann::json row;
            row["kind"] = violation_kind_name(violation.kind);
            row["a"] = {{"kind", violation.a.is_vertex() ? "vertex" : "edge"},
                        {"index", violation.a.index + 1}};
            row["b"] = {{"kind", violation.b.is_vertex() ? "vertex" : "edge"},
                        {"index", violation.b.index + 1}};
            if (violation.distance >= 0) row["distance"] = violation.distance;
            violations.push_back(row);
        }
    } else {
        summary["proper"] = false;
        summary["distinguishing"] = false;
        summary["note"] = "partial coloring";
    }
    return doc.dump(2) + "\n";
}

TotalColoring coloring_from_json(const Graph& g, const std::string& text, int* r_out) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::io_error, std::string("bad coloring JSON: ") + e.what());
    }
    try {
        TotalColoring f = TotalColoring::empty(g, doc.at("palette_size").get<int>());
        auto vertices = doc.at("vertices").get<std::vector<int>>();
        require(static_cast<int>(vertices.size()) == g.vertex_count(), errc::invalid_input,
                "vertex color array length does not match graph");
        f.vertex_colors = vertices;
        for (const auto& row : doc.at("edges")) {
            int u = row.at("u").get<int>() - 1;
            int v = row.at("v").get<int>() - 1;
            auto e = g.edge_between(u, v);
            require(e.has_value(), errc::invalid_input,
                    "coloring references missing edge (" + std::to_string(u + 1) + "," +
                        std::to_string(v + 1) + ")");
            f.edge_colors[*e] = row.at("color").get<int>();
        }
        check_shape(g, f);
        if (r_out && doc.contains("r")) *r_out = doc.at("r").get<int>();
        return f;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::io_error, std::string("bad coloring JSON: ") + e.what());
    }
}

} // namespace vsdt
