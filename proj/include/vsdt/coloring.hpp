#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vsdt/color_set.hpp"
#include "vsdt/graph.hpp"

namespace vsdt {

/// Assignment of colors 1..palette_size to vertices and edges; 0 marks an
/// unassigned element. Solvers work with partial states; verification
/// requires a total one.
struct TotalColoring {
    int palette_size = 0;
    std::vector<int> vertex_colors;
    std::vector<int> edge_colors;

    static TotalColoring empty(const Graph& g, int palette) {
        require(palette >= 0 && palette <= ColorSet::kMaxColors, errc::invalid_input,
                "palette size out of range");
        TotalColoring f;
        f.palette_size = palette;
        f.vertex_colors.assign(g.vertex_count(), 0);
        f.edge_colors.assign(g.edge_count(), 0);
        return f;
    }

    bool total() const {
        for (int c : vertex_colors)
            if (c == 0) return false;
        for (int c : edge_colors)
            if (c == 0) return false;
        return true;
    }

    int color_of(const Element& x) const {
        return x.is_vertex() ? vertex_colors[x.index] : edge_colors[x.index];
    }

    int max_color_used() const {
        int m = 0;
        for (int c : vertex_colors) m = std::max(m, c);
        for (int c : edge_colors) m = std::max(m, c);
        return m;
    }
};

struct Violation {
    enum class Kind { adjacent_vertices, adjacent_edges, incident, same_color_set };

    Kind kind;
    Element a;
    Element b;
    int distance = -1; // only meaningful for same_color_set
};

const char* violation_kind_name(Violation::Kind kind);

struct VerificationReport {
    bool proper = false;
    bool distinguishing = false;
    std::vector<Violation> violations;

    bool valid() const { return proper && distinguishing; }
};

/// Properness only: adjacent vertices differ, edges sharing an endpoint
/// differ, every edge differs from both endpoints.
VerificationReport is_proper_total(const Graph& g, const TotalColoring& f);

/// The color set C<u>: colors on u, its neighbors and its incident edges.
/// Requires every element of N<u> to be assigned.
ColorSet color_set(const Graph& g, const TotalColoring& f, int u);

/// The edge-only color set C(u): colors of the edges at u.
ColorSet edge_color_set(const Graph& g, const TotalColoring& f, int u);

/// Full check: properness plus distinct color sets for every vertex pair
/// at distance 1..r. Pairs in different components are never compared.
VerificationReport verify_r_vsdtc(const Graph& g, const TotalColoring& f, int r);

struct Bound {
    enum class Provenance { max_degree_plus_one, close_max_degree_pair };

    int value = 0;
    Provenance provenance = Provenance::max_degree_plus_one;

    const char* provenance_name() const {
        return provenance == Provenance::max_degree_plus_one ? "max_degree_plus_one"
                                                             : "close_max_degree_pair";
    }
};

/// Delta+2 when two maximum-degree vertices lie within distance r of each
/// other, else Delta+1. Rejects graphs with an isolated-edge component.
Bound lower_bound(const Graph& g, int r);

/// The unique c with A = B+{c} or B = A+{c}, if it exists. A and B must
/// differ.
std::optional<int> find_extension_color(const ColorSet& a, const ColorSet& b, int palette);

/// The unique c with A+{c} = B+{c}, if it exists. A and B must differ.
std::optional<int> find_equalizing_color(const ColorSet& a, const ColorSet& b, int palette);

/// JSON document with palette_size, r, vertex colors, edge colors and a
/// verification summary block. Endpoints are 1-based, matching the graph
/// text format.
std::string coloring_to_json(const Graph& g, const TotalColoring& f, int r);
TotalColoring coloring_from_json(const Graph& g, const std::string& text, int* r_out = nullptr);

} // namespace vsdt
