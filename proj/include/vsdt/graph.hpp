#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vsdt/error.hpp"

namespace vsdt {

/// One element of the total-coloring domain: a vertex or an edge.
struct Element {
    enum class Kind { vertex, edge };

    Kind kind;
    int index;

    static Element vertex(int v) { return {Kind::vertex, v}; }
    static Element edge(int e) { return {Kind::edge, e}; }

    bool is_vertex() const { return kind == Kind::vertex; }
    bool is_edge() const { return kind == Kind::edge; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator<(const Element& a, const Element& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.index < b.index;
    }
};

/// Simple undirected graph with stable vertex and edge indices.
///
/// Vertices are 0..n-1. Edges are stored as normalized (u < v) pairs and
/// indexed by first occurrence in the input edge list; duplicates are
/// dropped. Immutable after construction.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<int, int> endpoints(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Neighbors of u, ascending.
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    /// Edge ids incident to u, aligned with neighbors(u).
    const std::vector<int>& incident_edges(int u) const { return inc_[u]; }

    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    int max_degree() const;
    int min_degree() const;

    std::optional<int> edge_between(int u, int v) const;

    void check_vertex(int u) const {
        require(u >= 0 && u < n_, errc::invalid_input,
                "vertex index " + std::to_string(u) + " out of range");
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

/// Min-degree removal sequence together with the realized degeneracy
/// (the maximum residual degree seen at removal time).
struct PeelingOrder {
    std::vector<int> order;
    int k = 0;
};

PeelingOrder degeneracy(const Graph& g);

/// BFS distances from u, cut off at radius r. Entries beyond r (in
/// particular all vertices of other components) are -1.
std::vector<int> distance_within(const Graph& g, int u, int r);

/// Per-vertex list of vertices at distance 1..r, ascending.
std::vector<std::vector<int>> vertices_within(const Graph& g, int r);

struct Component {
    Graph graph;
    std::vector<int> to_parent; // component vertex -> original vertex
};

std::vector<Component> components(const Graph& g);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_connected(const Graph& g);
bool has_isolated_edge(const Graph& g);

/// Longest shortest path over all (finite-distance) vertex pairs; 0 for
/// graphs with no edges.
int max_component_diameter(const Graph& g);

/// The incidence set N<u>: u itself, its neighbors, and its incident
/// edges; 2*d(u)+1 elements.
std::vector<Element> incidence_set(const Graph& g, int u);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph random_tree(int n, std::uint64_t seed);
/// Incremental attachment: vertex i picks min(k, i) distinct earlier
/// neighbors, so degeneracy(result).k <= k.
Graph random_k_degenerate(int n, int k, std::uint64_t seed);

struct GenSpec {
    std::string family; // path | cycle | complete | complete_bipartite | random_tree | random_k_degenerate
    int n = 0;
    int a = 0;
    int b = 0;
    int k = 0;
    std::uint64_t seed = 0;
};

Graph generate(const GenSpec& spec);

/// Text format: optional `c <comment>` lines, one `p <n> <m>` line, then m
/// `e <u> <v>` lines with 1-based endpoints.
std::string write_graph_text(const Graph& g, const std::string& comment = "");
Graph read_graph_text(std::istream& in);
Graph read_graph_text(const std::string& text);

} // namespace vsdt
