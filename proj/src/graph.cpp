#include "vsdt/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <set>
#include <sstream>

#include "vsdt/rng.hpp"

namespace vsdt {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edge_list) {
    require(n >= 0, errc::invalid_input, "vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.inc_.assign(n, {});

    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        require(u >= 0 && u < n && v >= 0 && v < n, errc::invalid_input,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        require(u != v, errc::invalid_input, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        g.edges_.emplace_back(u, v);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges_[e];
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.inc_[u].push_back(e);
        g.inc_[v].push_back(e);
    }
    // Keep neighbor lists ascending, incident-edge lists aligned.
    for (int u = 0; u < n; ++u) {
        std::vector<int> idx(g.adj_[u].size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return g.adj_[u][a] < g.adj_[u][b]; });
        std::vector<int> adj2, inc2;
        adj2.reserve(idx.size());
        inc2.reserve(idx.size());
        for (int i : idx) {
            adj2.push_back(g.adj_[u][i]);
            inc2.push_back(g.inc_[u][i]);
        }
        g.adj_[u] = std::move(adj2);
        g.inc_[u] = std::move(inc2);
    }
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d = std::max(d, degree(u));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int u = 1; u < n_; ++u) d = std::min(d, degree(u));
    return d;
}

std::optional<int> Graph::edge_between(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) return std::nullopt;
    return inc_[u][it - a.begin()];
}

PeelingOrder degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    PeelingOrder result;
    result.order.reserve(n);
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int u = 0; u < n; ++u) deg[u] = g.degree(u);

    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int u = 0; u < n; ++u) {
            if (removed[u]) continue;
            if (best == -1 || deg[u] < deg[best]) best = u; // ties: smallest index
        }
        result.k = std::max(result.k, deg[best]);
        result.order.push_back(best);
        removed[best] = true;
        for (int w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }
    return result;
}

std::vector<int> distance_within(const Graph& g, int u, int r) {
    g.check_vertex(u);
    require(r >= 0, errc::invalid_input, "radius must be nonnegative");
    std::vector<int> dist(g.vertex_count(), -1);
    dist[u] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (dist[x] == r) continue;
        for (int w : g.neighbors(x)) {
            if (dist[w] == -1) {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> vertices_within(const Graph& g, int r) {
    std::vector<std::vector<int>> within(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        auto dist = distance_within(g, u, r);
        for (int w = 0; w < g.vertex_count(); ++w)
            if (w != u && dist[w] != -1) within[u].push_back(w);
    }
    return within;
}

std::vector<Component> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> label(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] != -1) continue;
        label[s] = count;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(x)) {
                if (label[w] == -1) {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
        }
        ++count;
    }

    std::vector<Component> result(count);
    std::vector<int> local(n, -1);
    for (int u = 0; u < n; ++u) {
        auto& comp = result[label[u]];
        local[u] = static_cast<int>(comp.to_parent.size());
        comp.to_parent.push_back(u);
    }
    std::vector<std::vector<std::pair<int, int>>> comp_edges(count);
    for (auto [u, v] : g.edges())
        comp_edges[label[u]].emplace_back(local[u], local[v]);
    for (int c = 0; c < count; ++c)
        result[c].graph =
            Graph::build(static_cast<int>(result[c].to_parent.size()), comp_edges[c]);
    return result;
}

bool is_forest(const Graph& g) {
    // Acyclic iff every component satisfies m = n - 1.
    for (const auto& comp : components(g))
        if (comp.graph.edge_count() != comp.graph.vertex_count() - 1) return false;
    return true;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    return components(g).size() == 1;
}

bool is_tree(const Graph& g) { return is_connected(g) && is_forest(g); }

bool has_isolated_edge(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.degree(u) == 1 && g.degree(v) == 1) return true;
    return false;
}

int max_component_diameter(const Graph& g) {
    int d = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        auto dist = distance_within(g, u, g.vertex_count());
        for (int x : dist) d = std::max(d, x);
    }
    return d;
}

std::vector<Element> incidence_set(const Graph& g, int u) {
    g.check_vertex(u);
    std::vector<Element> elems;
    elems.reserve(2 * g.degree(u) + 1);
    elems.push_back(Element::vertex(u));
    for (int w : g.neighbors(u)) elems.push_back(Element::vertex(w));
    for (int e : g.incident_edges(u)) elems.push_back(Element::edge(e));
    return elems;
}

Graph make_path(int n) {
    require(n >= 1, errc::invalid_input, "path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, edges);
}

Graph make_cycle(int n) {
    require(n >= 3, errc::invalid_input, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::build(n, edges);
}

Graph make_complete(int n) {
    require(n >= 1, errc::invalid_input, "complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, errc::invalid_input, "complete bipartite needs a,b >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::build(a + b, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, errc::invalid_input, "random tree needs n >= 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(rng.uniform(0, i - 1), i);
    return Graph::build(n, edges);
}

Graph random_k_degenerate(int n, int k, std::uint64_t seed) {
    require(n >= 1, errc::invalid_input, "random k-degenerate graph needs n >= 1");
    require(k >= 1, errc::invalid_input, "random k-degenerate graph needs k >= 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> pool;
    for (int i = 1; i < n; ++i) {
        int take = std::min(k, i);
        pool.resize(i);
        for (int j = 0; j < i; ++j) pool[j] = j;
        // Partial Fisher-Yates over the earlier vertices.
        for (int j = 0; j < take; ++j) {
            int pick = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(i - j)));
            std::swap(pool[j], pool[pick]);
            edges.emplace_back(pool[j], i);
        }
    }
    return Graph::build(n, edges);
}

Graph generate(const GenSpec& spec) {
    if (spec.family == "path") return make_path(spec.n);
    if (spec.family == "cycle") return make_cycle(spec.n);
    if (spec.family == "complete") return make_complete(spec.n);
    if (spec.family == "complete_bipartite") return make_complete_bipartite(spec.a, spec.b);
    if (spec.family == "random_tree") return random_tree(spec.n, spec.seed);
    if (spec.family == "random_k_degenerate")
        return random_k_degenerate(spec.n, spec.k, spec.seed);
    fail(errc::invalid_input, "unknown graph family '" + spec.family + "'");
}

std::string write_graph_text(const Graph& g, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Graph read_graph_text(std::istream& in) {
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            require(n == -1, errc::invalid_input, "duplicate p line");
            require(static_cast<bool>(ls >> n >> m) && n >= 0 && m >= 0, errc::invalid_input,
                    "malformed p line at line " + std::to_string(lineno));
        } else if (tag == "e") {
            require(n != -1, errc::invalid_input, "e line before p line");
            int u, v;
            require(static_cast<bool>(ls >> u >> v), errc::invalid_input,
                    "malformed e line at line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
        } else {
            fail(errc::invalid_input, "unknown line tag '" + tag + "'");
        }
    }
    require(n != -1, errc::invalid_input, "missing p line");
    require(static_cast<int>(edges.size()) == m, errc::invalid_input,
            "edge count mismatch: p says " + std::to_string(m) + ", found " +
                std::to_string(edges.size()));
    return Graph::build(n, edges);
}

Graph read_graph_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph_text(in);
}

} // namespace vsdt
