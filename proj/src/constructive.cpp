#include "vsdt/constructive.hpp"

#include <algorithm>
#include <deque>

#include "vsdt/solver.hpp"

namespace vsdt {

namespace {

void assert_valid(const Graph& g, const TotalColoring& f, int r, const char* what) {
    auto report = verify_r_vsdtc(g, f, r);
    require(report.valid(), errc::extension_failure,
            std::string(what) + " produced an invalid coloring");
}

TotalColoring compose_parts(const Graph& g, const EdgeColoring& ec, const VertexColoring& vc) {
    TotalColoring f = TotalColoring::empty(g, ec.color_count + vc.color_count);
    f.edge_colors = ec.colors;
    for (int u = 0; u < g.vertex_count(); ++u)
        f.vertex_colors[u] = ec.color_count + vc.colors[u];
    return f;
}

VertexColoring bipartition_coloring(const Graph& g) {
    VertexColoring vc;
    vc.colors.assign(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (vc.colors[s] != 0) continue;
        vc.colors[s] = 1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(x)) {
                if (vc.colors[w] == 0) {
                    vc.colors[w] = 3 - vc.colors[x];
                    queue.push_back(w);
                } else {
                    require(vc.colors[w] != vc.colors[x], errc::invalid_input,
                            "graph is not bipartite");
                }
            }
        }
    }
    for (int c : vc.colors) vc.color_count = std::max(vc.color_count, c);
    return vc;
}

/// Edges listed in BFS discovery order, each component rooted at its
/// smallest-index maximum-degree vertex.
std::vector<int> bfs_edge_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(g.edge_count());
    std::vector<char> seen(n, 0), listed(g.edge_count(), 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (int w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        int root = comp[0];
        for (int u : comp)
            if (g.degree(u) > g.degree(root) ||
                (g.degree(u) == g.degree(root) && u < root))
                root = u;
        std::deque<int> queue{root};
        std::vector<char> done(n, 0);
        done[root] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            const auto& nb = g.neighbors(u);
            const auto& ie = g.incident_edges(u);
            for (size_t i = 0; i < nb.size(); ++i) {
                if (!listed[ie[i]]) {
                    listed[ie[i]] = 1;
                    order.push_back(ie[i]);
                }
                if (!done[nb[i]]) {
                    done[nb[i]] = 1;
                    queue.push_back(nb[i]);
                }
            }
        }
    }
    return order;
}

/// Top-down strong edge coloring of a forest: at each vertex the child
/// edges take a whole set of distinct colors (avoiding the parent edge
/// color), chosen lexicographically smallest so that the finished edge set
/// differs from every already-finished set within distance r. Each finished
/// set rules out at most one candidate set, so at r=1 this stays within
/// Delta+1 colors; for r in {2,3} the palette grows only when the local
/// candidates run out.
EdgeColoring tree_strong_edge_coloring(const Graph& g, int r) {
    EdgeColoring result;
    result.colors.assign(g.edge_count(), 0);
    const int n = g.vertex_count();
    auto within = vertices_within(g, r);
    std::vector<char> seen(n, 0), finished(n, 0);
    std::vector<int> parent(n, -1), parent_edge(n, -1);
    std::vector<ColorSet> cset(n);
    int palette = g.max_degree();

    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (int w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        int root = comp[0];
        for (int u : comp)
            if (g.degree(u) > g.degree(root) ||
                (g.degree(u) == g.degree(root) && u < root))
                root = u;

        std::vector<int> bfs{root};
        std::vector<char> done(n, 0);
        done[root] = 1;
        for (size_t i = 0; i < bfs.size(); ++i) {
            int u = bfs[i];
            const auto& nb = g.neighbors(u);
            const auto& ie = g.incident_edges(u);
            for (size_t j = 0; j < nb.size(); ++j)
                if (!done[nb[j]]) {
                    done[nb[j]] = 1;
                    parent[nb[j]] = u;
                    parent_edge[nb[j]] = ie[j];
                    bfs.push_back(nb[j]);
                }
        }

        for (int u : bfs) {
            const int cp = parent[u] == -1 ? 0 : result.colors[parent_edge[u]];
            std::vector<int> child_edges;
            for (size_t j = 0; j < g.neighbors(u).size(); ++j)
                if (g.neighbors(u)[j] != parent[u])
                    child_edges.push_back(g.incident_edges(u)[j]);
            const int dc = static_cast<int>(child_edges.size());

            std::vector<ColorSet> blocked;
            for (int y : within[u])
                if (finished[y]) blocked.push_back(cset[y]);
            auto clashes = [&](const ColorSet& candidate) {
                for (const auto& b : blocked)
                    if (b == candidate) return true;
                return false;
            };

            if (dc == 0) {
                ColorSet mine;
                if (cp) mine.insert(cp);
                if (cp && clashes(mine)) {
                    // No choice at a leaf; move its one edge to a fresh color.
                    ++palette;
                    ColorSet::check_color(palette);
                    result.colors[parent_edge[u]] = palette;
                    cset[parent[u]].erase(cp);
                    cset[parent[u]].insert(palette);
                    mine = ColorSet{palette};
                }
                cset[u] = mine;
                finished[u] = 1;
                continue;
            }

            std::vector<int> picked;
            while (picked.empty()) {
                std::vector<int> avail;
                for (int c = 1; c <= palette; ++c)
                    if (c != cp) avail.push_back(c);
                if (static_cast<int>(avail.size()) < dc) {
                    ++palette;
                    ColorSet::check_color(palette);
                    continue;
                }
                // Lexicographic combinations; each blocked set can veto at
                // most one, so this stops within |blocked|+1 steps.
                std::vector<int> idx(dc);
                for (int j = 0; j < dc; ++j) idx[j] = j;
                while (true) {
                    ColorSet candidate;
                    for (int j : idx) candidate.insert(avail[j]);
                    if (cp) candidate.insert(cp);
                    if (!clashes(candidate)) {
                        for (int j : idx) picked.push_back(avail[j]);
                        cset[u] = candidate;
                        break;
                    }
                    int j = dc - 1;
                    while (j >= 0 && idx[j] == static_cast<int>(avail.size()) - dc + j) --j;
                    if (j < 0) break;
                    ++idx[j];
                    for (int t = j + 1; t < dc; ++t) idx[t] = idx[t - 1] + 1;
                }
                if (picked.empty()) {
                    ++palette;
                    ColorSet::check_color(palette);
                }
            }
            for (int j = 0; j < dc; ++j) result.colors[child_edges[j]] = picked[j];
            finished[u] = 1;
        }
    }
    for (int c : result.colors) result.color_count = std::max(result.color_count, c);

    // Self-check mirrors the r-SEC definition.
    for (int u = 0; u < n; ++u) {
        ColorSet around;
        for (int e : g.incident_edges(u)) around.insert(result.colors[e]);
        require(around.size() == g.degree(u), errc::extension_failure,
                "tree edge coloring is not proper");
        cset[u] = around;
    }
    for (int u = 0; u < n; ++u)
        for (int y : within[u])
            if (y > u)
                require(cset[u] != cset[y], errc::extension_failure,
                        "tree edge coloring failed to distinguish a pair");
    return result;
}

// Colors c with base + {c} == target.
ColorSet union_equal_guard(const ColorSet& target, const ColorSet& base) {
    if (target == base) return base;
    ColorSet extra = target - base;
    if (extra.size() == 1 && (base - target).empty()) return extra;
    return {};
}

// Colors c with (p + {c}) == (q + {c}): both sets gain the same color.
ColorSet equalizer_guard(const ColorSet& p, const ColorSet& q, int palette) {
    if (p == q) {
        ColorSet full;
        for (int c = 1; c <= palette; ++c) full.insert(c);
        return full;
    }
    if (auto c = p.symmetric_difference_single(q)) return ColorSet{*c};
    return {};
}

// Colors on the next-to-last pendant edge (which enters only the center's
// set) that would leave the (center, v_delta) pair open to equalization at
// the last stage: if the sets are equal they must be separated, otherwise
// their symmetric difference must reach 2.
ColorSet lookahead_guard(const ColorSet& p, const ColorSet& q) {
    if (p == q) return q;
    const int d = p.symmetric_difference_size(q);
    if (d == 1) return p | q;
    if (d == 2) return q - p;
    return {};
}

ForbiddenSet forbidden_for_stage(const ExtensionState& st, int stage, bool with_lookahead) {
    const Graph& g = *st.graph;
    const TotalColoring& f = *st.coloring;
    const int delta = st.delta();
    require(stage >= 1 && stage <= delta, errc::invalid_input, "stage out of range");
    require(st.center_color != 0 && f.vertex_colors[st.center] == st.center_color,
            errc::invalid_input, "center vertex not colored yet");
    const int vi = st.neighbors[stage - 1];

    ForbiddenSet fs;
    fs.properness.insert(st.center_color);
    fs.properness.insert(f.vertex_colors[vi]);
    for (int e : g.incident_edges(st.center))
        if (f.edge_colors[e]) fs.properness.insert(f.edge_colors[e]);
    for (int e : g.incident_edges(vi))
        if (f.edge_colors[e]) fs.properness.insert(f.edge_colors[e]);

    // v_i completes with this edge: its set must stay off every good
    // neighbor's set.
    ColorSet base = partial_color_set(g, f, vi);
    for (int w : g.neighbors(vi)) {
        if (w == st.center || f.vertex_colors[w] == 0 || !is_good(g, f, w)) continue;
        fs.extension_guards =
            fs.extension_guards | union_equal_guard(partial_color_set(g, f, w), base);
    }

    ColorSet center_set = partial_color_set(g, f, st.center);
    if (stage == delta) {
        // The center completes too: static guards against v_1..v_{delta-1},
        // an equalizer guard against v_delta (both sets gain this color).
        for (int l = 0; l < delta - 1; ++l)
            fs.extension_guards =
                fs.extension_guards |
                union_equal_guard(partial_color_set(g, f, st.neighbors[l]), center_set);
        fs.difference_guards =
            fs.difference_guards | equalizer_guard(center_set, base, st.palette);
    } else if (with_lookahead && stage == delta - 1) {
        ColorSet last_set = partial_color_set(g, f, st.neighbors[delta - 1]);
        fs.difference_guards = fs.difference_guards | lookahead_guard(center_set, last_set);
    }
    return fs;
}

bool fallback_dfs(const ExtensionState& st, int stage, long long& budget) {
    if (stage > st.delta()) return true;
    TotalColoring& f = *st.coloring;
    const int e = st.stage_edge(stage);
    ColorSet blocked = forbidden_for_stage(st, stage, false).all();
    for (int c = 1; c <= st.palette; ++c) {
        if (blocked.contains(c)) continue;
        if (--budget <= 0) return false;
        f.edge_colors[e] = c;
        if (fallback_dfs(st, stage + 1, budget)) return true;
        f.edge_colors[e] = 0;
    }
    return false;
}

void insert_vertex(const Graph& g, TotalColoring& f, int palette, int center,
                   ExtendStats& stats) {
    ExtensionState st;
    st.graph = &g;
    st.coloring = &f;
    st.palette = palette;
    st.center = center;
    for (int w : g.neighbors(center))
        if (f.vertex_colors[w] != 0) st.neighbors.push_back(w);

    st.center_color = choose_safe_vertex_color(st);
    f.vertex_colors[center] = st.center_color;

    const int delta = st.delta();
    const int dmax = g.max_degree();
    bool stuck = false;
    for (int stage = 1; stage <= delta; ++stage) {
        ForbiddenSet fs = forbidden_colors_for_edge(st, stage);
        ColorSet blocked = fs.all();
        ++stats.stages;
        const int size = blocked.size();
        stats.max_forbidden_size = std::max(stats.max_forbidden_size, size);
        if (size > forbidden_ceiling(delta, stage, dmax)) stats.ceilings_respected = false;
        auto c = blocked.smallest_missing(palette);
        if (!c) {
            stuck = true;
            break;
        }
        f.edge_colors[st.stage_edge(stage)] = *c;
    }
    if (stuck) {
        ++stats.fallback_events;
        for (int stage = 1; stage <= delta; ++stage) f.edge_colors[st.stage_edge(stage)] = 0;
        long long budget = 200'000;
        require(fallback_dfs(st, 1, budget), errc::extension_failure,
                "vertex insertion stuck even after local backtracking");
    }
}

void solve_base(const Graph& g, TotalColoring& f, int palette, const std::vector<int>& base) {
    if (base.empty()) return;
    std::vector<int> local(g.vertex_count(), -1);
    for (size_t i = 0; i < base.size(); ++i) local[base[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_parent;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (local[u] != -1 && local[v] != -1) {
            edges.emplace_back(local[u], local[v]);
            edge_parent.push_back(e);
        }
    }
    Graph b = Graph::build(static_cast<int>(base.size()), edges);

    auto closed = [&](int gu) {
        for (int w : g.neighbors(gu))
            if (local[w] == -1) return false;
        return true;
    };
    std::vector<std::pair<int, int>> all_pairs, settled_pairs;
    for (int e = 0; e < b.edge_count(); ++e) {
        auto [lu, lv] = b.endpoints(e);
        all_pairs.emplace_back(lu, lv);
        if (closed(base[lu]) && closed(base[lv])) settled_pairs.emplace_back(lu, lv);
    }

    SearchBudget budget;
    budget.max_nodes = 2'000'000;
    budget.max_time = std::chrono::milliseconds(10'000);
    SolverOptions opts;
    opts.restrict_pairs = &all_pairs;
    ProbeResult probe = exists_coloring(b, 1, palette, budget, opts);
    if (probe.status != ProbeStatus::found) {
        // Pairs with pending outside edges get separated during the later
        // insertions; only pairs whose incidence sets are settled must be
        // distinguished here.
        opts.restrict_pairs = &settled_pairs;
        probe = exists_coloring(b, 1, palette, budget, opts);
    }
    require(probe.status == ProbeStatus::found, errc::extension_failure,
            "no base coloring found");
    for (size_t i = 0; i < base.size(); ++i)
        f.vertex_colors[base[i]] = probe.witness->vertex_colors[static_cast<int>(i)];
    for (size_t i = 0; i < edge_parent.size(); ++i)
        f.edge_colors[edge_parent[i]] = probe.witness->edge_colors[static_cast<int>(i)];
}

} // namespace

VertexColoring greedy_vertex_coloring(const Graph& g) {
    PeelingOrder peel = degeneracy(g);
    VertexColoring vc;
    vc.colors.assign(g.vertex_count(), 0);
    require(g.max_degree() + 1 <= ColorSet::kMaxColors, errc::invalid_input,
            "graph degree too large for the color universe");
    for (int i = g.vertex_count() - 1; i >= 0; --i) {
        int u = peel.order[i];
        ColorSet used;
        for (int w : g.neighbors(u))
            if (vc.colors[w]) used.insert(vc.colors[w]);
        int c = *used.smallest_missing(g.max_degree() + 1);
        vc.colors[u] = c;
        vc.color_count = std::max(vc.color_count, c);
    }
    return vc;
}

EdgeColoring greedy_r_sec(const Graph& g, int r) {
    require(r >= 1, errc::invalid_input, "radius must be at least 1");
    require(!has_isolated_edge(g), errc::isolated_edge,
            "graph has an isolated-edge component");

    const int n = g.vertex_count();
    const int m = g.edge_count();
    auto within = vertices_within(g, r);
    auto order = bfs_edge_order(g);
    std::vector<int> order_pos(m, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) order_pos[order[i]] = i;

    std::vector<int> ecolor(m, 0), remaining(n);
    for (int u = 0; u < n; ++u) remaining[u] = g.degree(u);
    std::vector<ColorSet> used(n);
    int palette = 0;

    auto feasible = [&](int u, int v, int c) {
        if (used[u].contains(c) || used[v].contains(c)) return false;
        const bool cu = remaining[u] == 1, cv = remaining[v] == 1;
        ColorSet su, sv;
        if (cu) {
            su = used[u].with(c);
            for (int y : within[u])
                if (remaining[y] == 0 && used[y] == su) return false;
        }
        if (cv) {
            sv = used[v].with(c);
            for (int y : within[v])
                if (remaining[y] == 0 && used[y] == sv) return false;
        }
        if (cu && cv && su == sv) return false;
        return true;
    };

    for (int e : order) {
        auto [u, v] = g.endpoints(e);
        int chosen = 0;
        for (int c = 1; c <= palette && !chosen; ++c)
            if (feasible(u, v, c)) chosen = c;
        if (!chosen) {
            ++palette;
            ColorSet::check_color(palette);
            if (feasible(u, v, palette)) {
                chosen = palette;
            } else {
                // Both endpoints complete here with equal sets; no single
                // color separates them. Move the latest-colored other edge
                // at one endpoint onto the fresh color first.
                int x = g.degree(u) >= 2 ? u : v;
                int e2 = -1;
                for (int e3 : g.incident_edges(x))
                    if (e3 != e && ecolor[e3] != 0 &&
                        (e2 == -1 || order_pos[e3] > order_pos[e2]))
                        e2 = e3;
                require(e2 != -1, errc::extension_failure,
                        "edge set repair found no edge to move");
                auto [a2, b2] = g.endpoints(e2);
                int w = a2 == x ? b2 : a2;
                int old = ecolor[e2];
                used[x].erase(old);
                used[w].erase(old);
                ecolor[e2] = palette;
                used[x].insert(palette);
                used[w].insert(palette);
                for (int c = 1; c <= palette && !chosen; ++c)
                    if (feasible(u, v, c)) chosen = c;
                if (!chosen) {
                    ++palette;
                    ColorSet::check_color(palette);
                    require(feasible(u, v, palette), errc::extension_failure,
                            "edge set repair failed to free a color");
                    chosen = palette;
                }
            }
        }
        ecolor[e] = chosen;
        used[u].insert(chosen);
        used[v].insert(chosen);
        --remaining[u];
        --remaining[v];
    }

    EdgeColoring result;
    result.colors = std::move(ecolor);
    for (int c : result.colors) result.color_count = std::max(result.color_count, c);
    // Self-check: proper at every vertex, distinct sets within distance r.
    for (int u = 0; u < n; ++u)
        require(used[u].size() == g.degree(u), errc::extension_failure,
                "greedy edge coloring is not proper");
    for (int u = 0; u < n; ++u)
        for (int y : within[u])
            if (y > u)
                require(used[u] != used[y], errc::extension_failure,
                        "greedy edge coloring failed to distinguish a pair");
    return result;
}

TotalColoring compose_vsdtc(const Graph& g, int r) {
    EdgeColoring sec = greedy_r_sec(g, r);
    VertexColoring vc = greedy_vertex_coloring(g);
    TotalColoring f = compose_parts(g, sec, vc);
    assert_valid(g, f, r, "compose_vsdtc");
    return f;
}

bool is_good(const Graph& g, const TotalColoring& f, int u) {
    if (f.vertex_colors[u] == 0) return false;
    const auto& nb = g.neighbors(u);
    const auto& ie = g.incident_edges(u);
    for (size_t i = 0; i < nb.size(); ++i)
        if (f.vertex_colors[nb[i]] != 0 && f.edge_colors[ie[i]] == 0) return false;
    return true;
}

ColorSet partial_color_set(const Graph& g, const TotalColoring& f, int u) {
    ColorSet s;
    if (f.vertex_colors[u] != 0) s.insert(f.vertex_colors[u]);
    for (int w : g.neighbors(u))
        if (f.vertex_colors[w] != 0) s.insert(f.vertex_colors[w]);
    for (int e : g.incident_edges(u))
        if (f.edge_colors[e] != 0) s.insert(f.edge_colors[e]);
    return s;
}

int ExtensionState::stage_edge(int stage) const {
    auto e = graph->edge_between(center, neighbors[stage - 1]);
    require(e.has_value(), errc::invalid_input, "stage edge does not exist");
    return *e;
}

int choose_safe_vertex_color(const ExtensionState& st) {
    const Graph& g = *st.graph;
    const TotalColoring& f = *st.coloring;
    require(st.center >= 0 && f.vertex_colors[st.center] == 0, errc::precondition_violated,
            "center vertex already colored");

    ColorSet forbidden;
    for (int vi : st.neighbors) {
        require(f.vertex_colors[vi] != 0, errc::precondition_violated,
                "listed neighbor is uncolored");
        forbidden.insert(f.vertex_colors[vi]);
    }
    for (int vi : st.neighbors) {
        ColorSet base = partial_color_set(g, f, vi);
        for (int w : g.neighbors(vi)) {
            if (w == st.center || f.vertex_colors[w] == 0 || !is_good(g, f, w)) continue;
            ColorSet target = partial_color_set(g, f, w);
            if (g.edge_between(st.center, w)) {
                // w is itself a neighbor of the center, so both sets gain
                // the center color.
                forbidden = forbidden | equalizer_guard(base, target, st.palette);
            } else {
                forbidden = forbidden | union_equal_guard(target, base);
            }
        }
    }
    auto c = forbidden.smallest_missing(st.palette);
    require(c.has_value(), errc::no_safe_color, "no safe center color within the palette");
    return *c;
}

ForbiddenSet forbidden_colors_for_edge(const ExtensionState& state, int stage) {
    return forbidden_for_stage(state, stage, true);
}

int forbidden_ceiling(int delta, int stage, int max_degree) {
    const int d = max_degree;
    if (delta == 1) return 2 * d + 1;
    if (delta == 2) return 2 * d + 2;
    if (stage == 1) return 2 * d;
    if (stage <= delta - 2) return 2 * d + stage - 1;
    if (stage == delta - 1) return 2 * d + 2 * delta - 2;
    return 2 * d + 3 * delta - 4;
}

TotalColoring extend_degenerate_vsdtc(const Graph& g, int k, ExtendStats* stats_out) {
    require(k >= 1, errc::invalid_input, "degeneracy bound must be at least 1");
    require(!has_isolated_edge(g), errc::isolated_edge,
            "graph has an isolated-edge component");
    PeelingOrder peel = degeneracy(g);
    require(peel.k <= k, errc::invalid_input,
            "graph is not " + std::to_string(k) + "-degenerated");
    if (k == 1) return forest_vsdtc(g);

    const int dmax = g.max_degree();
    const int palette = k * dmax + 3;
    require(palette <= ColorSet::kMaxColors, errc::invalid_input,
            "palette k*Delta+3 exceeds the color universe");

    ExtendStats local;
    ExtendStats& stats = stats_out ? *stats_out : local;

    if (dmax <= 2) {
        // Paths, cycles and their unions: small exact values, solve directly.
        SolveResult res = chromatic_number(g, 1);
        require(res.status == SolveStatus::exact && res.witness.has_value(),
                errc::extension_failure, "exact delegate did not finish");
        TotalColoring f = *res.witness;
        f.palette_size = palette;
        assert_valid(g, f, 1, "extend_degenerate_vsdtc");
        return f;
    }

    TotalColoring f = TotalColoring::empty(g, palette);
    const int n = g.vertex_count();
    const int base_count = std::min(4, n);
    std::vector<int> base(peel.order.end() - base_count, peel.order.end());
    solve_base(g, f, palette, base);
    for (int i = n - base_count - 1; i >= 0; --i) insert_vertex(g, f, palette, peel.order[i], stats);
    assert_valid(g, f, 1, "extend_degenerate_vsdtc");
    return f;
}

TotalColoring forest_vsdtc(const Graph& g) {
    require(is_forest(g), errc::not_a_forest, "forest_vsdtc needs an acyclic graph");
    require(!has_isolated_edge(g), errc::isolated_edge,
            "graph has an isolated-edge component");
    EdgeColoring sec = tree_strong_edge_coloring(g, 1);
    VertexColoring vc = bipartition_coloring(g);
    TotalColoring f = compose_parts(g, sec, vc);
    assert_valid(g, f, 1, "forest_vsdtc");
    return f;
}

TotalColoring tree_vsdtc_r(const Graph& t, int r) {
    require(r == 2 || r == 3, errc::invalid_input,
            "tree construction supports r in {2,3} only");
    require(is_tree(t), errc::not_a_tree, "tree_vsdtc_r needs a tree");
    require(!has_isolated_edge(t), errc::isolated_edge, "tree is a single edge");
    EdgeColoring sec = tree_strong_edge_coloring(t, r);
    EdgeColoring fallback = greedy_r_sec(t, r);
    if (fallback.color_count < sec.color_count) sec = std::move(fallback);
    VertexColoring vc = bipartition_coloring(t);
    TotalColoring f = compose_parts(t, sec, vc);
    assert_valid(t, f, r, "tree_vsdtc_r");
    return f;
}

} // namespace vsdt
