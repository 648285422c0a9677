#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "vsdt/constructive.hpp"
#include "vsdt/solver.hpp"

using namespace vsdt;

namespace {

bool proper_vertex_coloring(const Graph& g, const std::vector<int>& colors) {
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

/// Exactly color everything except `center` (a valid partial coloring of g
/// with all pairs among the colored vertices distinguished where they are
/// adjacent). Returns false when the punctured graph admits none.
bool color_all_but(const Graph& g, int center, int palette, TotalColoring& f) {
    std::vector<int> local(g.vertex_count(), -1), back;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != center) {
            local[u] = static_cast<int>(back.size());
            back.push_back(u);
        }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_parent;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (u == center || v == center) continue;
        edges.emplace_back(local[u], local[v]);
        edge_parent.push_back(e);
    }
    Graph h = Graph::build(static_cast<int>(back.size()), edges);
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < h.edge_count(); ++e) pairs.push_back(h.endpoints(e));
    SolverOptions opts;
    opts.restrict_pairs = &pairs;
    auto probe = exists_coloring(h, 1, palette, {}, opts);
    if (probe.status != ProbeStatus::found) return false;
    f = TotalColoring::empty(g, palette);
    for (size_t i = 0; i < back.size(); ++i)
        f.vertex_colors[back[i]] = probe.witness->vertex_colors[static_cast<int>(i)];
    for (size_t i = 0; i < edge_parent.size(); ++i)
        f.edge_colors[edge_parent[i]] = probe.witness->edge_colors[static_cast<int>(i)];
    return true;
}

/// Is there any assignment of the still-missing pendant edges that makes the
/// whole coloring verify? Plain enumeration, independent of the guards.
bool completion_reachable(const Graph& g, TotalColoring& f, const ExtensionState& st,
                          int next_stage) {
    if (next_stage > st.delta()) return verify_r_vsdtc(g, f, 1).valid();
    const int e = st.stage_edge(next_stage);
    for (int c = 1; c <= st.palette; ++c) {
        f.edge_colors[e] = c;
        if (completion_reachable(g, f, st, next_stage + 1)) {
            f.edge_colors[e] = 0;
            return true;
        }
    }
    f.edge_colors[e] = 0;
    return false;
}

} // namespace

TEST_CASE("greedy_vertex_coloring") {
    auto p5 = greedy_vertex_coloring(make_path(5));
    CHECK(p5.color_count == 2);
    auto k4 = greedy_vertex_coloring(make_complete(4));
    CHECK(k4.color_count == 4);
    auto c5 = greedy_vertex_coloring(make_cycle(5));
    CHECK(c5.color_count == 3);

    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::random_graph(20, 20, trial);
        auto vc = greedy_vertex_coloring(g);
        CHECK(proper_vertex_coloring(g, vc.colors));
        CHECK(vc.color_count <= g.max_degree() + 1);
    }
}

TEST_CASE("greedy_r_sec produces valid strong edge colorings") {
    auto sec = greedy_r_sec(make_path(3), 1);
    CHECK(sec.color_count <= 3);

    CHECK_THROWS_AS(greedy_r_sec(make_path(2), 1), Error);

    for (int trial = 0; trial < 10; ++trial) {
        Graph g = testutil::random_connected(12, 6, 1200 + trial);
        if (has_isolated_edge(g)) continue;
        for (int r = 1; r <= 3; ++r) {
            auto ec = greedy_r_sec(g, r); // self-checks internally
            CHECK(ec.color_count >= g.max_degree());
        }
    }
}

TEST_CASE("greedy_r_sec tree palettes near the known targets") {
    int hit_r2 = 0, hit_r3 = 0, total = 0, total_r3 = 0;
    for (int trial = 0; trial < 30; ++trial) {
        Graph t = random_tree(30, 7000 + trial);
        int delta = t.max_degree();
        ++total;
        if (greedy_r_sec(t, 2).color_count <= delta + 1) ++hit_r2;
        if (delta >= 3) {
            ++total_r3;
            if (greedy_r_sec(t, 3).color_count <= 2 * delta - 1) ++hit_r3;
        }
    }
    // the greedy is a stand-in for the exact constructions; it should land
    // on the target palette nearly always on random trees
    CHECK(hit_r2 >= total - 1);
    CHECK(hit_r3 >= total_r3 - 2);
}

TEST_CASE("compose_vsdtc") {
    Graph c6 = make_cycle(6);
    TotalColoring f = compose_vsdtc(c6, 1);
    CHECK(verify_r_vsdtc(c6, f, 1).valid());
    CHECK(f.palette_size <= 4 * c6.max_degree());

    // disjoint palettes: every edge color below every vertex color
    Graph p5 = make_path(5);
    TotalColoring g5 = compose_vsdtc(p5, 1);
    int emax = *std::max_element(g5.edge_colors.begin(), g5.edge_colors.end());
    int vmin = *std::min_element(g5.vertex_colors.begin(), g5.vertex_colors.end());
    CHECK(emax < vmin);

    for (int trial = 0; trial < 6; ++trial) {
        Graph t = random_tree(25, 2500 + trial);
        TotalColoring f2 = compose_vsdtc(t, 2);
        CHECK(verify_r_vsdtc(t, f2, 2).valid());
        auto sec = greedy_r_sec(t, 2);
        if (sec.color_count <= t.max_degree() + 1)
            CHECK(f2.palette_size <= t.max_degree() + 3);
    }
}

TEST_CASE("choose_safe_vertex_color spec fixtures") {
    // single colored neighbor, color 1: the smallest safe color is 2
    Graph k2 = make_path(2);
    TotalColoring f = TotalColoring::empty(k2, 5);
    f.vertex_colors[1] = 1;
    ExtensionState st;
    st.graph = &k2;
    st.coloring = &f;
    st.palette = 5;
    st.center = 0;
    st.neighbors = {1};
    CHECK(choose_safe_vertex_color(st) == 2);

    // neighbor colors {1,3} and one extension color 5 forbids {1,3,5}
    Graph g = Graph::build(5, {{0, 1}, {0, 2}, {1, 3}, {3, 4}});
    TotalColoring f2 = TotalColoring::empty(g, 8);
    f2.vertex_colors[1] = 1; // v_1
    f2.vertex_colors[2] = 3; // v_2
    f2.vertex_colors[3] = 4; // w
    f2.vertex_colors[4] = 1; // second neighbor of w
    f2.edge_colors[*g.edge_between(1, 3)] = 6;
    f2.edge_colors[*g.edge_between(3, 4)] = 5;
    ExtensionState st2;
    st2.graph = &g;
    st2.coloring = &f2;
    st2.palette = 8;
    st2.center = 0;
    st2.neighbors = {1, 2};
    // C<w> = {1,4,5,6} extends C<v_1> = {1,4,6} by color 5
    CHECK(choose_safe_vertex_color(st2) == 2);

    CHECK_THROWS_AS(choose_safe_vertex_color(ExtensionState{&k2, &f, 5, 1, {0}, 0}), Error);
}

TEST_CASE("forbidden sets are sound and within the stage ceilings") {
    int driven = 0;
    for (int trial = 0; trial < 60 && driven < 25; ++trial) {
        Graph g = trial % 2 == 0 ? random_k_degenerate(6, 2, 4000 + trial)
                                 : testutil::random_connected(6, 2, 4100 + trial);
        const int k = std::max(2, degeneracy(g).k);
        const int dmax = g.max_degree();
        if (dmax < 3) continue;
        const int palette = k * dmax + 3;
        const int center = degeneracy(g).order[0];
        if (g.degree(center) < 1) continue;
        TotalColoring f;
        if (!color_all_but(g, center, palette, f)) continue;
        ++driven;

        ExtensionState st;
        st.graph = &g;
        st.coloring = &f;
        st.palette = palette;
        st.center = center;
        st.neighbors = g.neighbors(center);
        st.center_color = choose_safe_vertex_color(st);
        f.vertex_colors[center] = st.center_color;

        const int delta = st.delta();
        for (int stage = 1; stage <= delta; ++stage) {
            ForbiddenSet fs = forbidden_colors_for_edge(st, stage);
            ColorSet blocked = fs.all();
            CHECK(blocked.size() <= forbidden_ceiling(delta, stage, dmax));
            // soundness: every allowed color keeps a completion reachable
            const int e = st.stage_edge(stage);
            for (int c = 1; c <= palette; ++c) {
                if (blocked.contains(c)) continue;
                f.edge_colors[e] = c;
                CHECK(completion_reachable(g, f, st, stage + 1));
                f.edge_colors[e] = 0;
            }
            auto pick = blocked.smallest_missing(palette);
            REQUIRE(pick.has_value());
            f.edge_colors[e] = *pick;

            // stage invariant: v_1..v_stage are good and distinguished from
            // their good neighbors
            for (int i = 0; i < stage; ++i) {
                int vi = st.neighbors[i];
                CHECK(is_good(g, f, vi));
                for (int w : g.neighbors(vi))
                    if (is_good(g, f, w))
                        CHECK(partial_color_set(g, f, vi) != partial_color_set(g, f, w));
            }
        }
        CHECK(verify_r_vsdtc(g, f, 1).valid());
    }
    CHECK(driven >= 10);
}

TEST_CASE("extend_degenerate_vsdtc on the spec families") {
    Graph c6 = make_cycle(6);
    TotalColoring f = extend_degenerate_vsdtc(c6, 2);
    CHECK(verify_r_vsdtc(c6, f, 1).valid());
    CHECK(f.max_color_used() <= 2 * 2 + 3);

    Graph k4 = make_complete(4);
    TotalColoring f2 = extend_degenerate_vsdtc(k4, 3);
    CHECK(verify_r_vsdtc(k4, f2, 1).valid());
    CHECK(f2.max_color_used() <= 3 * 3 + 3);
    CHECK(f2.palette_size == 3 * 3 + 3);

    Graph g = random_k_degenerate(40, 2, 1);
    ExtendStats stats;
    TotalColoring f3 = extend_degenerate_vsdtc(g, 2, &stats);
    CHECK(verify_r_vsdtc(g, f3, 1).valid());
    CHECK(f3.max_color_used() <= 2 * g.max_degree() + 3);
    CHECK(stats.fallback_events == 0);
    CHECK(stats.ceilings_respected);

    CHECK_THROWS_AS(extend_degenerate_vsdtc(make_path(2), 2), Error);
    CHECK_THROWS_AS(extend_degenerate_vsdtc(make_complete(5), 2), Error); // not 2-degenerated
}

TEST_CASE("extension never undercuts the exact value") {
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_k_degenerate(7, 2, 333 + trial);
        int chi = *chromatic_number(g, 1).chromatic_number;
        TotalColoring f = extend_degenerate_vsdtc(g, 2);
        CHECK(f.max_color_used() >= chi);
    }
}

TEST_CASE("forest_vsdtc") {
    Graph star = make_complete_bipartite(1, 3);
    TotalColoring f = forest_vsdtc(star);
    CHECK(verify_r_vsdtc(star, f, 1).valid());
    CHECK(f.palette_size <= star.max_degree() + 3);
    CHECK(*chromatic_number(star, 1).chromatic_number == 4);

    Graph p7 = make_path(7);
    TotalColoring f2 = forest_vsdtc(p7);
    CHECK(f2.palette_size <= 5);

    for (int trial = 0; trial < 10; ++trial) {
        Graph t = random_tree(50, 600 + trial);
        TotalColoring f3 = forest_vsdtc(t);
        CHECK(verify_r_vsdtc(t, f3, 1).valid());
        CHECK(f3.palette_size <= t.max_degree() + 3);
    }

    // forests with several trees share the palette
    Graph forest = testutil::disjoint_union(random_tree(10, 5), random_tree(8, 6));
    TotalColoring f4 = forest_vsdtc(forest);
    CHECK(verify_r_vsdtc(forest, f4, 1).valid());
    CHECK(f4.palette_size <= forest.max_degree() + 3);

    CHECK_THROWS_AS(forest_vsdtc(make_cycle(4)), Error);
    CHECK_THROWS_AS(forest_vsdtc(make_path(2)), Error);
}

TEST_CASE("k = 1 extension redirects to the forest construction") {
    Graph t = random_tree(20, 77);
    TotalColoring f = extend_degenerate_vsdtc(t, 1);
    CHECK(verify_r_vsdtc(t, f, 1).valid());
    CHECK(f.palette_size <= t.max_degree() + 3);
}

TEST_CASE("tree_vsdtc_r") {
    Graph star = make_complete_bipartite(1, 4);
    TotalColoring f = tree_vsdtc_r(star, 2);
    CHECK(verify_r_vsdtc(star, f, 2).valid());
    CHECK(f.max_color_used() <= star.max_degree() + 3);

    Graph p7 = make_path(7);
    TotalColoring f2 = tree_vsdtc_r(p7, 2);
    CHECK(verify_r_vsdtc(p7, f2, 2).valid());
    CHECK(f2.max_color_used() <= p7.max_degree() + 3);

    // complete binary tree of depth 3
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < 15; ++v) edges.emplace_back((v - 1) / 2, v);
    Graph bt = Graph::build(15, edges);
    TotalColoring f3 = tree_vsdtc_r(bt, 3);
    CHECK(verify_r_vsdtc(bt, f3, 3).valid());
    CHECK(f3.max_color_used() <= 2 * bt.max_degree() + 1);

    CHECK_THROWS_AS(tree_vsdtc_r(make_cycle(5), 2), Error);
    CHECK_THROWS_AS(tree_vsdtc_r(p7, 4), Error);
    CHECK_THROWS_AS(tree_vsdtc_r(make_path(2), 2), Error);
}
