// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The long K_6 row only runs with VSDT_RUN_LONG=1.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "vsdt/experiments.hpp"

using namespace vsdt;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << index << ". " << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

SearchBudget acceptance_budget() {
    SearchBudget b;
    b.max_nodes = 500'000'000;
    b.max_time = std::chrono::minutes(5);
    return b;
}

int exact_chi(const Graph& g, int r, const SearchBudget& budget = acceptance_budget()) {
    SolveResult res = chromatic_number(g, r, budget);
    if (res.status != SolveStatus::exact) return -1;
    return *res.chromatic_number;
}

void criterion_paths() {
    bool ok = true;
    std::ostringstream detail;
    for (int n : {3, 5, 7, 9}) {
        int chi = exact_chi(make_path(n), 1);
        detail << "P_" << n << "=" << chi << " ";
        ok &= chi == 4;
    }
    for (int n : {4, 6, 8}) {
        int chi = exact_chi(make_path(n), 1);
        detail << "P_" << n << "=" << chi << " ";
        ok &= chi == 5;
    }
    report(1, "paths: odd orders need 4 colors, even orders 5", ok, detail.str());
}

void criterion_cycles() {
    bool ok = true;
    std::ostringstream detail;
    for (int n = 3; n <= 8; ++n) {
        int chi = exact_chi(make_cycle(n), 1);
        detail << "C_" << n << "=" << chi << " ";
        ok &= chi >= 4 && chi <= 5;
    }
    report(2, "cycles: exact values stay within 5 colors", ok, detail.str());
}

void criterion_complete_graphs() {
    bool ok = true;
    std::ostringstream detail;
    const int expected[] = {5, 6, 8};
    for (int n = 3; n <= 5; ++n) {
        int chi = exact_chi(make_complete(n), 1);
        detail << "K_" << n << "=" << chi << " ";
        ok &= chi == expected[n - 3];
    }
    const char* run_long = std::getenv("VSDT_RUN_LONG");
    if (run_long && std::string(run_long) == "1") {
        SearchBudget big;
        big.max_nodes = 1'000'000'000'000LL;
        big.max_time = std::chrono::hours(2);
        int chi = exact_chi(make_complete(6), 1, big);
        detail << "K_6=" << chi << " ";
        ok &= chi == 10;
    } else {
        detail << "(K_6 optional row skipped; set VSDT_RUN_LONG=1)";
    }
    report(3, "complete graphs match the known small values", ok, detail.str());
}

void criterion_lower_bound() {
    bool ok = true;
    int checked = 0, tight = 0;
    for (int i = 0; i < 200; ++i) {
        Rng rng(9000 + i);
        int n = rng.uniform(3, 8);
        Graph g = testutil::random_connected(n, rng.uniform(0, 4), rng.next());
        int r = 1 + i % 3;
        Bound lb = lower_bound(g, r);
        int chi = exact_chi(g, r);
        if (chi < 0) {
            ok = false;
            continue;
        }
        ++checked;
        ok &= chi >= g.max_degree() + 1;
        if (lb.provenance == Bound::Provenance::close_max_degree_pair)
            ok &= chi >= g.max_degree() + 2;
        if (chi == lb.value) ++tight;
    }
    std::ostringstream detail;
    detail << checked << " instances, bound tight on " << tight;
    report(4, "lower bound holds on random connected graphs", ok, detail.str());
}

void criterion_monotone_and_components() {
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        Rng rng(11000 + i);
        int n = rng.uniform(3, 7);
        Graph g = testutil::random_connected(n, rng.uniform(0, 3), rng.next());
        int prev = 0;
        for (int r = 1; r <= 3; ++r) {
            int chi = exact_chi(g, r);
            if (chi < 0 || chi < prev) ok = false;
            prev = chi;
        }
    }
    for (int i = 0; i < 50; ++i) {
        Rng rng(12000 + i);
        Graph a = testutil::random_connected(rng.uniform(3, 5), rng.uniform(0, 2), rng.next());
        Graph b = testutil::random_connected(rng.uniform(3, 5), rng.uniform(0, 2), rng.next());
        Graph u = testutil::disjoint_union(a, b);
        int r = 1 + i % 3;
        int whole = exact_chi(u, r);
        int parts = std::max(exact_chi(a, r), exact_chi(b, r));
        if (whole < 0 || whole != parts) ok = false;
    }
    report(5, "values nondecreasing in r; unions take the component maximum", ok,
           "100 + 50 instances");
}

void criterion_degenerate_extension() {
    bool ok = true;
    long long fallbacks = 0;
    int ceiling_breaches = 0;
    for (int i = 0; i < 300; ++i) {
        Rng rng(13000 + i);
        int k = 1 + i % 3;
        int n = rng.uniform(5, 60);
        Graph g = k == 1 ? random_tree(n, rng.next()) : random_k_degenerate(n, k, rng.next());
        ExtendStats stats;
        TotalColoring f = extend_degenerate_vsdtc(g, k, &stats);
        if (!verify_r_vsdtc(g, f, 1).valid()) ok = false;
        if (f.max_color_used() > k * g.max_degree() + 3) ok = false;
        fallbacks += stats.fallback_events;
        if (!stats.ceilings_respected) ++ceiling_breaches;
    }
    ok &= fallbacks == 0;
    std::ostringstream detail;
    detail << "300 instances, fallbacks = " << fallbacks
           << ", ceiling breaches = " << ceiling_breaches;
    report(6, "degenerate extension: valid, within k*Delta+3, no backtracking", ok,
           detail.str());
}

void criterion_composition() {
    bool ok = true;
    int greedy_excesses = 0;
    int built = 0;
    for (int i = 0; built < 200; ++i) {
        Rng rng(14000 + i);
        int n = rng.uniform(4, 60);
        Graph g = testutil::random_graph(n, rng.uniform(5, 30), rng.next());
        if (has_isolated_edge(g)) continue;
        ++built;
        int r = 1 + i % 3;
        TotalColoring f = compose_vsdtc(g, r);
        if (!verify_r_vsdtc(g, f, r).valid()) ok = false;
        int emax = 0, vmin = f.palette_size + 1;
        for (int c : f.edge_colors) emax = std::max(emax, c);
        for (int c : f.vertex_colors) vmin = std::min(vmin, c);
        if (g.edge_count() > 0 && g.vertex_count() > 0 && emax >= vmin) ok = false;
        if (r == 1 && g.max_degree() >= 1) {
            int p = greedy_r_sec(g, 1).color_count;
            if (p <= 3 * g.max_degree()) {
                if (f.palette_size > 4 * g.max_degree()) ok = false;
            } else {
                ++greedy_excesses;
            }
        }
    }
    std::ostringstream detail;
    detail << "200 instances, greedy beyond 3*Delta on " << greedy_excesses;
    report(7, "composition: valid, disjoint palettes, 4*Delta when greedy cooperates", ok,
           detail.str());
}

void criterion_trees() {
    bool ok = true;
    int n2 = 0, hit2 = 0, n3 = 0, hit3 = 0;
    for (int i = 0; i < 100; ++i) {
        Rng rng(15000 + i);
        int n = rng.uniform(4, 40);
        Graph t = random_tree(n, rng.next());
        int delta = t.max_degree();

        TotalColoring f2 = tree_vsdtc_r(t, 2);
        if (!verify_r_vsdtc(t, f2, 2).valid()) ok = false;
        ++n2;
        if (f2.max_color_used() <= delta + 3) ++hit2;

        if (delta >= 3) {
            TotalColoring f3 = tree_vsdtc_r(t, 3);
            if (!verify_r_vsdtc(t, f3, 3).valid()) ok = false;
            ++n3;
            if (f3.max_color_used() <= 2 * delta + 1) ++hit3;
        }
    }
    double frac2 = n2 ? static_cast<double>(hit2) / n2 : 1.0;
    double frac3 = n3 ? static_cast<double>(hit3) / n3 : 1.0;
    ok &= frac2 >= 0.95 && frac3 >= 0.95;
    std::ostringstream detail;
    detail << "r=2 target " << hit2 << "/" << n2 << ", r=3 target " << hit3 << "/" << n3;
    report(8, "trees: valid at r=2,3 and on target nearly always", ok, detail.str());
}

void criterion_oracle_equivalence() {
    bool ok = true;
    int instances = 0, probes = 0;
    for (int n : {1, 3, 4}) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
        const int pair_count = static_cast<int>(all_pairs.size());
        for (unsigned mask = 0; mask < (1u << pair_count); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int b = 0; b < pair_count; ++b)
                if (mask & (1u << b)) edges.push_back(all_pairs[b]);
            if (n + static_cast<int>(edges.size()) > 8) continue;
            Graph g = Graph::build(n, edges);
            if (!is_connected(g)) continue;
            if (g.vertex_count() == 2 && g.edge_count() == 1) continue;
            if (has_isolated_edge(g)) continue;
            ++instances;
            for (int r = 1; r <= 2; ++r)
                for (int palette = 1; palette <= 5; ++palette) {
                    ++probes;
                    bool brute = testutil::brute_force_exists(g, r, palette);
                    auto probe = exists_coloring(g, r, palette, acceptance_budget());
                    if (probe.status == ProbeStatus::timed_out ||
                        brute != (probe.status == ProbeStatus::found)) {
                        ok = false;
                    }
                    if (probe.witness && !verify_r_vsdtc(g, *probe.witness, r).valid())
                        ok = false;
                }
        }
    }
    std::ostringstream detail;
    detail << instances << " graphs, " << probes << " palette probes";
    report(9, "search agrees with full enumeration on every tiny graph", ok, detail.str());
}

void criterion_finders() {
    bool ok = true;
    const int palette = 8;
    auto from_mask = [](unsigned mask) {
        ColorSet s;
        for (int c = 1; c <= 8; ++c)
            if (mask & (1u << (c - 1))) s.insert(c);
        return s;
    };
    for (unsigned a = 0; a < 256; ++a)
        for (unsigned b = 0; b < 256; ++b) {
            if (a == b) continue;
            ColorSet A = from_mask(a), B = from_mask(b);
            int ext = 0, next = 0, eq = 0, neq = 0;
            for (int c = 1; c <= palette; ++c) {
                if (A == B.with(c) || B == A.with(c)) {
                    ext = c;
                    ++next;
                }
                if (A.with(c) == B.with(c)) {
                    eq = c;
                    ++neq;
                }
            }
            auto found_ext = find_extension_color(A, B, palette);
            auto found_eq = find_equalizing_color(A, B, palette);
            if (next > 1 || neq > 1) ok = false;
            if (found_ext.has_value() != (next == 1) || (found_ext && *found_ext != ext))
                ok = false;
            if (found_eq.has_value() != (neq == 1) || (found_eq && *found_eq != eq)) ok = false;
        }
    report(10, "set-extension finders agree with brute force on all pairs", ok,
           "65280 set pairs, palette 8");
}

void criterion_isolated_edge() {
    bool ok = true;
    Graph k2 = make_path(2);
    for (int palette = 1; palette <= 4; ++palette) {
        TotalColoring f = TotalColoring::empty(k2, palette);
        for (int a = 1; a <= palette; ++a)
            for (int b = 1; b <= palette; ++b)
                for (int e = 1; e <= palette; ++e) {
                    f.vertex_colors = {a, b};
                    f.edge_colors = {e};
                    if (!is_proper_total(k2, f).proper) continue;
                    for (int r = 1; r <= 3; ++r)
                        if (verify_r_vsdtc(k2, f, r).valid()) ok = false;
                }
    }
    bool threw = false;
    try {
        chromatic_number(k2, 1);
    } catch (const Error& e) {
        threw = e.code() == errc::isolated_edge;
    }
    ok &= threw;
    report(11, "an isolated edge admits no distinguishing coloring", ok,
           "exhaustive to 4 colors; solver raises IsolatedEdge");
}

} // namespace

int main() {
    criterion_paths();
    criterion_cycles();
    criterion_complete_graphs();
    criterion_lower_bound();
    criterion_monotone_and_components();
    criterion_degenerate_extension();
    criterion_composition();
    criterion_trees();
    criterion_oracle_equivalence();
    criterion_finders();
    criterion_isolated_edge();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: ")
              << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
    return failures == 0 ? 0 : 1;
}
