#include "vsdt/experiments.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vsdt/rng.hpp"

namespace vsdt {

int ceil_log2(int n) {
    require(n >= 1, errc::invalid_input, "ceil_log2 needs n >= 1");
    int t = 0;
    while ((1 << t) < n) ++t;
    return t;
}

std::string csv_header() {
    return "family,n,m,delta_max,k_degeneracy,r,lower,exact,status,constructive,bound";
}

namespace {

std::string opt_str(const std::optional<int>& x) {
    return x ? std::to_string(*x) : std::string();
}

} // namespace

std::string to_csv(const ExperimentRow& row) {
    std::ostringstream out;
    out << row.family << "," << row.n << "," << row.m << "," << row.max_degree << ","
        << row.degeneracy << "," << row.r << "," << row.lower << "," << opt_str(row.exact)
        << "," << row.status << "," << opt_str(row.constructive) << "," << opt_str(row.bound);
    return out.str();
}

namespace {

ExperimentRow base_row(const Graph& g, const std::string& family, int r) {
    ExperimentRow row;
    row.family = family;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.max_degree = g.max_degree();
    row.degeneracy = degeneracy(g).k;
    row.r = r;
    row.lower = lower_bound(g, r).value;
    return row;
}

void fill_exact(ExperimentRow& row, const Graph& g, int r, const SearchBudget& budget) {
    SolveResult res = chromatic_number(g, r, budget);
    if (res.status == SolveStatus::exact) {
        row.exact = res.chromatic_number;
        row.status = "exact";
    } else {
        row.status = "timeout";
    }
}

} // namespace

std::vector<ExperimentRow> run_table(int n_min, int n_max, int r, const SearchBudget& budget) {
    require(n_min >= 3, errc::invalid_input, "table starts at n = 3");
    require(n_max >= n_min, errc::invalid_input, "empty n range");
    require(r >= 1, errc::invalid_input, "radius must be at least 1");

    std::vector<ExperimentRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        Graph g = make_complete(n);
        ExperimentRow row = base_row(g, "complete", r);
        fill_exact(row, g, r, budget);

        // K_n has diameter 1, so the r=1 constructions and bounds carry
        // over to every radius.
        const int k = n - 1;
        int constructive = compose_vsdtc(g, r).max_color_used();
        if (k >= 2) {
            TotalColoring ext = extend_degenerate_vsdtc(g, k);
            constructive = std::min(constructive, ext.max_color_used());
        }
        row.constructive = constructive;
        row.bound = std::min(k * row.max_degree + 3, 4 * row.max_degree);
        rows.push_back(std::move(row));
    }
    return rows;
}

ScanSummary run_scan(const ScanOptions& opts) {
    require(opts.count >= 1, errc::invalid_input, "scan count must be at least 1");
    require(opts.n_max >= 3, errc::invalid_input, "scan needs n_max >= 3");
    require(opts.r >= 1, errc::invalid_input, "radius must be at least 1");
    const bool trees = opts.family == "random_tree";
    require(trees || opts.family == "random_k_degenerate", errc::invalid_input,
            "scan family must be random_tree or random_k_degenerate");

    ScanSummary summary;
    Rng rng(opts.seed);
    for (int i = 0; i < opts.count; ++i) {
        const int n = rng.uniform(3, opts.n_max);
        const std::uint64_t child_seed = rng.next();
        Graph g = trees ? random_tree(n, child_seed)
                        : random_k_degenerate(n, opts.k, child_seed);

        ScanRow scan;
        scan.row = base_row(g, opts.family, opts.r);
        fill_exact(scan.row, g, opts.r, opts.budget);
        scan.conjecture1_bound = n + ceil_log2(n) + 1;

        if (trees) {
            if (opts.r == 1) {
                scan.row.constructive = forest_vsdtc(g).max_color_used();
                scan.row.bound = g.max_degree() + 3;
            } else if (opts.r == 2 || opts.r == 3) {
                scan.row.constructive = tree_vsdtc_r(g, opts.r).max_color_used();
                scan.row.bound =
                    opts.r == 2 ? g.max_degree() + 3 : 2 * g.max_degree() + 1;
            } else {
                scan.row.constructive = compose_vsdtc(g, opts.r).max_color_used();
            }
        } else {
            if (opts.r == 1) {
                scan.row.constructive =
                    extend_degenerate_vsdtc(g, opts.k).max_color_used();
                scan.row.bound = opts.k * g.max_degree() + 3;
                if (opts.k >= 2)
                    scan.row.bound = std::min(*scan.row.bound, 4 * g.max_degree());
            } else {
                scan.row.constructive = compose_vsdtc(g, opts.r).max_color_used();
            }
        }

        if (scan.row.exact) {
            scan.conjecture1_margin = scan.conjecture1_bound - *scan.row.exact;
            if (opts.r == 1) {
                scan.conjecture2_excess = *scan.row.exact - 2 * g.max_degree();
                if (!summary.max_conjecture2_excess ||
                    *scan.conjecture2_excess > *summary.max_conjecture2_excess)
                    summary.max_conjecture2_excess = scan.conjecture2_excess;
            }
            if (*scan.conjecture1_margin < 0) {
                // Exhausted searches up to the conjectured bound: dump the
                // instance and the per-palette probe log.
                scan.counterexample = true;
                ++summary.conjecture1_violations;
                SolveResult res = chromatic_number(g, opts.r, opts.budget);
                std::string stem = opts.dump_dir + "/conjecture1_candidate_" +
                                   std::to_string(summary.conjecture1_violations);
                std::ofstream gr(stem + ".gr");
                gr << write_graph_text(g, "conjecture candidate");
                nlohmann::json cert;
                cert["n"] = n;
                cert["r"] = opts.r;
                cert["bound"] = scan.conjecture1_bound;
                cert["exact"] = *scan.row.exact;
                auto& probes = cert["probes"] = nlohmann::json::array();
                for (const auto& outcome : res.outcomes)
                    probes.push_back({{"palette", outcome.palette},
                                      {"status", probe_status_name(outcome.status)},
                                      {"nodes", outcome.nodes}});
                std::ofstream js(stem + ".json");
                js << cert.dump(2) << "\n";
                summary.dumps.push_back(stem + ".gr");
                summary.dumps.push_back(stem + ".json");
            }
        } else {
            ++summary.timeouts;
        }
        summary.rows.push_back(std::move(scan));
    }
    return summary;
}

} // namespace vsdt
