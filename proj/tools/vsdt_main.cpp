#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vsdt/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitTimeout = 3;

struct GraphInput {
    std::string path;
    vsdt::GenSpec spec;
};

void add_graph_flags(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--graph", in.path, "graph file (p/e text format)");
    cmd->add_option("--family", in.spec.family,
                    "generator family: path|cycle|complete|complete_bipartite|"
                    "random_tree|random_k_degenerate");
    cmd->add_option("--n", in.spec.n, "vertex count");
    cmd->add_option("--a", in.spec.a, "first side size (complete_bipartite)");
    cmd->add_option("--b", in.spec.b, "second side size (complete_bipartite)");
    cmd->add_option("--k", in.spec.k, "attachment bound (random_k_degenerate)");
    cmd->add_option("--seed", in.spec.seed, "generator seed");
}

vsdt::Graph load_graph(const GraphInput& in) {
    if (!in.path.empty()) {
        std::ifstream f(in.path);
        if (!f) vsdt::fail(vsdt::errc::io_error, "cannot open " + in.path);
        return vsdt::read_graph_text(f);
    }
    if (!in.spec.family.empty()) return vsdt::generate(in.spec);
    vsdt::fail(vsdt::errc::invalid_input, "provide --graph or --family");
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) vsdt::fail(vsdt::errc::io_error, "cannot write " + path);
    f << text;
}

std::string element_name(const vsdt::Graph& g, const vsdt::Element& x) {
    if (x.is_vertex()) return "v" + std::to_string(x.index + 1);
    auto [u, v] = g.endpoints(x.index);
    return "e" + std::to_string(u + 1) + "-" + std::to_string(v + 1);
}

std::string report_text(const vsdt::Graph& g, const vsdt::VerificationReport& report) {
    std::ostringstream out;
    out << "proper = " << (report.proper ? "true" : "false") << "\n";
    out << "distinguishing = " << (report.distinguishing ? "true" : "false") << "\n";
    out << "violations = " << report.violations.size() << "\n";
    for (const auto& violation : report.violations) {
        out << "  " << vsdt::violation_kind_name(violation.kind) << " "
            << element_name(g, violation.a) << " " << element_name(g, violation.b);
        if (violation.distance >= 0) out << " (distance " << violation.distance << ")";
        out << "\n";
    }
    return out.str();
}

nlohmann::json row_json(const vsdt::ExperimentRow& row) {
    nlohmann::json j;
    j["family"] = row.family;
    j["n"] = row.n;
    j["m"] = row.m;
    j["delta_max"] = row.max_degree;
    j["k_degeneracy"] = row.degeneracy;
    j["r"] = row.r;
    j["lower"] = row.lower;
    if (row.exact) j["exact"] = *row.exact;
    j["status"] = row.status;
    if (row.constructive) j["constructive"] = *row.constructive;
    if (row.bound) j["bound"] = *row.bound;
    return j;
}

int run_gen(const GraphInput& in, const std::string& out) {
    vsdt::Graph g = vsdt::generate(in.spec);
    write_output(out, vsdt::write_graph_text(g, in.spec.family));
    return kExitOk;
}

int run_verify(const GraphInput& in, const std::string& coloring_path, int r_flag,
               const std::string& format) {
    vsdt::Graph g = load_graph(in);
    std::ifstream cf(coloring_path);
    if (!cf) vsdt::fail(vsdt::errc::io_error, "cannot open " + coloring_path);
    std::stringstream buffer;
    buffer << cf.rdbuf();
    int r = 0;
    vsdt::TotalColoring f = vsdt::coloring_from_json(g, buffer.str(), &r);
    if (r_flag > 0) r = r_flag;
    vsdt::require(r >= 1, vsdt::errc::invalid_input,
                  "no radius in the coloring file; pass --r");
    auto report = vsdt::verify_r_vsdtc(g, f, r);
    if (format == "json") {
        std::cout << vsdt::coloring_to_json(g, f, r);
    } else {
        std::cout << (report.valid() ? "valid" : "invalid") << "\n"
                  << report_text(g, report);
    }
    return report.valid() ? kExitOk : kExitVerifyFailed;
}

int run_solve(const GraphInput& in, int r, const vsdt::SearchBudget& budget,
              const std::string& format, const std::string& out) {
    vsdt::Graph g = load_graph(in);
    vsdt::SolveResult res = vsdt::chromatic_number(g, r, budget);
    if (format == "json") {
        nlohmann::json j;
        if (res.chromatic_number) j["chi"] = *res.chromatic_number;
        j["lower"] = res.lower_bound_used.value;
        j["lower_provenance"] = res.lower_bound_used.provenance_name();
        j["status"] = res.status == vsdt::SolveStatus::exact ? "exact" : "timeout";
        j["nodes"] = res.nodes;
        auto& outcomes = j["outcomes"] = nlohmann::json::array();
        for (const auto& o : res.outcomes)
            outcomes.push_back({{"palette", o.palette},
                                {"status", vsdt::probe_status_name(o.status)},
                                {"nodes", o.nodes}});
        std::cout << j.dump(2) << "\n";
    } else {
        if (res.chromatic_number)
            std::cout << "chi = " << *res.chromatic_number << "\n";
        std::cout << "lower = " << res.lower_bound_used.value << " ("
                  << res.lower_bound_used.provenance_name() << ")\n";
        std::cout << "status = "
                  << (res.status == vsdt::SolveStatus::exact ? "exact" : "timeout") << "\n";
        std::cout << "nodes = " << res.nodes << "\n";
    }
    if (!out.empty() && res.witness)
        write_output(out, vsdt::coloring_to_json(g, *res.witness, r));
    return res.status == vsdt::SolveStatus::exact ? kExitOk : kExitTimeout;
}

int run_greedy(const GraphInput& in, int r, std::string algo, int k_flag,
               const std::string& format, const std::string& out) {
    vsdt::Graph g = load_graph(in);
    if (algo == "auto") {
        if (r == 1)
            algo = vsdt::is_forest(g) ? "forest"
                                      : (vsdt::degeneracy(g).k <= 3 ? "degenerate" : "compose");
        else
            algo = (vsdt::is_tree(g) && (r == 2 || r == 3)) ? "tree" : "compose";
    }
    vsdt::TotalColoring f;
    if (algo == "compose") {
        f = vsdt::compose_vsdtc(g, r);
    } else if (algo == "degenerate") {
        vsdt::require(r == 1, vsdt::errc::invalid_input,
                      "the degenerate extension targets r = 1");
        int k = k_flag > 0 ? k_flag : std::max(1, vsdt::degeneracy(g).k);
        f = vsdt::extend_degenerate_vsdtc(g, k);
    } else if (algo == "forest") {
        vsdt::require(r == 1, vsdt::errc::invalid_input, "the forest construction targets r = 1");
        f = vsdt::forest_vsdtc(g);
    } else if (algo == "tree") {
        f = vsdt::tree_vsdtc_r(g, r);
    } else {
        vsdt::fail(vsdt::errc::invalid_input, "unknown --algo " + algo);
    }
    auto report = vsdt::verify_r_vsdtc(g, f, r);
    if (format == "json") {
        nlohmann::json j;
        j["algorithm"] = algo;
        j["palette"] = f.palette_size;
        j["colors_used"] = f.max_color_used();
        j["valid"] = report.valid();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "algorithm = " << algo << "\n"
                  << "palette = " << f.palette_size << "\n"
                  << "colors_used = " << f.max_color_used() << "\n"
                  << "valid = " << (report.valid() ? "true" : "false") << "\n";
    }
    if (!out.empty()) write_output(out, vsdt::coloring_to_json(g, f, r));
    return report.valid() ? kExitOk : kExitVerifyFailed;
}

int run_bounds(const GraphInput& in, int r) {
    vsdt::Graph g = load_graph(in);
    auto lb = vsdt::lower_bound(g, r);
    const int delta = g.max_degree();
    const int k = vsdt::degeneracy(g).k;
    std::cout << "n = " << g.vertex_count() << "; m = " << g.edge_count()
              << "; delta = " << delta << "; degeneracy = " << k << "; r = " << r << "\n";
    std::cout << "lower = " << lb.value << " (" << lb.provenance_name() << ")\n";
    if (r == 1) {
        std::cout << "upper 4*delta (edge/vertex composition) = " << 4 * delta << "\n";
        if (k == 1)
            std::cout << "upper delta+3 (forest) = " << delta + 3 << "\n";
        else
            std::cout << "upper min(k*delta+3, 4*delta) (degenerate extension) = "
                      << std::min(k * delta + 3, 4 * delta) << "\n";
        if (k <= 3)
            std::cout << "upper k*delta+3 (k = " << k << ") = " << k * delta + 3 << "\n";
    }
    if (r == 2 && vsdt::is_tree(g))
        std::cout << "upper delta+3 (tree, r = 2) = " << delta + 3 << "\n";
    if (r == 3 && vsdt::is_tree(g) && delta >= 3)
        std::cout << "upper 2*delta+1 (tree, r = 3) = " << 2 * delta + 1 << "\n";
    return kExitOk;
}

int run_table(int n_min, int n_max, int r, const vsdt::SearchBudget& budget,
              const std::string& format, const std::string& out) {
    auto rows = vsdt::run_table(n_min, n_max, r, budget);
    std::ostringstream text;
    if (format == "csv") {
        text << vsdt::csv_header() << "\n";
        for (const auto& row : rows) text << vsdt::to_csv(row) << "\n";
    } else if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows) j.push_back(row_json(row));
        text << j.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            text << "K_" << row.n << ": lower = " << row.lower;
            if (row.exact)
                text << ", exact = " << *row.exact;
            else
                text << ", exact in [" << row.lower << ", " << *row.constructive
                     << "] (timeout)";
            text << ", constructive = " << *row.constructive << ", bound = " << *row.bound
                 << "\n";
        }
    }
    write_output(out, text.str());
    bool timed_out = false;
    for (const auto& row : rows) timed_out |= row.status == "timeout";
    return timed_out ? kExitTimeout : kExitOk;
}

int run_scan(const vsdt::ScanOptions& opts, const std::string& format,
             const std::string& out) {
    auto summary = vsdt::run_scan(opts);
    std::ostringstream text;
    if (format == "csv") {
        text << vsdt::csv_header() << "\n";
        for (const auto& scan : summary.rows) text << vsdt::to_csv(scan.row) << "\n";
    } else if (format == "json") {
        nlohmann::json j;
        auto& rows = j["rows"] = nlohmann::json::array();
        for (const auto& scan : summary.rows) {
            nlohmann::json row = row_json(scan.row);
            row["conjecture1_bound"] = scan.conjecture1_bound;
            if (scan.conjecture1_margin) row["conjecture1_margin"] = *scan.conjecture1_margin;
            if (scan.conjecture2_excess) row["conjecture2_excess"] = *scan.conjecture2_excess;
            row["counterexample"] = scan.counterexample;
            rows.push_back(row);
        }
        j["conjecture1_violations"] = summary.conjecture1_violations;
        if (summary.max_conjecture2_excess)
            j["max_conjecture2_excess"] = *summary.max_conjecture2_excess;
        j["timeouts"] = summary.timeouts;
        text << j.dump(2) << "\n";
    } else {
        for (const auto& scan : summary.rows) {
            text << scan.row.family << " n=" << scan.row.n << " m=" << scan.row.m
                 << " delta=" << scan.row.max_degree << " r=" << scan.row.r;
            if (scan.row.exact)
                text << " exact=" << *scan.row.exact;
            else
                text << " exact=? (timeout)";
            if (scan.row.constructive) text << " constructive=" << *scan.row.constructive;
            text << " conj1_bound=" << scan.conjecture1_bound;
            if (scan.conjecture1_margin) text << " conj1_margin=" << *scan.conjecture1_margin;
            if (scan.conjecture2_excess) text << " conj2_excess=" << *scan.conjecture2_excess;
            if (scan.counterexample) text << " COUNTEREXAMPLE-CANDIDATE";
            text << "\n";
        }
        text << "conjecture1_violations = " << summary.conjecture1_violations << "\n";
        if (summary.max_conjecture2_excess)
            text << "max_conjecture2_excess = " << *summary.max_conjecture2_excess << "\n";
        text << "timeouts = " << summary.timeouts << "\n";
    }
    write_output(out, text.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-vertex-strongly-distinguishing total coloring toolkit"};
    app.require_subcommand(1);

    int r = 1;
    std::string out, format = "text";
    vsdt::SearchBudget budget;
    long long timeout_ms = -1, max_nodes = -1;
    app.add_option("--r", r, "distinguishing radius")->capture_default_str();
    app.add_option("--out", out, "output file (default stdout)");
    app.add_option("--format", format, "output format: text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--timeout-ms", timeout_ms, "wall time budget per palette probe");
    app.add_option("--max-nodes", max_nodes, "node budget per palette probe");

    GraphInput input;
    std::string coloring_path, algo = "auto";
    int k_flag = 0;

    auto* gen = app.add_subcommand("gen", "generate a graph file");
    gen->fallthrough();
    add_graph_flags(gen, input);

    auto* verify = app.add_subcommand("verify", "verify a coloring against a graph");
    verify->fallthrough();
    add_graph_flags(verify, input);
    verify->add_option("--coloring", coloring_path, "coloring JSON file")->required();

    auto* solve = app.add_subcommand("solve", "exact chromatic number");
    solve->fallthrough();
    add_graph_flags(solve, input);

    auto* greedy = app.add_subcommand("greedy", "run a constructor and verify it");
    greedy->fallthrough();
    add_graph_flags(greedy, input);
    greedy->add_option("--algo", algo, "auto|compose|degenerate|forest|tree");
    greedy->add_option("--construct-k", k_flag, "degeneracy bound for the extension");

    auto* bounds = app.add_subcommand("bounds", "print lower and upper bounds");
    bounds->fallthrough();
    add_graph_flags(bounds, input);

    int n_min = 3, n_max = 5;
    auto* table = app.add_subcommand("table", "complete-graph value table");
    table->fallthrough();
    table->add_option("--min-n", n_min, "first n")->capture_default_str();
    table->add_option("--max-n", n_max, "last n")->capture_default_str();

    vsdt::ScanOptions scan_opts;
    auto* scan = app.add_subcommand("scan", "random-family conjecture scan");
    scan->fallthrough();
    scan->add_option("--family", scan_opts.family, "random_tree|random_k_degenerate");
    scan->add_option("--count", scan_opts.count, "number of instances");
    scan->add_option("--n-max", scan_opts.n_max, "largest instance size");
    scan->add_option("--k", scan_opts.k, "attachment bound for random_k_degenerate");
    scan->add_option("--seed", scan_opts.seed, "scan seed");
    scan->add_option("--dump-dir", scan_opts.dump_dir, "directory for candidate dumps");

    CLI11_PARSE(app, argc, argv);

    if (timeout_ms >= 0) budget.max_time = std::chrono::milliseconds(timeout_ms);
    if (max_nodes >= 0) budget.max_nodes = max_nodes;

    try {
        if (gen->parsed()) return run_gen(input, out);
        if (verify->parsed()) return run_verify(input, coloring_path, r, format);
        if (solve->parsed()) return run_solve(input, r, budget, format, out);
        if (greedy->parsed()) return run_greedy(input, r, algo, k_flag, format, out);
        if (bounds->parsed()) return run_bounds(input, r);
        if (table->parsed()) return run_table(n_min, n_max, r, budget, format, out);
        if (scan->parsed()) {
            scan_opts.r = r;
            scan_opts.budget = budget;
            return run_scan(scan_opts, format, out);
        }
    } catch (const vsdt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
