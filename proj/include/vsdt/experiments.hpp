#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vsdt/constructive.hpp"
#include "vsdt/solver.hpp"

namespace vsdt {

struct ExperimentRow {
    std::string family;
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int degeneracy = 0;
    int r = 1;
    int lower = 0;
    std::optional<int> exact;
    std::string status = "exact"; // exact | timeout
    std::optional<int> constructive;
    std::optional<int> bound;
};

std::string csv_header();
std::string to_csv(const ExperimentRow& row);

/// Complete-graph rows K_n for n in [n_min, n_max]: lower bound, exact value
/// where the budget allows (bracket rows otherwise), constructive count and
/// theorem bound.
std::vector<ExperimentRow> run_table(int n_min, int n_max, int r, const SearchBudget& budget);

struct ScanOptions {
    std::string family = "random_tree"; // random_tree | random_k_degenerate
    int count = 10;
    int n_max = 12;
    int k = 2;
    std::uint64_t seed = 0;
    int r = 1;
    SearchBudget budget;
    std::string dump_dir = "."; // counterexample candidates land here
};

struct ScanRow {
    ExperimentRow row;
    int conjecture1_bound = 0;             // n + ceil(log2 n) + 1
    std::optional<int> conjecture1_margin; // bound - exact
    std::optional<int> conjecture2_excess; // exact - 2*Delta (r = 1 only)
    bool counterexample = false;
};

struct ScanSummary {
    std::vector<ScanRow> rows;
    int conjecture1_violations = 0;
    std::optional<int> max_conjecture2_excess;
    int timeouts = 0;
    std::vector<std::string> dumps;
};

/// Random-family scan for the two conjectured bounds. Candidates are only
/// counted when every palette up to the bound was exhausted (never from a
/// timeout) and are dumped as graph plus probe log.
ScanSummary run_scan(const ScanOptions& opts);

int ceil_log2(int n);

} // namespace vsdt
