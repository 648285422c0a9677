#pragma once

#include <chrono>
#include <optional>
#include <utility>
#include <vector>

#include "vsdt/coloring.hpp"
#include "vsdt/graph.hpp"

namespace vsdt {

struct SearchBudget {
    long long max_nodes = 10'000'000;
    std::chrono::milliseconds max_time{60'000};
};

enum class ProbeStatus { found, exhausted, timed_out };

inline const char* probe_status_name(ProbeStatus s) {
    switch (s) {
    case ProbeStatus::found: return "found";
    case ProbeStatus::exhausted: return "exhausted";
    case ProbeStatus::timed_out: return "timeout";
    }
    return "unknown";
}

struct SolverOptions {
    /// Prunes branches where two color sets within distance r are both
    /// forced to stay equal (saturated palette, or a shared last uncolored
    /// edge with equal sets). Sound; kept optional so it can be tested
    /// against the plain search.
    bool dominance_prune = true;

    /// When set, only these vertex pairs must have distinct color sets.
    /// Used by the constructive base case; nullptr means all pairs within
    /// distance r.
    const std::vector<std::pair<int, int>>* restrict_pairs = nullptr;
};

struct ProbeResult {
    ProbeStatus status = ProbeStatus::exhausted;
    std::optional<TotalColoring> witness;
    long long nodes = 0;
    double seconds = 0.0;
};

/// Backtracking search for a single (graph, r, palette) question. The graph
/// must be connected and must not be an isolated edge.
ProbeResult exists_coloring(const Graph& g, int r, int palette,
                            const SearchBudget& budget = {}, const SolverOptions& opts = {});

struct PaletteOutcome {
    int palette = 0;
    ProbeStatus status = ProbeStatus::exhausted;
    long long nodes = 0;
};

enum class SolveStatus { exact, timed_out };

struct SolveResult {
    SolveStatus status = SolveStatus::exact;
    std::optional<int> chromatic_number;
    std::optional<TotalColoring> witness;
    Bound lower_bound_used;
    std::vector<PaletteOutcome> outcomes;
    long long nodes = 0;
    double seconds = 0.0;
};

/// Exact chromatic number: decomposes into components, iterates the palette
/// upward from the lower bound per component, and returns the maximum.
/// Isolated vertices contribute 1; isolated edges are rejected.
SolveResult chromatic_number(const Graph& g, int r, const SearchBudget& budget = {},
                             const SolverOptions& opts = {});

} // namespace vsdt
