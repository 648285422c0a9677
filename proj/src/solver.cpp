#include "vsdt/solver.hpp"

#include <algorithm>

namespace vsdt {

namespace {

using Clock = std::chrono::steady_clock;

class Search {
public:
    Search(const Graph& g, int r, int palette, const SearchBudget& budget,
           const SolverOptions& opts)
        : g_(g), palette_(palette), budget_(budget), opts_(opts) {
        const int n = g.vertex_count();
        const int m = g.edge_count();

        // Vertices in reverse peeling order (dense core first), then edges
        // grouped by the later endpoint: properness constraints bind early,
        // vertices complete progressively as their edge groups close.
        PeelingOrder peel = degeneracy(g);
        std::vector<int> pos_of(n);
        order_.reserve(n + m);
        for (int i = n - 1; i >= 0; --i) {
            pos_of[peel.order[i]] = static_cast<int>(order_.size());
            order_.push_back(Element::vertex(peel.order[i]));
        }
        std::vector<int> edge_ids(m);
        for (int e = 0; e < m; ++e) edge_ids[e] = e;
        auto key = [&](int e) {
            auto [u, v] = g.endpoints(e);
            int pu = pos_of[u], pv = pos_of[v];
            return std::tuple(std::max(pu, pv), std::min(pu, pv), e);
        };
        std::sort(edge_ids.begin(), edge_ids.end(),
                  [&](int a, int b) { return key(a) < key(b); });
        std::vector<int> edge_pos(m);
        for (int e : edge_ids) {
            edge_pos[e] = static_cast<int>(order_.size());
            order_.push_back(Element::edge(e));
        }

        conflicts_.resize(order_.size());
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.endpoints(e);
            int p = edge_pos[e];
            conflicts_[p].push_back(pos_of[u]);
            conflicts_[p].push_back(pos_of[v]);
            for (int x : {u, v})
                for (int e2 : g.incident_edges(x))
                    if (e2 != e && edge_pos[e2] < p) conflicts_[p].push_back(edge_pos[e2]);
            // Neighboring vertex colors conflict with each other, not with e.
        }
        for (int u = 0; u < n; ++u)
            for (int w : g.neighbors(u))
                if (pos_of[w] < pos_of[u]) conflicts_[pos_of[u]].push_back(pos_of[w]);

        if (opts.restrict_pairs) {
            within_.resize(n);
            for (auto [a, b] : *opts.restrict_pairs) {
                within_[a].push_back(b);
                within_[b].push_back(a);
            }
        } else {
            within_ = vertices_within(g, r);
        }
        within_mask_.assign(n, std::vector<char>(n, 0));
        for (int u = 0; u < n; ++u)
            for (int w : within_[u]) within_mask_[u][w] = 1;

        assigned_.assign(order_.size(), 0);
        vcolor_.assign(n, 0);
        ecolor_.assign(m, 0);
        counts_.assign(n, std::vector<std::uint16_t>(palette + 1, 0));
        cset_.assign(n, ColorSet{});
        distinct_.assign(n, 0);
        pending_.resize(n);
        for (int u = 0; u < n; ++u) pending_[u] = 2 * g.degree(u) + 1;
    }

    ProbeResult run() {
        ProbeResult result;
        auto start = Clock::now();
        deadline_ = start + budget_.max_time;
        bool found = dfs(0, 0);
        result.nodes = nodes_;
        result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (found) {
            result.status = ProbeStatus::found;
            TotalColoring f = TotalColoring::empty(g_, palette_);
            f.vertex_colors = vcolor_;
            f.edge_colors = ecolor_;
            result.witness = std::move(f);
        } else {
            result.status = timed_out_ ? ProbeStatus::timed_out : ProbeStatus::exhausted;
        }
        return result;
    }

private:
    void bump(int w, int c) {
        if (counts_[w][c]++ == 0) {
            cset_[w].insert(c);
            ++distinct_[w];
        }
    }
    void unbump(int w, int c) {
        if (--counts_[w][c] == 0) {
            cset_[w].erase(c);
            --distinct_[w];
        }
    }

    void apply(int pos, int c) {
        Element x = order_[pos];
        if (x.is_vertex()) {
            int u = x.index;
            vcolor_[u] = c;
            bump(u, c);
            --pending_[u];
            for (int w : g_.neighbors(u)) {
                bump(w, c);
                --pending_[w];
            }
        } else {
            auto [a, b] = g_.endpoints(x.index);
            ecolor_[x.index] = c;
            bump(a, c);
            bump(b, c);
            --pending_[a];
            --pending_[b];
        }
    }

    void unapply(int pos, int c) {
        Element x = order_[pos];
        if (x.is_vertex()) {
            int u = x.index;
            vcolor_[u] = 0;
            unbump(u, c);
            ++pending_[u];
            for (int w : g_.neighbors(u)) {
                unbump(w, c);
                ++pending_[w];
            }
        } else {
            auto [a, b] = g_.endpoints(x.index);
            ecolor_[x.index] = 0;
            unbump(a, c);
            unbump(b, c);
            ++pending_[a];
            ++pending_[b];
        }
    }

    bool vertex_ok(int w) {
        if (pending_[w] == 0) {
            for (int x : within_[w])
                if (pending_[x] == 0 && cset_[w] == cset_[x]) return false;
        }
        if (!opts_.dominance_prune) return true;
        if (distinct_[w] == palette_) {
            // Both sets already cover the palette; they can only stay equal.
            for (int x : within_[w])
                if (distinct_[x] == palette_) return false;
        }
        if (pending_[w] == 1 && vcolor_[w] != 0) {
            // The one missing element might be an edge shared with a vertex
            // in the same situation: both sets then grow by the same color.
            for (int w2 : g_.neighbors(w))
                if (vcolor_[w2] == 0) return true; // missing element is a vertex
            for (size_t i = 0; i < g_.incident_edges(w).size(); ++i) {
                int e = g_.incident_edges(w)[i];
                if (ecolor_[e] != 0) continue;
                int other = g_.neighbors(w)[i];
                if (pending_[other] == 1 && within_mask_[w][other] &&
                    cset_[w] == cset_[other])
                    return false;
                break; // exactly one missing element
            }
        }
        return true;
    }

    bool validate(int pos) {
        Element x = order_[pos];
        if (x.is_vertex()) {
            if (!vertex_ok(x.index)) return false;
            for (int w : g_.neighbors(x.index))
                if (!vertex_ok(w)) return false;
            return true;
        }
        auto [a, b] = g_.endpoints(x.index);
        return vertex_ok(a) && vertex_ok(b);
    }

    bool dfs(int pos, int max_used) {
        if (pos == static_cast<int>(order_.size())) return true;
        ++nodes_;
        if (nodes_ > budget_.max_nodes ||
            ((nodes_ & 0xFFF) == 0 && Clock::now() > deadline_)) {
            timed_out_ = true;
            return false;
        }
        const int cmax = std::min(max_used + 1, palette_);
        for (int c = 1; c <= cmax; ++c) {
            bool proper = true;
            for (int q : conflicts_[pos])
                if (assigned_[q] == c) {
                    proper = false;
                    break;
                }
            if (!proper) continue;
            apply(pos, c);
            assigned_[pos] = c;
            if (validate(pos)) {
                if (dfs(pos + 1, std::max(max_used, c))) return true;
                if (timed_out_) return false;
            }
            assigned_[pos] = 0;
            unapply(pos, c);
        }
        return false;
    }

    const Graph& g_;
    int palette_;
    SearchBudget budget_;
    SolverOptions opts_;

    std::vector<Element> order_;
    std::vector<std::vector<int>> conflicts_;
    std::vector<std::vector<int>> within_;
    std::vector<std::vector<char>> within_mask_;

    std::vector<int> assigned_;
    std::vector<int> vcolor_, ecolor_;
    std::vector<std::vector<std::uint16_t>> counts_;
    std::vector<ColorSet> cset_;
    std::vector<int> distinct_;
    std::vector<int> pending_;

    long long nodes_ = 0;
    bool timed_out_ = false;
    Clock::time_point deadline_;
};

} // namespace

ProbeResult exists_coloring(const Graph& g, int r, int palette, const SearchBudget& budget,
                            const SolverOptions& opts) {
    require(r >= 1, errc::invalid_input, "radius must be at least 1");
    require(palette >= 1 && palette <= ColorSet::kMaxColors, errc::invalid_input,
            "palette size out of range");
    if (!opts.restrict_pairs) {
        require(is_connected(g), errc::invalid_input, "exists_coloring needs a connected graph");
        require(!(g.vertex_count() == 2 && g.edge_count() == 1), errc::isolated_edge,
                "isolated edge admits no distinguishing total coloring");
    }
    Search search(g, r, palette, budget, opts);
    return search.run();
}

SolveResult chromatic_number(const Graph& g, int r, const SearchBudget& budget,
                             const SolverOptions& opts) {
    require(r >= 1, errc::invalid_input, "radius must be at least 1");
    require(!has_isolated_edge(g), errc::isolated_edge,
            "graph has an isolated-edge component");

    SolveResult result;
    result.lower_bound_used = {1, Bound::Provenance::max_degree_plus_one};
    TotalColoring merged = TotalColoring::empty(g, 0);
    int best = 1; // isolated vertices need one color
    auto start = Clock::now();

    for (const auto& comp : components(g)) {
        const Graph& h = comp.graph;
        if (h.vertex_count() == 1) {
            merged.vertex_colors[comp.to_parent[0]] = 1;
            continue;
        }
        Bound lb = lower_bound(h, r);
        if (lb.value > result.lower_bound_used.value) result.lower_bound_used = lb;

        const int ceiling = h.vertex_count() + h.edge_count(); // all-distinct always works
        std::optional<TotalColoring> witness;
        int chi = -1;
        for (int palette = lb.value; palette <= ceiling; ++palette) {
            ProbeResult probe = exists_coloring(h, r, palette, budget, opts);
            result.outcomes.push_back({palette, probe.status, probe.nodes});
            result.nodes += probe.nodes;
            if (probe.status == ProbeStatus::timed_out) {
                result.status = SolveStatus::timed_out;
                result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
                return result;
            }
            if (probe.status == ProbeStatus::found) {
                chi = palette;
                witness = std::move(probe.witness);
                break;
            }
        }
        require(chi != -1, errc::invalid_input, "search ceiling exceeded"); // unreachable
        best = std::max(best, chi);
        for (int lu = 0; lu < h.vertex_count(); ++lu)
            merged.vertex_colors[comp.to_parent[lu]] = witness->vertex_colors[lu];
        for (int le = 0; le < h.edge_count(); ++le) {
            auto [lu, lv] = h.endpoints(le);
            auto pe = g.edge_between(comp.to_parent[lu], comp.to_parent[lv]);
            merged.edge_colors[*pe] = witness->edge_colors[le];
        }
    }

    merged.palette_size = best;
    result.chromatic_number = best;
    result.witness = std::move(merged);
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

} // namespace vsdt
