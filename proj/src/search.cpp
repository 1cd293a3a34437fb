#include "itc/search.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <set>
#include <stdexcept>

#include "itc/bounds.hpp"

namespace itc {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::feasible: return "feasible";
        case Verdict::infeasible: return "infeasible";
        case Verdict::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

// Elements are vertices (ids 0..n-1) then edges (ids n..n+m-1), assigned in
// breadth-first order with each vertex immediately followed by its not yet
// listed incident edges. Keeping a vertex next to its star makes the
// palette windows tighten early.
std::vector<int> element_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(n + g.edge_count());
    std::vector<char> v_seen(n, 0), e_seen(g.edge_count(), 0);
    for (int root = 0; root < n; ++root) {
        if (v_seen[root]) continue;
        v_seen[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (auto [w, e] : g.neighbors(v)) {
                (void)w;
                if (!e_seen[e]) {
                    e_seen[e] = 1;
                    order.push_back(n + e);
                }
            }
            for (auto [w, e] : g.neighbors(v)) {
                (void)e;
                if (!v_seen[w]) {
                    v_seen[w] = 1;
                    q.push(w);
                }
            }
        }
    }
    return order;
}

struct Searcher {
    const Graph& g;
    int t;
    const SearchConfig& cfg;
    const std::vector<int>& order;
    std::atomic<bool>* stop;  // set by another branch once a witness exists

    std::vector<int> color;  // per element id, 0 = unassigned
    std::vector<std::uint64_t> star_mask;
    std::vector<int> star_min, star_max, star_left;
    std::vector<int> used_count;
    int distinct_used = 0;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;  // this branch's share, 0 = unlimited
    bool budget_hit = false;

    Searcher(const Graph& g_, int t_, const SearchConfig& cfg_, const std::vector<int>& order_,
             std::atomic<bool>* stop_)
        : g(g_), t(t_), cfg(cfg_), order(order_), stop(stop_) {
        int n = g.vertex_count();
        color.assign(n + g.edge_count(), 0);
        star_mask.assign(n, 0);
        star_min.assign(n, 0);
        star_max.assign(n, 0);
        star_left.assign(n, 0);
        for (int v = 0; v < n; ++v) star_left[v] = g.degree(v) + 1;
        used_count.assign(t + 1, 0);
    }

    // The star of v must end up exactly deg(v)+1 consecutive colors. While
    // it is partial, some window [x, x+deg] inside [1, t] has to contain
    // everything placed so far.
    bool star_ok(int v, int lo, int hi, bool completing) const {
        int deg = g.degree(v);
        if (completing) return hi - lo == deg;
        if (!cfg.palette_prune) return true;
        return std::max(1, hi - deg) <= std::min(lo, t - deg);
    }

    bool try_assign(int elem, int c) {
        int n = g.vertex_count();
        int stars[2];
        int star_count = 0;
        if (elem < n) {
            for (auto [w, e] : g.neighbors(elem)) {
                (void)e;
                if (color[w] == c) return false;
            }
            stars[star_count++] = elem;
        } else {
            auto [a, b] = g.edge(elem - n);
            stars[star_count++] = a;
            stars[star_count++] = b;
        }
        for (int i = 0; i < star_count; ++i) {
            int s = stars[i];
            if (star_mask[s] & (1ull << (c - 1))) return false;
            int lo = star_mask[s] ? std::min(star_min[s], c) : c;
            int hi = star_mask[s] ? std::max(star_max[s], c) : c;
            if (!star_ok(s, lo, hi, star_left[s] == 1)) return false;
        }
        for (int i = 0; i < star_count; ++i) {
            int s = stars[i];
            star_mask[s] |= 1ull << (c - 1);
            star_min[s] = star_mask[s] == (1ull << (c - 1)) ? c : std::min(star_min[s], c);
            star_max[s] = std::max(star_max[s], c);
            --star_left[s];
        }
        color[elem] = c;
        if (++used_count[c] == 1) ++distinct_used;
        return true;
    }

    void unassign(int elem, int c, int saved_min0, int saved_max0, int saved_min1, int saved_max1) {
        int n = g.vertex_count();
        int stars[2];
        int star_count = 0;
        if (elem < n) {
            stars[star_count++] = elem;
        } else {
            auto [a, b] = g.edge(elem - n);
            stars[star_count++] = a;
            stars[star_count++] = b;
        }
        for (int i = 0; i < star_count; ++i) {
            int s = stars[i];
            star_mask[s] &= ~(1ull << (c - 1));
            star_min[s] = i == 0 ? saved_min0 : saved_min1;
            star_max[s] = i == 0 ? saved_max0 : saved_max1;
            ++star_left[s];
        }
        color[elem] = 0;
        if (--used_count[c] == 0) --distinct_used;
    }

    bool dfs(size_t pos) {
        if (stop && stop->load(std::memory_order_relaxed)) return false;
        if (pos == order.size()) return distinct_used == t;
        int elem = order[pos];
        for (int c = 1; c <= t; ++c) {
            if (budget && nodes >= budget) {
                budget_hit = true;
                return false;
            }
            ++nodes;
            int sm0 = 0, sM0 = 0, sm1 = 0, sM1 = 0;
            save_spans(elem, sm0, sM0, sm1, sM1);
            if (!try_assign(elem, c)) continue;
            bool pruned = false;
            if (cfg.surjectivity_prune) {
                int unused = t - distinct_used;
                int remaining = static_cast<int>(order.size() - pos - 1);
                if (unused > remaining) pruned = true;
            }
            if (!pruned && dfs(pos + 1)) return true;
            unassign(elem, c, sm0, sM0, sm1, sM1);
            if (budget_hit || (stop && stop->load(std::memory_order_relaxed))) return false;
        }
        return false;
    }

    void save_spans(int elem, int& sm0, int& sM0, int& sm1, int& sM1) const {
        int n = g.vertex_count();
        if (elem < n) {
            sm0 = star_min[elem];
            sM0 = star_max[elem];
        } else {
            auto [a, b] = g.edge(elem - n);
            sm0 = star_min[a];
            sM0 = star_max[a];
            sm1 = star_min[b];
            sM1 = star_max[b];
        }
    }

    TotalColoring extract() const {
        TotalColoring c;
        c.t = t;
        int n = g.vertex_count();
        c.vertex_colors.assign(color.begin(), color.begin() + n);
        c.edge_colors.assign(color.begin() + n, color.end());
        return c;
    }
};

}  // namespace

std::pair<int, int> default_t_window(const Graph& g) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("default_t_window: graph needs at least one vertex");
    int lo = g.max_degree() + 1;
    long long hi = g.vertex_count() + g.edge_count();
    for (const auto& b : bound_report(g))
        if (b.applicable && b.kind == "upper" && b.target == "W_tau") hi = std::min(hi, b.value);
    return {lo, static_cast<int>(hi)};
}

SearchOutcome exists_coloring(const Graph& g, int t, const SearchConfig& cfg) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("exists_coloring: graph needs at least one vertex");
    if (t > 64) throw std::invalid_argument("exists_coloring: t larger than 64 is not supported");
    SearchOutcome outcome;
    if (t < 1) {
        outcome.verdict = Verdict::infeasible;
        return outcome;
    }

    auto order = element_order(g);
    int first = order[0];
    int first_max = cfg.symmetry_break ? (t + 1) / 2 : t;
    std::uint64_t per_branch = cfg.node_budget ? std::max<std::uint64_t>(1, cfg.node_budget / first_max) : 0;

    std::atomic<bool> found{false};
    std::atomic<bool> any_budget_hit{false};
    std::atomic<std::uint64_t> total_nodes{0};
    TotalColoring witness;

    int jobs = std::max(1, cfg.jobs);
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 1) if (jobs > 1)
    for (int c = 1; c <= first_max; ++c) {
        if (found.load(std::memory_order_relaxed)) continue;
        Searcher s(g, t, cfg, order, &found);
        s.budget = per_branch;
        s.nodes = 1;
        if (s.try_assign(first, c) && s.dfs(1)) {
            bool expected = false;
            if (found.compare_exchange_strong(expected, true)) {
#pragma omp critical(itc_search_witness)
                witness = s.extract();
            }
        }
        if (s.budget_hit) any_budget_hit.store(true, std::memory_order_relaxed);
        total_nodes.fetch_add(s.nodes, std::memory_order_relaxed);
    }

    outcome.nodes = total_nodes.load();
    if (found.load()) {
        outcome.verdict = Verdict::feasible;
        outcome.witness = std::move(witness);
        // Exhaustive search should never hand back an invalid witness; keep
        // the net anyway since callers treat this as a certificate.
        if (!verify_interval_total(g, *outcome.witness).valid)
            throw std::logic_error("exists_coloring: internal error, witness failed verification");
    } else if (any_budget_hit.load()) {
        outcome.verdict = Verdict::budget_exhausted;
    } else {
        outcome.verdict = Verdict::infeasible;
    }
    return outcome;
}

SpectrumResult compute_spectrum(const Graph& g, const SearchConfig& cfg) {
    auto [def_lo, def_hi] = default_t_window(g);
    SpectrumResult result;
    result.t_lo = cfg.t_min > 0 ? cfg.t_min : def_lo;
    result.t_hi = cfg.t_max > 0 ? cfg.t_max : def_hi;
    if (result.t_hi < result.t_lo)
        throw std::invalid_argument("compute_spectrum: empty t window");

    bool clean_below = true;  // no feasible/budget surprises so far, scanning upward
    std::optional<int> least, greatest;
    bool budget_above_greatest = false;
    for (int t = result.t_lo; t <= result.t_hi; ++t) {
        auto one = exists_coloring(g, t, cfg);
        SpectrumEntry entry;
        entry.t = t;
        entry.verdict = one.verdict;
        entry.witness = std::move(one.witness);
        if (entry.verdict == Verdict::feasible) {
            if (clean_below && !least) least = t;
            greatest = t;
            budget_above_greatest = false;
        } else if (entry.verdict == Verdict::budget_exhausted) {
            clean_below = false;
            budget_above_greatest = true;
        }
        result.entries.push_back(std::move(entry));
    }

    // least_t is proven only if the window floor itself is a proven floor;
    // greatest_t only if the ceiling is a proven upper bound.
    if (least && result.t_lo <= def_lo) result.least_t = least;
    if (greatest && result.t_hi >= def_hi && !budget_above_greatest) result.greatest_t = greatest;
    return result;
}

bool brute_force_verifier_oracle(const Graph& g, const TotalColoring& c) {
    if (static_cast<int>(c.vertex_colors.size()) != g.vertex_count()) return false;
    if (static_cast<int>(c.edge_colors.size()) != g.edge_count()) return false;
    if (c.t < 1 && (g.vertex_count() > 0 || g.edge_count() > 0)) return false;

    for (int x : c.vertex_colors)
        if (x < 1 || x > c.t) return false;
    for (int x : c.edge_colors)
        if (x < 1 || x > c.t) return false;

    for (auto [u, v] : g.edges())
        if (c.vertex_colors[u] == c.vertex_colors[v]) return false;

    int m = g.edge_count();
    for (int e1 = 0; e1 < m; ++e1)
        for (int e2 = e1 + 1; e2 < m; ++e2) {
            auto [a, b] = g.edges()[e1];
            auto [x, y] = g.edges()[e2];
            bool adjacent = a == x || a == y || b == x || b == y;
            if (adjacent && c.edge_colors[e1] == c.edge_colors[e2]) return false;
        }

    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[e];
        if (c.vertex_colors[u] == c.edge_colors[e]) return false;
        if (c.vertex_colors[v] == c.edge_colors[e]) return false;
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        std::set<int> pal{c.vertex_colors[v]};
        int deg = 0;
        for (int e = 0; e < m; ++e) {
            auto [a, b] = g.edges()[e];
            if (a == v || b == v) {
                pal.insert(c.edge_colors[e]);
                ++deg;
            }
        }
        if (static_cast<int>(pal.size()) != deg + 1) return false;
        if (*pal.rbegin() - *pal.begin() != deg) return false;
    }

    std::set<int> all;
    for (int x : c.vertex_colors) all.insert(x);
    for (int x : c.edge_colors) all.insert(x);
    for (int color = 1; color <= c.t; ++color)
        if (!all.count(color)) return false;
    return true;
}

}  // namespace itc
