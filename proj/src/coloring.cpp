#include "itc/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace itc {

namespace {

void require_shape(const Graph& g, const TotalColoring& c) {
    if (c.t < 0) throw std::invalid_argument("coloring: t must be nonnegative");
    if (static_cast<int>(c.vertex_colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring: vertex_colors length != vertex count");
    if (static_cast<int>(c.edge_colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring: edge_colors length != edge count");
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(xs[i]);
    }
    return s;
}

}  // namespace

std::vector<int> palette(const Graph& g, const TotalColoring& c, int v) {
    require_shape(g, c);
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("palette: vertex index out of range");
    std::vector<int> colors{c.vertex_colors[v]};
    for (auto [w, e] : g.neighbors(v)) {
        (void)w;
        colors.push_back(c.edge_colors[e]);
    }
    std::sort(colors.begin(), colors.end());
    return colors;
}

PaletteReport palette_report(const Graph& g, const TotalColoring& c) {
    PaletteReport report;
    report.all_intervals = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        PaletteEntry entry;
        entry.vertex = v;
        entry.colors = palette(g, c, v);
        entry.is_interval = true;
        for (size_t i = 1; i < entry.colors.size(); ++i)
            if (entry.colors[i] != entry.colors[i - 1] + 1) entry.is_interval = false;
        if (!entry.is_interval) report.all_intervals = false;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string clause_name(Clause c) {
    switch (c) {
        case Clause::proper_vertex: return "proper-vertex";
        case Clause::proper_edge: return "proper-edge";
        case Clause::incidence: return "incidence";
        case Clause::palette_interval: return "palette-interval";
        case Clause::color_unused: return "color-unused";
        case Clause::color_out_of_range: return "color-out-of-range";
    }
    return "?";
}

namespace {

void check_proper_clauses(const Graph& g, const TotalColoring& c, std::vector<Failure>& out) {
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (c.vertex_colors[u] == c.vertex_colors[v])
            out.push_back({Clause::proper_vertex,
                           {u, v},
                           {},
                           {c.vertex_colors[u]},
                           "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                               " are adjacent and share color " + std::to_string(c.vertex_colors[u])});
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                int e1 = nbrs[i].second, e2 = nbrs[j].second;
                if (c.edge_colors[e1] == c.edge_colors[e2])
                    out.push_back({Clause::proper_edge,
                                   {v},
                                   {e1, e2},
                                   {c.edge_colors[e1]},
                                   "edges " + std::to_string(e1) + " and " + std::to_string(e2) +
                                       " meet at vertex " + std::to_string(v) + " and share color " +
                                       std::to_string(c.edge_colors[e1])});
            }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        for (int w : {u, v})
            if (c.vertex_colors[w] == c.edge_colors[e])
                out.push_back({Clause::incidence,
                               {w},
                               {e},
                               {c.edge_colors[e]},
                               "vertex " + std::to_string(w) + " and its incident edge " +
                                   std::to_string(e) + " share color " + std::to_string(c.edge_colors[e])});
    }
}

}  // namespace

VerifyOutcome verify_total_proper(const Graph& g, const TotalColoring& c) {
    require_shape(g, c);
    VerifyOutcome outcome;
    check_proper_clauses(g, c, outcome.failures);
    outcome.valid = outcome.failures.empty();
    return outcome;
}

VerifyOutcome verify_interval_total(const Graph& g, const TotalColoring& c) {
    require_shape(g, c);
    VerifyOutcome outcome;
    auto& out = outcome.failures;

    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.vertex_colors[v] < 1 || c.vertex_colors[v] > c.t)
            out.push_back({Clause::color_out_of_range,
                           {v},
                           {},
                           {c.vertex_colors[v]},
                           "vertex " + std::to_string(v) + " has color " +
                               std::to_string(c.vertex_colors[v]) + " outside 1.." + std::to_string(c.t)});
    for (int e = 0; e < g.edge_count(); ++e)
        if (c.edge_colors[e] < 1 || c.edge_colors[e] > c.t)
            out.push_back({Clause::color_out_of_range,
                           {},
                           {e},
                           {c.edge_colors[e]},
                           "edge " + std::to_string(e) + " has color " +
                               std::to_string(c.edge_colors[e]) + " outside 1.." + std::to_string(c.t)});

    check_proper_clauses(g, c, out);

    for (int v = 0; v < g.vertex_count(); ++v) {
        auto pal = palette(g, c, v);
        bool interval = true;
        for (size_t i = 1; i < pal.size(); ++i)
            if (pal[i] != pal[i - 1] + 1) interval = false;
        if (!interval)
            out.push_back({Clause::palette_interval,
                           {v},
                           {},
                           pal,
                           "palette of vertex " + std::to_string(v) + " is {" + join(pal) +
                               "}, not " + std::to_string(g.degree(v) + 1) + " consecutive colors"});
    }

    std::vector<char> used(static_cast<size_t>(c.t) + 1, 0);
    auto mark = [&](int color) {
        if (color >= 1 && color <= c.t) used[color] = 1;
    };
    for (int x : c.vertex_colors) mark(x);
    for (int x : c.edge_colors) mark(x);
    for (int color = 1; color <= c.t; ++color)
        if (!used[color])
            out.push_back({Clause::color_unused,
                           {},
                           {},
                           {color},
                           "color " + std::to_string(color) + " is used by no vertex or edge"});

    outcome.valid = out.empty();
    return outcome;
}

TotalColoring invert(const TotalColoring& c) {
    TotalColoring inv = c;
    for (int& x : inv.vertex_colors) x = c.t + 1 - x;
    for (int& x : inv.edge_colors) x = c.t + 1 - x;
    return inv;
}

bool check_continuity(const Graph& g, const TotalColoring& c) {
    require_shape(g, c);
    if (!structure_flags(g).connected)
        throw std::invalid_argument("check_continuity: graph must be connected");

    auto proper = verify_total_proper(g, c);
    for (const auto& f : proper.failures)
        throw std::invalid_argument("check_continuity: precondition violated: " + clause_name(f.clause) +
                                    ": " + f.message);
    auto pals = palette_report(g, c);
    for (const auto& entry : pals.entries)
        if (!entry.is_interval)
            throw std::invalid_argument(
                "check_continuity: precondition violated: palette-interval: palette of vertex " +
                std::to_string(entry.vertex) + " is {" + join(entry.colors) + "}");

    int lo = c.vertex_colors.empty() ? 0 : c.vertex_colors[0], hi = lo;
    for (int x : c.vertex_colors) lo = std::min(lo, x), hi = std::max(hi, x);
    for (int x : c.edge_colors) lo = std::min(lo, x), hi = std::max(hi, x);
    if (lo != 1)
        throw std::invalid_argument("check_continuity: precondition violated: least color is " +
                                    std::to_string(lo) + ", expected 1");
    if (hi != c.t)
        throw std::invalid_argument("check_continuity: precondition violated: greatest color is " +
                                    std::to_string(hi) + ", expected t = " + std::to_string(c.t));

    std::vector<char> used(static_cast<size_t>(c.t) + 1, 0);
    for (int x : c.vertex_colors) used[x] = 1;
    for (int x : c.edge_colors) used[x] = 1;
    for (int color = 1; color <= c.t; ++color)
        if (!used[color]) return false;
    return true;
}

}  // namespace itc
