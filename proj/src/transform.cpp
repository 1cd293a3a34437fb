#include "itc/transform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace itc {

AuxiliaryGraph build_auxiliary(const Graph& g) {
    int n = g.vertex_count();
    AuxiliaryGraph aux;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, n + i});
        aux.origin.push_back(DiagonalEdge{i});
    }
    for (auto [i, j] : g.edges()) {
        edges.push_back({i, n + j});
        aux.origin.push_back(MirrorEdge{i, j});
        edges.push_back({j, n + i});
        aux.origin.push_back(MirrorEdge{j, i});
    }
    aux.h = Graph::from_edges(2 * n, std::move(edges));
    aux.part.assign(2 * n, 0);
    for (int v = n; v < 2 * n; ++v) aux.part[v] = 1;
    return aux;
}

EdgeColoring lift_coloring(const AuxiliaryGraph& aux, const TotalColoring& c) {
    int n = aux.h.vertex_count() / 2;
    if (static_cast<int>(c.vertex_colors.size()) != n)
        throw std::invalid_argument("lift_coloring: coloring does not fit the base graph");
    if (static_cast<int>(c.edge_colors.size()) != (aux.h.edge_count() - n) / 2)
        throw std::invalid_argument("lift_coloring: coloring does not fit the base graph");
    EdgeColoring lifted;
    lifted.t = c.t;
    lifted.colors.resize(aux.h.edge_count());
    int g_edge = 0;
    for (int e = 0; e < aux.h.edge_count(); ++e) {
        if (std::holds_alternative<DiagonalEdge>(aux.origin[e])) {
            lifted.colors[e] = c.vertex_colors[std::get<DiagonalEdge>(aux.origin[e]).vertex];
        } else {
            // Mirror pairs are adjacent in the edge list, in G-edge order.
            lifted.colors[e] = c.edge_colors[g_edge / 2];
            ++g_edge;
        }
    }
    return lifted;
}

VerifyOutcome verify_interval_edge(const Graph& g, const EdgeColoring& c) {
    if (c.t < 0) throw std::invalid_argument("verify_interval_edge: t must be nonnegative");
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw std::invalid_argument("verify_interval_edge: colors length != edge count");
    VerifyOutcome outcome;
    auto& out = outcome.failures;

    for (int e = 0; e < g.edge_count(); ++e)
        if (c.colors[e] < 1 || c.colors[e] > c.t)
            out.push_back({Clause::color_out_of_range,
                           {},
                           {e},
                           {c.colors[e]},
                           "edge " + std::to_string(e) + " has color " + std::to_string(c.colors[e]) +
                               " outside 1.." + std::to_string(c.t)});

    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                int e1 = nbrs[i].second, e2 = nbrs[j].second;
                if (c.colors[e1] == c.colors[e2])
                    out.push_back({Clause::proper_edge,
                                   {v},
                                   {e1, e2},
                                   {c.colors[e1]},
                                   "edges " + std::to_string(e1) + " and " + std::to_string(e2) +
                                       " meet at vertex " + std::to_string(v) + " and share color " +
                                       std::to_string(c.colors[e1])});
            }
    }

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        std::vector<int> around;
        for (auto [w, e] : g.neighbors(v)) {
            (void)w;
            around.push_back(c.colors[e]);
        }
        std::sort(around.begin(), around.end());
        bool interval = true;
        for (size_t i = 1; i < around.size(); ++i)
            if (around[i] != around[i - 1] + 1) interval = false;
        if (!interval) {
            std::string list;
            for (size_t i = 0; i < around.size(); ++i)
                list += (i ? "," : "") + std::to_string(around[i]);
            out.push_back({Clause::palette_interval,
                           {v},
                           {},
                           around,
                           "colors at vertex " + std::to_string(v) + " are {" + list + "}, not " +
                               std::to_string(g.degree(v)) + " consecutive colors"});
        }
    }

    std::vector<char> used(static_cast<size_t>(c.t) + 1, 0);
    for (int x : c.colors)
        if (x >= 1 && x <= c.t) used[x] = 1;
    for (int color = 1; color <= c.t; ++color)
        if (!used[color])
            out.push_back({Clause::color_unused,
                           {},
                           {},
                           {color},
                           "color " + std::to_string(color) + " is used by no edge"});

    outcome.valid = out.empty();
    return outcome;
}

TotalColoring project_to_total(const AuxiliaryGraph& aux, const EdgeColoring& c) {
    int n = aux.h.vertex_count() / 2;
    if (static_cast<int>(c.colors.size()) != aux.h.edge_count())
        throw std::invalid_argument("project_to_total: colors length != auxiliary edge count");
    TotalColoring total;
    total.t = c.t;
    total.vertex_colors.resize(n);
    total.edge_colors.resize((aux.h.edge_count() - n) / 2);
    int g_edge = 0;
    for (int e = 0; e < aux.h.edge_count(); ++e) {
        if (std::holds_alternative<DiagonalEdge>(aux.origin[e])) {
            total.vertex_colors[std::get<DiagonalEdge>(aux.origin[e]).vertex] = c.colors[e];
        } else {
            if (g_edge % 2 == 1 && c.colors[e] != c.colors[e - 1]) {
                auto m = std::get<MirrorEdge>(aux.origin[e]);
                throw std::invalid_argument("project_to_total: mirror pair for base edge {" +
                                            std::to_string(m.j) + "," + std::to_string(m.i) +
                                            "} is colored asymmetrically (" +
                                            std::to_string(c.colors[e - 1]) + " vs " +
                                            std::to_string(c.colors[e]) + ")");
            }
            total.edge_colors[g_edge / 2] = c.colors[e];
            ++g_edge;
        }
    }
    return total;
}

}  // namespace itc
