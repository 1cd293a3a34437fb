#include "itc/json_io.hpp"

#include <stdexcept>

namespace itc {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: expected {\"n\": int, \"edges\": [[u,v],...]}");
    if (!j["n"].is_number_integer())
        throw std::invalid_argument("graph json: \"n\" must be an integer");
    if (!j["edges"].is_array())
        throw std::invalid_argument("graph json: \"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("graph json: each edge must be a pair of integers");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph::from_edges(j["n"].get<int>(), std::move(edges));
}

json certificate_to_json(const Graph& g, const TotalColoring& c) {
    json j;
    j["graph"] = graph_to_json(g);
    j["t"] = c.t;
    j["vertex_colors"] = c.vertex_colors;
    j["edge_colors"] = c.edge_colors;
    return j;
}

std::pair<Graph, TotalColoring> certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("t") || !j.contains("vertex_colors") ||
        !j.contains("edge_colors"))
        throw std::invalid_argument(
            "certificate json: expected {\"graph\", \"t\", \"vertex_colors\", \"edge_colors\"}");
    Graph g = graph_from_json(j["graph"]);
    TotalColoring c;
    if (!j["t"].is_number_integer())
        throw std::invalid_argument("certificate json: \"t\" must be an integer");
    c.t = j["t"].get<int>();
    auto read_colors = [&](const char* key, std::vector<int>& out) {
        if (!j[key].is_array())
            throw std::invalid_argument(std::string("certificate json: \"") + key + "\" must be an array");
        for (const auto& x : j[key]) {
            if (!x.is_number_integer())
                throw std::invalid_argument(std::string("certificate json: \"") + key +
                                            "\" must hold integers");
            out.push_back(x.get<int>());
        }
    };
    read_colors("vertex_colors", c.vertex_colors);
    read_colors("edge_colors", c.edge_colors);
    if (static_cast<int>(c.vertex_colors.size()) != g.vertex_count())
        throw std::invalid_argument("certificate json: vertex_colors length != n");
    if (static_cast<int>(c.edge_colors.size()) != g.edge_count())
        throw std::invalid_argument("certificate json: edge_colors length != edge count");
    return {std::move(g), std::move(c)};
}

json verify_outcome_to_json(const VerifyOutcome& outcome) {
    json j;
    j["valid"] = outcome.valid;
    j["failures"] = json::array();
    for (const auto& f : outcome.failures) {
        json fj;
        fj["clause"] = clause_name(f.clause);
        fj["vertices"] = f.vertices;
        fj["edges"] = f.edges;
        fj["colors"] = f.colors;
        fj["message"] = f.message;
        j["failures"].push_back(std::move(fj));
    }
    return j;
}

json bound_report_to_json(const BoundReport& report) {
    json j = json::array();
    for (const auto& b : report) {
        json bj;
        bj["name"] = b.name;
        bj["kind"] = b.kind;
        bj["target"] = b.target;
        bj["value"] = b.value;
        bj["applicable"] = b.applicable;
        bj["ref"] = b.ref;
        j.push_back(std::move(bj));
    }
    return j;
}

// JSON status strings are terser than verdict_name(): budget exhaustion is
// reported as "budget".
static std::string json_status(Verdict v) {
    return v == Verdict::budget_exhausted ? "budget" : verdict_name(v);
}

json spectrum_to_json(const Graph& g, const SpectrumResult& result) {
    json j;
    j["graph"] = graph_to_json(g);
    j["t_range"] = {result.t_lo, result.t_hi};
    j["verdicts"] = json::array();
    for (const auto& entry : result.entries) {
        json ej;
        ej["t"] = entry.t;
        ej["status"] = json_status(entry.verdict);
        if (entry.witness) ej["certificate"] = certificate_to_json(g, *entry.witness);
        j["verdicts"].push_back(std::move(ej));
    }
    if (result.least_t) j["w_tau"] = *result.least_t;
    if (result.greatest_t) j["W_tau"] = *result.greatest_t;
    return j;
}

json auxiliary_to_json(const AuxiliaryGraph& aux, const EdgeColoring* lifted) {
    json j;
    j["graph"] = graph_to_json(aux.h);
    j["parts"] = aux.part;
    j["provenance"] = json::array();
    for (const auto& origin : aux.origin) {
        if (std::holds_alternative<DiagonalEdge>(origin)) {
            j["provenance"].push_back({{"diag", std::get<DiagonalEdge>(origin).vertex}});
        } else {
            auto m = std::get<MirrorEdge>(origin);
            j["provenance"].push_back({{"mirror", {m.i, m.j}}});
        }
    }
    if (lifted) {
        j["t"] = lifted->t;
        j["edge_colors"] = lifted->colors;
    }
    return j;
}

std::string to_dot(const Graph& g, const DotOptions& opts) {
    auto node = [&](int v) {
        if (opts.hub_is_u && v == 0) return std::string("u");
        return "v" + std::to_string(opts.hub_is_u ? v : v + 1);
    };
    std::string out = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  " + node(v);
        if (opts.coloring)
            out += " [label=\"" + node(v) + " c=" + std::to_string(opts.coloring->vertex_colors[v]) + "\"]";
        out += ";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out += "  " + node(u) + " -- " + node(v);
        if (opts.coloring) out += " [label=\"" + std::to_string(opts.coloring->edge_colors[e]) + "\"]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace itc
