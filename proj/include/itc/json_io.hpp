#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "itc/bounds.hpp"
#include "itc/coloring.hpp"
#include "itc/graph.hpp"
#include "itc/search.hpp"
#include "itc/transform.hpp"

namespace itc {

// Graph: {"n": int, "edges": [[u, v], ...]}, 0-based indices.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Certificate: {"graph": ..., "t": int, "vertex_colors": [...], "edge_colors": [...]}.
nlohmann::json certificate_to_json(const Graph& g, const TotalColoring& c);
std::pair<Graph, TotalColoring> certificate_from_json(const nlohmann::json& j);

nlohmann::json verify_outcome_to_json(const VerifyOutcome& outcome);

// Bounds: [{"name", "kind", "target", "value", "applicable", "ref"}, ...].
nlohmann::json bound_report_to_json(const BoundReport& report);

// Spectrum: {"graph": ..., "t_range": [lo, hi], "verdicts": [{"t", "status",
// "certificate"?}], "w_tau"?, "W_tau"?}.
nlohmann::json spectrum_to_json(const Graph& g, const SpectrumResult& result);

// Doubled bipartite graph: {"graph": ..., "parts": [...], "provenance":
// [{"diag": i} | {"mirror": [i, j]}, ...]}, plus the lifted edge coloring
// when one is supplied.
nlohmann::json auxiliary_to_json(const AuxiliaryGraph& aux, const EdgeColoring* lifted = nullptr);

struct DotOptions {
    bool hub_is_u = false;  // label vertex 0 "u" (wheel convention)
    const TotalColoring* coloring = nullptr;
};

std::string to_dot(const Graph& g, const DotOptions& opts = {});

}  // namespace itc
