#pragma once

#include <string>
#include <vector>

#include "itc/graph.hpp"

namespace itc {

// Total coloring candidate: colors in 1..t, vertex_colors[v] for vertex v,
// edge_colors[e] for edge index e. Not validated on construction; the
// verifiers below decide whether it is proper / interval / surjective.
struct TotalColoring {
    int t = 0;
    std::vector<int> vertex_colors;
    std::vector<int> edge_colors;
};

// The palette of v: its own color plus the colors of its incident edges,
// sorted ascending with duplicates kept (duplicates mean the coloring is
// broken and the report says so).
std::vector<int> palette(const Graph& g, const TotalColoring& c, int v);

struct PaletteEntry {
    int vertex = 0;
    std::vector<int> colors;
    bool is_interval = false;  // distinct, consecutive, and exactly degree+1 wide
};

struct PaletteReport {
    std::vector<PaletteEntry> entries;
    bool all_intervals = false;
};

PaletteReport palette_report(const Graph& g, const TotalColoring& c);

enum class Clause {
    proper_vertex,      // adjacent vertices share a color
    proper_edge,        // edges sharing an endpoint share a color
    incidence,          // a vertex shares its color with an incident edge
    palette_interval,   // some palette is not an interval of size degree+1
    color_unused,       // some color in 1..t colors nothing
    color_out_of_range, // some element's color is outside 1..t
};

std::string clause_name(Clause c);

struct Failure {
    Clause clause;
    std::vector<int> vertices;  // offending vertex indices, if any
    std::vector<int> edges;     // offending edge indices, if any
    std::vector<int> colors;    // the colors involved
    std::string message;
};

struct VerifyOutcome {
    bool valid = false;
    std::vector<Failure> failures;  // exhaustive, one entry per violation
};

// Full interval total coloring check: proper vertex/edge, incidence,
// palettes are intervals, every color 1..t used, colors in range.
// Throws std::invalid_argument only on shape mismatch (wrong array lengths
// or t < 0); any well-shaped coloring yields an outcome, never a crash.
VerifyOutcome verify_interval_total(const Graph& g, const TotalColoring& c);

// Proper total coloring check only (no palette or surjectivity clauses).
VerifyOutcome verify_total_proper(const Graph& g, const TotalColoring& c);

// x -> t+1-x on every element. An involution; preserves validity.
TotalColoring invert(const TotalColoring& c);

// For connected g and a coloring that is proper (vertex/edge/incidence),
// has all palettes intervals, and attains min color 1 and max color t:
// reports whether every color in 1..t is used. (It always is; this exists
// to check that claim empirically.) Violated preconditions raise
// std::invalid_argument naming the failed clause.
bool check_continuity(const Graph& g, const TotalColoring& c);

}  // namespace itc
