#pragma once

#include <variant>
#include <vector>

#include "itc/coloring.hpp"
#include "itc/graph.hpp"

namespace itc {

// Doubled bipartite graph H for a base graph G on n vertices:
//   vertices u_1..u_n (indices 0..n-1) and w_1..w_n (indices n..2n-1);
//   a diagonal edge u_i w_i for every vertex of G, and a mirror pair
//   u_i w_j, u_j w_i for every edge v_i v_j of G.
// Edge order: the n diagonals first (i ascending), then the mirror pairs in
// G-edge order, u_i w_j before u_j w_i for i < j. Every H-degree is the
// corresponding G-degree plus one.
struct DiagonalEdge {
    int vertex;  // G vertex i behind u_i w_i
};
struct MirrorEdge {
    int i, j;  // H edge u_i w_j for G edge {v_i, v_j}, i < j on the first of the pair
};
using EdgeOrigin = std::variant<DiagonalEdge, MirrorEdge>;

struct AuxiliaryGraph {
    Graph h;
    std::vector<int> part;          // 0 for u_i, 1 for w_i
    std::vector<EdgeOrigin> origin;  // per H-edge, aligned with h.edges()
};

AuxiliaryGraph build_auxiliary(const Graph& g);

struct EdgeColoring {
    int t = 0;
    std::vector<int> colors;
};

// Total coloring of G -> edge coloring of H: both halves of a mirror pair
// get the G-edge's color, the diagonal gets the G-vertex's color.
EdgeColoring lift_coloring(const AuxiliaryGraph& aux, const TotalColoring& c);

// Interval edge coloring check: proper, each vertex's incident colors are
// deg-many consecutive integers, every color 1..t used, colors in range.
// Reuses the failure vocabulary of the total verifier (proper-edge,
// palette-interval, color-unused, color-out-of-range).
VerifyOutcome verify_interval_edge(const Graph& g, const EdgeColoring& c);

// Inverse direction, defined only for mirror-symmetric edge colorings of H
// (both halves of each mirror pair equal). Throws std::invalid_argument
// naming the asymmetric pair otherwise.
TotalColoring project_to_total(const AuxiliaryGraph& aux, const EdgeColoring& c);

}  // namespace itc
