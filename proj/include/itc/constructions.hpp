#pragma once

#include <optional>
#include <string>

#include "itc/coloring.hpp"
#include "itc/graph.hpp"

namespace itc {

// Every function returns a coloring for the canonical labeling produced by
// generate() for the same family and size. Preconditions are checked and
// violations raise std::invalid_argument naming the offending parameter.

// Cycles: fewest colors (3 when 3 divides n, else 4) and most colors (n+2).
TotalColoring color_cycle_min(int n);
TotalColoring color_cycle_max(int n);

// Complete graphs: most colors (2n-1), fewest colors for even n (3n/2),
// and any t in the feasible range (odd n: n..2n-1, even n: 3n/2..2n-1).
TotalColoring color_complete_max(int n);
TotalColoring color_complete_even_min(int n);
TotalColoring color_complete_spectrum(int n, int t);

// Proper edge coloring of a connected r-regular bipartite graph with colors
// 1..r, by extracting r perfect matchings. Deterministic.
std::vector<int> proper_edge_color_regular_bipartite(const Graph& g);

// Connected r-regular bipartite graph, t = r+2: edges get 2..r+1, one side
// gets 1, the other r+2.
TotalColoring color_regular_bipartite(const Graph& g);

// Tree, t = max_degree+2 (t = 1 for a single vertex). Iterative leaf
// extension; handles large trees without deep recursion.
TotalColoring color_tree(const Graph& g);

// K_{m,n} with t = m+n+1.
TotalColoring color_complete_bipartite(int m, int n);

// Wheel on n >= 4 vertices for any feasible t:
//   n = 4: t in {6, 7}; 5 <= n <= 8: t in {n..n+3}; n >= 9: t in {n..n+4}.
TotalColoring color_wheel(int n, int t);

// Feasible wheel t range as [least, greatest].
std::pair<int, int> wheel_t_range(int n);

namespace detail {
// The individual wheel formulas behind color_wheel, named by t - n and
// exposed for direct testing. plus0/1/2 need n >= 5; plus3 also accepts
// n = 4; plus4 needs n >= 9.
TotalColoring wheel_plus0(int n);
TotalColoring wheel_plus1(int n);
TotalColoring wheel_plus2(int n);
TotalColoring wheel_plus3(int n);
TotalColoring wheel_plus4(int n);
}  // namespace detail

// Family dispatch used by the CLI: builds the graph and a matching
// certificate. When t is absent, families whose construction fixes t
// (trees, complete bipartite, regular bipartite) use that t; otherwise an
// error explains which t values are covered.
struct Construction {
    Graph graph;
    TotalColoring coloring;
    std::string method;  // which construction produced it
};

Construction build_certificate(const FamilySpec& spec, std::optional<int> t);

}  // namespace itc
