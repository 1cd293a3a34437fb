#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace itc {

// Simple undirected graph with stable edge indices. Vertices are 0-based;
// edges are stored as (u, v) with u < v in the order they were supplied,
// and that order is part of the public contract (colorings index into it).
class Graph {
public:
    Graph() = default;

    // Validates: indices in range, no self-loops, no duplicate edges.
    // Throws std::invalid_argument otherwise.
    static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(int e) const { return edges_[e]; }

    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;

    // (neighbor, edge index) pairs in edge-insertion order.
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adjacency_[v]; }

private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    wheel,
    tree_random,
    regular_bipartite_named,
};

// Size parameters: n for path/cycle/complete/wheel/tree_random, (m, n) for
// complete_bipartite, seed for tree_random, name for regular_bipartite_named.
struct FamilySpec {
    Family family = Family::path;
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    std::string name;
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Canonical labelings:
//   path: v_i v_{i+1};  cycle: v_i v_{i+1} then the closing edge v_1 v_n;
//   complete: pairs (i, j), i < j, lexicographic;
//   complete_bipartite: all u_i before all v_j, edges u_i v_j lexicographic;
//   wheel on n vertices: hub at index 0, spokes first, rim edges second,
//   closing rim edge v_1 v_{n-1} last;
//   tree_random: uniform labeled tree decoded from a seeded random sequence;
//   regular_bipartite_named: see regular_bipartite_instance_names().
Graph generate(const FamilySpec& spec);

// Built-in r-regular bipartite graphs addressable by name: "k22", "k33",
// "k44", "cube", "c4", "c6", "c8".
std::vector<std::string> regular_bipartite_instance_names();

struct StructureFlags {
    bool connected = false;
    bool bipartite = false;
    std::optional<int> regular_degree;
    std::vector<int> universal_vertices;
};

StructureFlags structure_flags(const Graph& g);

// Length (in edges) of a longest shortest path. Throws on disconnected input.
int diameter(const Graph& g);

// max over ordered vertex pairs (x, y) and shortest x-y paths P of
// sum of deg(v) over v in P. A single vertex counts as a path, so the
// result is at least the maximum degree; one vertex with no edges gives 0.
// Throws on disconnected input.
int max_shortest_path_degree_sum(const Graph& g);

}  // namespace itc
