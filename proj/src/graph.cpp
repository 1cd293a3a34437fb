#include "itc/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace itc {

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 0)
        throw std::invalid_argument("graph: vertex count must be nonnegative");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("graph: self-loops are not allowed");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("graph: duplicate edge");
    }
    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_ = std::move(edges);
    g.adjacency_.assign(vertex_count, {});
    for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
        auto [u, v] = g.edges_[e];
        g.adjacency_[u].push_back({v, e});
        g.adjacency_[v].push_back({u, e});
    }
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < vertex_count_; ++v) d = std::max(d, degree(v));
    return d;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::wheel: return "wheel";
        case Family::tree_random: return "tree_random";
        case Family::regular_bipartite_named: return "regular_bipartite_named";
    }
    throw std::invalid_argument("graph: unknown family");
}

Family family_from_name(const std::string& s) {
    for (Family f : {Family::path, Family::cycle, Family::complete, Family::complete_bipartite,
                     Family::wheel, Family::tree_random, Family::regular_bipartite_named})
        if (family_name(f) == s) return f;
    throw std::invalid_argument("graph: unknown family name '" + s + "'");
}

namespace {

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("graph: path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("graph: cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph::from_edges(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("graph: complete needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::from_edges(n, std::move(edges));
}

Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("graph: complete_bipartite needs m, n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
    return Graph::from_edges(m + n, std::move(edges));
}

Graph make_wheel(int n) {
    if (n < 4) throw std::invalid_argument("graph: wheel needs n >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    for (int i = 1; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({1, n - 1});
    return Graph::from_edges(n, std::move(edges));
}

// Uniform labeled tree via Pruefer decoding of n-2 seeded draws.
Graph make_tree_random(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("graph: tree_random needs n >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    // splitmix64 keeps the sequence identical across standard libraries.
    auto next = [state = seed]() mutable {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = static_cast<int>(next() % static_cast<std::uint64_t>(n));
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    std::vector<std::pair<int, int>> edges;
    for (int x : pruefer) {
        int leaf = leaves.top();
        leaves.pop();
        edges.push_back({std::min(leaf, x), std::max(leaf, x)});
        if (--deg[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.push_back({std::min(a, b), std::max(a, b)});
    return Graph::from_edges(n, std::move(edges));
}

Graph make_cube() {
    // Q3: vertices are 3-bit strings, edges flip one bit.
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 8; ++v)
        for (int bit : {1, 2, 4})
            if (v < (v ^ bit)) edges.push_back({v, v ^ bit});
    return Graph::from_edges(8, std::move(edges));
}

}  // namespace

std::vector<std::string> regular_bipartite_instance_names() {
    return {"k22", "k33", "k44", "cube", "c4", "c6", "c8"};
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return make_path(spec.n);
        case Family::cycle: return make_cycle(spec.n);
        case Family::complete: return make_complete(spec.n);
        case Family::complete_bipartite: return make_complete_bipartite(spec.m, spec.n);
        case Family::wheel: return make_wheel(spec.n);
        case Family::tree_random: return make_tree_random(spec.n, spec.seed);
        case Family::regular_bipartite_named: {
            const std::string& name = spec.name;
            if (name == "k22") return make_complete_bipartite(2, 2);
            if (name == "k33") return make_complete_bipartite(3, 3);
            if (name == "k44") return make_complete_bipartite(4, 4);
            if (name == "cube") return make_cube();
            if (name == "c4") return make_cycle(4);
            if (name == "c6") return make_cycle(6);
            if (name == "c8") return make_cycle(8);
            throw std::invalid_argument("graph: unknown regular bipartite instance '" + name + "'");
        }
    }
    throw std::invalid_argument("graph: unknown family");
}

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [w, e] : g.neighbors(v)) {
            (void)e;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

StructureFlags structure_flags(const Graph& g) {
    StructureFlags flags;
    int n = g.vertex_count();
    if (n == 0) {
        flags.connected = true;
        flags.bipartite = true;
        return flags;
    }

    std::vector<int> side(n, -1);
    flags.connected = true;
    flags.bipartite = true;
    for (int start = 0; start < n; ++start) {
        if (side[start] >= 0) continue;
        if (start > 0) flags.connected = false;
        side[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, e] : g.neighbors(v)) {
                (void)e;
                if (side[w] < 0) {
                    side[w] = side[v] ^ 1;
                    q.push(w);
                } else if (side[w] == side[v]) {
                    flags.bipartite = false;
                }
            }
        }
    }

    bool regular = true;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != g.degree(0)) regular = false;
    if (regular) flags.regular_degree = g.degree(0);

    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) flags.universal_vertices.push_back(v);
    return flags;
}

int diameter(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("diameter: empty graph");
    int best = 0;
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) throw std::invalid_argument("diameter: graph is disconnected");
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

int max_shortest_path_degree_sum(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("max_shortest_path_degree_sum: empty graph");
    int best = 0;
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        // best_sum[v]: heaviest shortest s-v path, filled in distance order.
        std::vector<int> best_sum(n, -1);
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
        for (int v : order) {
            if (dist[v] < 0) throw std::invalid_argument("max_shortest_path_degree_sum: graph is disconnected");
            if (v == s) {
                best_sum[v] = g.degree(v);
            } else {
                for (auto [w, e] : g.neighbors(v)) {
                    (void)e;
                    if (dist[w] == dist[v] - 1 && best_sum[w] >= 0)
                        best_sum[v] = std::max(best_sum[v], best_sum[w] + g.degree(v));
                }
            }
            best = std::max(best, best_sum[v]);
        }
    }
    return best;
}

}  // namespace itc
