#include "itc/constructions.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace itc {

namespace {

// Complete-graph color formulas, 1-based vertex indices.
int kn_max_vertex(int i) { return 2 * i - 1; }
int kn_max_edge(int i, int j) { return i + j - 1; }

int kn_even_min_vertex(int n, int i) { return i <= n / 2 ? i : n / 2 + i; }

int kn_even_min_edge(int n, int i, int j) {
    int s = i + j;
    if (s % 2 == 1) return s - 1 <= n ? n / 2 + (s - 1) / 2 : (s - 1) / 2;
    return s <= n ? s / 2 : n / 2 + s / 2;
}

}  // namespace

TotalColoring color_cycle_min(int n) {
    if (n < 3) throw std::invalid_argument("color_cycle_min: cycle needs n >= 3");
    TotalColoring c;
    c.vertex_colors.resize(n);
    c.edge_colors.resize(n);
    if (n % 3 == 0) {
        c.t = 3;
        for (int i = 1; i <= n; ++i)
            c.vertex_colors[i - 1] = (i % 3 == 0) ? 2 : (i % 3 == 1) ? 1 : 3;
        for (int j = 1; j <= n - 1; ++j)
            c.edge_colors[j - 1] = (j % 3 == 0) ? 3 : (j % 3 == 1) ? 2 : 1;
        c.edge_colors[n - 1] = 3;
    } else if (n % 2 == 0) {
        c.t = 4;
        for (int i = 1; i <= n; ++i) c.vertex_colors[i - 1] = (i % 2 == 0) ? 4 : 1;
        for (int j = 1; j <= n - 1; ++j) c.edge_colors[j - 1] = (j % 2 == 0) ? 2 : 3;
        c.edge_colors[n - 1] = 2;
    } else {
        c.t = 4;
        for (int i = 1; i <= n; ++i) {
            if (i == n - 1)
                c.vertex_colors[i - 1] = 2;
            else if (i == n)
                c.vertex_colors[i - 1] = 3;
            else
                c.vertex_colors[i - 1] = (i % 2 == 0) ? 4 : 1;
        }
        for (int j = 1; j <= n - 1; ++j) {
            if (j == n - 1)
                c.edge_colors[j - 1] = 4;
            else
                c.edge_colors[j - 1] = (j % 2 == 0) ? 2 : 3;
        }
        c.edge_colors[n - 1] = 2;
    }
    return c;
}

TotalColoring color_cycle_max(int n) {
    if (n < 3) throw std::invalid_argument("color_cycle_max: cycle needs n >= 3");
    TotalColoring c;
    c.t = n + 2;
    c.vertex_colors.resize(n);
    c.edge_colors.resize(n);
    if (n % 2 == 0) {
        for (int i = 1; i <= n / 2; ++i) {
            c.vertex_colors[i - 1] = 2 * i - 1;
            c.edge_colors[i - 1] = 2 * i;
        }
        for (int j = n / 2 + 1; j <= n; ++j) c.vertex_colors[j - 1] = 2 * (n - j) + 4;
        for (int k = n / 2 + 1; k <= n - 1; ++k) c.edge_colors[k - 1] = 2 * (n - k) + 3;
    } else {
        int h = (n + 1) / 2;
        for (int i = 1; i <= h + 1; ++i) c.vertex_colors[i - 1] = 2 * i - 1;
        for (int j = h + 2; j <= n; ++j) c.vertex_colors[j - 1] = 2 * (n - j) + 4;
        for (int k = 1; k <= h; ++k) c.edge_colors[k - 1] = 2 * k;
        for (int l = h + 1; l <= n - 1; ++l) c.edge_colors[l - 1] = 2 * (n - l) + 3;
    }
    c.edge_colors[n - 1] = 3;
    return c;
}

TotalColoring color_complete_max(int n) {
    if (n < 1) throw std::invalid_argument("color_complete_max: complete needs n >= 1");
    TotalColoring c;
    c.t = 2 * n - 1;
    for (int i = 1; i <= n; ++i) c.vertex_colors.push_back(kn_max_vertex(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) c.edge_colors.push_back(kn_max_edge(i, j));
    return c;
}

TotalColoring color_complete_even_min(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("color_complete_even_min: needs even n >= 2");
    TotalColoring c;
    c.t = 3 * n / 2;
    for (int i = 1; i <= n; ++i) c.vertex_colors.push_back(kn_even_min_vertex(n, i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) c.edge_colors.push_back(kn_even_min_edge(n, i, j));
    return c;
}

TotalColoring color_complete_spectrum(int n, int t) {
    if (n < 1) throw std::invalid_argument("color_complete_spectrum: complete needs n >= 1");
    TotalColoring c;
    c.t = t;
    if (n % 2 == 1) {
        if (t < n || t > 2 * n - 1)
            throw std::invalid_argument("color_complete_spectrum: odd n covers t in " +
                                        std::to_string(n) + ".." + std::to_string(2 * n - 1));
        // Fold the top band of the widest coloring down by n.
        auto fold = [&](int x) { return x > t ? x - n : x; };
        for (int i = 1; i <= n; ++i) c.vertex_colors.push_back(fold(kn_max_vertex(i)));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) c.edge_colors.push_back(fold(kn_max_edge(i, j)));
        return c;
    }
    if (t < 3 * n / 2 || t > 2 * n - 1)
        throw std::invalid_argument("color_complete_spectrum: even n covers t in " +
                                    std::to_string(3 * n / 2) + ".." + std::to_string(2 * n - 1));
    // Shift bands of the narrowest coloring up by s, widening its span to t.
    int s = t - 3 * n / 2;
    for (int i = 1; i <= n; ++i) {
        int base = kn_even_min_vertex(n, i);
        c.vertex_colors.push_back(base + s <= 2 * i - 1 ? base + s : 2 * i - 1);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int x = i + j - 1;
            int base = kn_even_min_edge(n, i, j);
            int shifted = (i + j) % 2 == 0 ? base + s : base;
            if (x <= 2 * s + 1)
                c.edge_colors.push_back(x);
            else if (x < n)
                c.edge_colors.push_back(shifted);
            else if (x <= n + 2 * s + 1)
                c.edge_colors.push_back(x);
            else
                c.edge_colors.push_back(shifted);
        }
    return c;
}

namespace {

std::vector<int> bipartition_sides(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (side[start] >= 0) continue;
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
                }
            }
        }
    }
    return side;
}

}  // namespace

std::vector<int> proper_edge_color_regular_bipartite(const Graph& g) {
    auto flags = structure_flags(g);
    if (!flags.bipartite)
        throw std::invalid_argument("proper_edge_color_regular_bipartite: graph is not bipartite");
    if (!flags.regular_degree || *flags.regular_degree < 1)
        throw std::invalid_argument("proper_edge_color_regular_bipartite: graph is not regular with r >= 1");
    int r = *flags.regular_degree;

    auto side = bipartition_sides(g);
    std::vector<int> left;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (side[v] == 0) left.push_back(v);

    std::vector<char> remaining(g.edge_count(), 1);
    std::vector<int> colors(g.edge_count(), 0);
    std::vector<int> match_left(g.vertex_count(), -1);   // edge index matched at a left vertex
    std::vector<int> match_right(g.vertex_count(), -1);  // edge index matched at a right vertex

    auto other = [&](int e, int v) {
        auto [a, b] = g.edge(e);
        return a == v ? b : a;
    };

    for (int color = 1; color <= r; ++color) {
        std::fill(match_left.begin(), match_left.end(), -1);
        std::fill(match_right.begin(), match_right.end(), -1);
        std::vector<char> visited(g.vertex_count(), 0);
        // Lowest-index-first augmenting paths keep the result deterministic.
        std::function<bool(int)> augment = [&](int u) -> bool {
            for (auto [w, e] : g.neighbors(u)) {
                if (!remaining[e] || visited[w]) continue;
                visited[w] = 1;
                if (match_right[w] < 0 || augment(other(match_right[w], w))) {
                    match_right[w] = e;
                    match_left[u] = e;
                    return true;
                }
            }
            return false;
        };
        for (int u : left) {
            std::fill(visited.begin(), visited.end(), 0);
            if (!augment(u))
                throw std::invalid_argument(
                    "proper_edge_color_regular_bipartite: no perfect matching; graph is not regular bipartite");
        }
        for (int u : left) {
            colors[match_left[u]] = color;
            remaining[match_left[u]] = 0;
        }
    }
    return colors;
}

TotalColoring color_regular_bipartite(const Graph& g) {
    auto flags = structure_flags(g);
    if (!flags.connected)
        throw std::invalid_argument("color_regular_bipartite: graph must be connected");
    if (!flags.bipartite || !flags.regular_degree || *flags.regular_degree < 1)
        throw std::invalid_argument("color_regular_bipartite: graph must be r-regular bipartite, r >= 1");
    int r = *flags.regular_degree;

    TotalColoring c;
    c.t = r + 2;
    c.edge_colors = proper_edge_color_regular_bipartite(g);
    for (int& x : c.edge_colors) x += 1;  // edges occupy 2..r+1
    auto side = bipartition_sides(g);
    c.vertex_colors.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) c.vertex_colors[v] = side[v] == 0 ? 1 : r + 2;
    return c;
}

TotalColoring color_tree(const Graph& g) {
    auto flags = structure_flags(g);
    if (!flags.connected || g.edge_count() != g.vertex_count() - 1)
        throw std::invalid_argument("color_tree: graph is not a tree");
    int n = g.vertex_count();

    TotalColoring c;
    if (n == 1) {
        c.t = 1;
        c.vertex_colors = {1};
        return c;
    }

    // Peel leaves (lowest index first) down to a single edge, then replay
    // the removals in reverse, attaching each leaf back with colors chosen
    // from its neighbor's palette. A global offset stands in for the
    // occasional "shift every color up by one" step, so the replay is O(1)
    // per leaf and the whole walk is iterative.
    struct Removal {
        int leaf, neighbor, edge;
    };
    std::vector<Removal> peeled;
    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) leaves.insert(v);
    }
    int alive_count = n;
    while (alive_count > 2) {
        int u = *leaves.begin();
        leaves.erase(leaves.begin());
        int v = -1, e = -1;
        for (auto [w, ei] : g.neighbors(u))
            if (alive[w]) {
                v = w;
                e = ei;
            }
        peeled.push_back({u, v, e});
        alive[u] = 0;
        --alive_count;
        if (--deg[v] == 1) leaves.insert(v);
    }

    std::vector<int> vraw(n, 0), eraw(g.edge_count(), 0);
    std::vector<int> lo(n, 0), hi(n, 0);  // palette span so far, in raw units
    std::vector<int> cur_deg(n, 0);
    int offset = 0;

    int a = -1, b = -1, e0 = -1;
    for (int v = 0; v < n; ++v)
        if (alive[v]) (a < 0 ? a : b) = v;
    for (auto [w, ei] : g.neighbors(a))
        if (w == b) e0 = ei;
    vraw[a] = 1;
    eraw[e0] = 2;
    vraw[b] = 3;
    lo[a] = 1, hi[a] = 2;
    lo[b] = 2, hi[b] = 3;
    cur_deg[a] = cur_deg[b] = 1;
    int max_deg = 1;

    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        auto [u, v, e] = *it;
        int dv = cur_deg[v] + 1;  // degree of v once u is attached
        int prev_max = max_deg;
        max_deg = std::max(max_deg, dv);
        int s1 = lo[v] + offset;
        int av = vraw[v] + offset;
        int e_abs, u_abs;
        if (s1 == 1) {
            e_abs = dv + 1;
            u_abs = dv + 2;
        } else if (s1 == 2 && av == 2) {
            e_abs = dv + 2;
            u_abs = dv + 1;
        } else if (s1 == 2 && prev_max == max_deg) {
            e_abs = 1;
            u_abs = 2;
        } else if (s1 == 2) {
            ++offset;  // shift everything placed so far up by one
            e_abs = 2;
            u_abs = 1;
        } else {
            e_abs = s1 - 1;
            u_abs = s1 - 2;
        }
        eraw[e] = e_abs - offset;
        vraw[u] = u_abs - offset;
        lo[v] = std::min(lo[v], eraw[e]);
        hi[v] = std::max(hi[v], eraw[e]);
        lo[u] = std::min(vraw[u], eraw[e]);
        hi[u] = std::max(vraw[u], eraw[e]);
        cur_deg[v] = dv;
        cur_deg[u] = 1;
    }

    c.t = max_deg + 2;
    c.vertex_colors.resize(n);
    c.edge_colors.resize(g.edge_count());
    for (int v = 0; v < n; ++v) c.vertex_colors[v] = vraw[v] + offset;
    for (int e = 0; e < g.edge_count(); ++e) c.edge_colors[e] = eraw[e] + offset;
    return c;
}

TotalColoring color_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("color_complete_bipartite: needs m, n >= 1");
    TotalColoring c;
    c.t = m + n + 1;
    for (int i = 1; i <= m; ++i) c.vertex_colors.push_back(i);
    for (int j = 1; j <= n; ++j) c.vertex_colors.push_back(m + 1 + j);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) c.edge_colors.push_back(i + j);
    return c;
}

std::pair<int, int> wheel_t_range(int n) {
    if (n < 4) throw std::invalid_argument("wheel_t_range: wheel needs n >= 4");
    if (n == 4) return {6, 7};
    return {n, n <= 8 ? n + 3 : n + 4};
}

namespace {

// Wheel edge indices for the canonical labeling: spokes u v_i first,
// rim v_i v_{i+1} second, closing rim edge v_1 v_{n-1} last.
struct WheelIdx {
    int n;
    int spoke(int i) const { return i - 1; }
    int rim(int i) const { return (n - 1) + (i - 1); }
    int rim_close() const { return 2 * n - 3; }
};

TotalColoring wheel_shell(int n) {
    TotalColoring c;
    c.vertex_colors.resize(n);
    c.edge_colors.resize(2 * n - 2);
    return c;
}

}  // namespace

namespace detail {

TotalColoring wheel_plus0(int n) {
    WheelIdx w{n};
    auto c = wheel_shell(n);
    c.t = n;
    auto& vc = c.vertex_colors;
    auto& ec = c.edge_colors;
    vc[0] = n;
    vc[1] = 2;
    if (n % 2 == 0) {
        for (int i = 2; i <= n / 2 - 1; ++i) vc[i] = 2 * i + 1;
        vc[n / 2] = n - 2;
        vc[n / 2 + 1] = n - 4;
        for (int j = n / 2 + 2; j <= n - 1; ++j) vc[j] = 2 * (n - j + 1);
        for (int k = 1; k <= n / 2; ++k) ec[w.spoke(k)] = 2 * k - 1;
        for (int l = n / 2 + 1; l <= n - 1; ++l) ec[w.spoke(l)] = 2 * (n - l);
        for (int p = 1; p <= n / 2 - 1; ++p) ec[w.rim(p)] = 2 * (p + 1);
        ec[w.rim(n / 2)] = n - 3;
        for (int q = n / 2 + 1; q <= n - 2; ++q) ec[w.rim(q)] = 2 * (n - q) + 1;
    } else {
        for (int i = 2; i <= n / 2 - 1; ++i) vc[i] = 2 * i + 1;
        vc[n / 2] = n - 4;
        vc[n / 2 + 1] = n - 2;
        for (int j = n / 2 + 2; j <= n - 1; ++j) vc[j] = 2 * (n - j + 1);
        for (int k = 1; k <= n / 2; ++k) ec[w.spoke(k)] = 2 * k - 1;
        for (int l = n / 2 + 1; l <= n - 1; ++l) ec[w.spoke(l)] = 2 * (n - l);
        for (int p = 1; p <= n / 2 - 1; ++p) ec[w.rim(p)] = 2 * (p + 1);
        ec[w.rim(n / 2)] = n - 3;
        for (int q = n / 2 + 1; q <= n - 2; ++q) ec[w.rim(q)] = 2 * (n - q) + 1;
    }
    ec[w.rim_close()] = 3;
    return c;
}

TotalColoring wheel_plus2(int n) {
    WheelIdx w{n};
    auto c = wheel_shell(n);
    c.t = n + 2;
    auto& vc = c.vertex_colors;
    auto& ec = c.edge_colors;
    int h = (n + 1) / 2;  // ceil(n/2)
    vc[0] = 1;
    vc[1] = 3;
    for (int i = 2; i <= h - 1; ++i) vc[i] = 2 * (i + 1);
    vc[h] = n - 1;
    for (int j = h + 1; j <= n - 1; ++j) vc[j] = 2 * (n - j) + 3;
    for (int k = 1; k <= n / 2; ++k) ec[w.spoke(k)] = 2 * k;
    for (int l = n / 2 + 1; l <= n - 1; ++l) ec[w.spoke(l)] = 2 * (n - l) + 1;
    for (int p = 1; p <= (n - 1) / 2; ++p) ec[w.rim(p)] = 2 * p + 3;
    for (int q = (n - 1) / 2 + 1; q <= n - 2; ++q) ec[w.rim(q)] = 2 * (n - q + 1);
    ec[w.rim_close()] = 4;
    return c;
}

TotalColoring wheel_plus1(int n) {
    auto c = wheel_plus2(n);
    c.t = n + 1;
    for (int& x : c.edge_colors)
        if (x == n + 2) x = n - 2;
    return c;
}

TotalColoring wheel_plus3(int n) {
    WheelIdx w{n};
    auto c = wheel_shell(n);
    c.t = n + 3;
    auto& vc = c.vertex_colors;
    auto& ec = c.edge_colors;
    if (n % 2 == 0) {
        for (int i = 1; i <= n / 2 + 1; ++i) vc[i] = 2 * i - 1;
        for (int j = n / 2 + 2; j <= n - 1; ++j) vc[j] = 2 * (n - j + 1);
        for (int k = 1; k <= n / 2; ++k) ec[w.rim(k)] = 2 * k;
        for (int l = n / 2 + 1; l <= n - 2; ++l) ec[w.rim(l)] = 2 * (n - l) + 1;
        for (int p = 2; p <= n / 2; ++p) ec[w.spoke(p)] = 2 * p + 1;
        for (int q = n / 2 + 1; q <= n - 1; ++q) ec[w.spoke(q)] = 2 * (n - q + 2);
    } else {
        int h = (n + 1) / 2;
        for (int i = 1; i <= n / 2; ++i) {
            vc[i] = 2 * i - 1;
            ec[w.rim(i)] = 2 * i;
        }
        for (int j = h; j <= n - 1; ++j) vc[j] = 2 * (n - j + 1);
        for (int k = h; k <= n - 2; ++k) ec[w.rim(k)] = 2 * (n - k) + 1;
        for (int p = 2; p <= h; ++p) ec[w.spoke(p)] = 2 * p + 1;
        for (int q = h + 1; q <= n - 1; ++q) ec[w.spoke(q)] = 2 * (n - q + 2);
    }
    ec[w.spoke(1)] = 4;
    ec[w.rim_close()] = 3;
    vc[0] = n + 3;
    return c;
}

TotalColoring wheel_plus4(int n) {
    WheelIdx w{n};
    auto c = wheel_shell(n);
    c.t = n + 4;
    auto& vc = c.vertex_colors;
    auto& ec = c.edge_colors;
    vc[0] = 7;
    vc[1] = 1;
    vc[2] = 6;
    vc[3] = 8;
    vc[n - 1] = 3;
    ec[w.spoke(1)] = 3;
    ec[w.spoke(2)] = 5;
    ec[w.rim(1)] = 4;
    ec[w.rim(2)] = 7;
    ec[w.rim_close()] = 2;
    if (n % 2 == 0) {
        for (int i = 4; i <= n / 2 - 2; ++i) vc[i] = 2 * i + 1;
        vc[n / 2 - 1] = n + 2;
        vc[n / 2] = n + 4;
        for (int j = n / 2 + 1; j <= n - 2; ++j) vc[j] = 2 * (n - j);
        for (int k = 3; k <= n / 2 - 1; ++k) ec[w.spoke(k)] = 2 * k + 3;
        for (int l = n / 2; l <= n - 1; ++l) ec[w.spoke(l)] = 2 * (n - l + 1);
        for (int p = 3; p <= n / 2 - 2; ++p) ec[w.rim(p)] = 2 * (p + 2);
        for (int q = n / 2 - 1; q <= n - 2; ++q) ec[w.rim(q)] = 2 * (n - q) + 1;
    } else {
        int h = (n + 1) / 2;
        for (int i = 4; i <= n / 2 - 1; ++i) vc[i] = 2 * i + 1;
        vc[n / 2] = n + 4;
        vc[h] = n + 2;
        for (int j = h + 1; j <= n - 2; ++j) vc[j] = 2 * (n - j);
        for (int k = 3; k <= n / 2; ++k) ec[w.spoke(k)] = 2 * k + 3;
        for (int l = h; l <= n - 1; ++l) ec[w.spoke(l)] = 2 * (n - l + 1);
        for (int p = 3; p <= n / 2; ++p) ec[w.rim(p)] = 2 * (p + 2);
        for (int q = h; q <= n - 2; ++q) ec[w.rim(q)] = 2 * (n - q) + 1;
    }
    return c;
}

}  // namespace detail

namespace {

// W_4 is K_4 with a different edge order; apply the complete-graph formulas
// across the wheel's own edge list.
TotalColoring wheel_as_k4(int t) {
    FamilySpec spec;
    spec.family = Family::wheel;
    spec.n = 4;
    Graph g = generate(spec);
    TotalColoring c;
    c.t = t;
    for (int v = 0; v < 4; ++v)
        c.vertex_colors.push_back(t == 7 ? kn_max_vertex(v + 1) : kn_even_min_vertex(4, v + 1));
    for (auto [a, b] : g.edges())
        c.edge_colors.push_back(t == 7 ? kn_max_edge(a + 1, b + 1)
                                       : kn_even_min_edge(4, a + 1, b + 1));
    return c;
}

}  // namespace

TotalColoring color_wheel(int n, int t) {
    auto [t_lo, t_hi] = wheel_t_range(n);
    if (t < t_lo || t > t_hi)
        throw std::invalid_argument("color_wheel: wheel on " + std::to_string(n) +
                                    " vertices covers t in " + std::to_string(t_lo) + ".." +
                                    std::to_string(t_hi));
    if (n == 4) return wheel_as_k4(t);
    switch (t - n) {
        case 0: return detail::wheel_plus0(n);
        case 1: return detail::wheel_plus1(n);
        case 2: return detail::wheel_plus2(n);
        case 3: return detail::wheel_plus3(n);
        default: return detail::wheel_plus4(n);
    }
}

Construction build_certificate(const FamilySpec& spec, std::optional<int> t) {
    Construction out;
    out.graph = generate(spec);
    switch (spec.family) {
        case Family::path:
        case Family::tree_random: {
            out.coloring = color_tree(out.graph);
            out.method = "tree_leaf_extension";
            if (t && *t != out.coloring.t)
                throw std::invalid_argument("color: this tree construction fixes t = " +
                                            std::to_string(out.coloring.t) +
                                            "; use search for other t");
            return out;
        }
        case Family::cycle: {
            int t_min = spec.n % 3 == 0 ? 3 : 4;
            int want = t ? *t : t_min;
            if (want == t_min) {
                out.coloring = color_cycle_min(spec.n);
                out.method = "cycle_min";
            } else if (want == spec.n + 2) {
                out.coloring = color_cycle_max(spec.n);
                out.method = "cycle_max";
            } else {
                throw std::invalid_argument("color: cycle on " + std::to_string(spec.n) +
                                            " vertices covers t = " + std::to_string(t_min) +
                                            " and t = " + std::to_string(spec.n + 2) +
                                            "; use search for other t");
            }
            return out;
        }
        case Family::complete: {
            int n = spec.n;
            int t_min = n % 2 == 1 ? n : 3 * n / 2;
            int want = t ? *t : t_min;
            if (want == 2 * n - 1) {
                out.coloring = color_complete_max(n);
                out.method = "complete_max";
            } else if (n % 2 == 0 && want == 3 * n / 2) {
                out.coloring = color_complete_even_min(n);
                out.method = "complete_even_min";
            } else if (want >= t_min && want <= 2 * n - 1) {
                out.coloring = color_complete_spectrum(n, want);
                out.method = "complete_range";
            } else {
                throw std::invalid_argument("color: complete graph on " + std::to_string(n) +
                                            " vertices covers t in " + std::to_string(t_min) +
                                            ".." + std::to_string(2 * n - 1) +
                                            "; use search for other t");
            }
            return out;
        }
        case Family::complete_bipartite: {
            out.coloring = color_complete_bipartite(spec.m, spec.n);
            out.method = "complete_bipartite_grid";
            if (t && *t != out.coloring.t)
                throw std::invalid_argument("color: this construction fixes t = " +
                                            std::to_string(out.coloring.t) +
                                            "; use search for other t");
            return out;
        }
        case Family::wheel: {
            auto [t_lo, t_hi] = wheel_t_range(spec.n);
            (void)t_hi;
            int want = t ? *t : t_lo;
            out.coloring = color_wheel(spec.n, want);
            out.method = spec.n == 4 ? (want == 7 ? "complete_max" : "complete_even_min")
                                     : "wheel_plus" + std::to_string(want - spec.n);
            return out;
        }
        case Family::regular_bipartite_named: {
            out.coloring = color_regular_bipartite(out.graph);
            out.method = "regular_bipartite_matchings";
            if (t && *t != out.coloring.t)
                throw std::invalid_argument("color: this construction fixes t = " +
                                            std::to_string(out.coloring.t) +
                                            "; use search for other t");
            return out;
        }
    }
    throw std::invalid_argument("color: unknown family");
}

}  // namespace itc
