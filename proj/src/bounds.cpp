#include "itc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace itc {

BoundReport bound_report(const Graph& g) {
    BoundReport report;
    int n = g.vertex_count();
    int m = g.edge_count();
    int max_deg = g.max_degree();
    auto flags = structure_flags(g);

    report.push_back({"max_degree_plus_one", "lower", "w_tau", max_deg + 1, n >= 1,
                      "every palette of a maximum-degree vertex needs max_degree+1 colors"});

    report.push_back({"total_elements", "upper", "W_tau", static_cast<long long>(n) + m, n >= 1,
                      "there are only |V|+|E| elements to spread colors over"});

    report.push_back({"double_order", "upper", "W_tau", 2LL * n - 1, n >= 1 && flags.connected,
                      "connected graphs: at most 2|V|-1 colors"});

    {
        bool ok = flags.connected && flags.regular_degree && n >= 2 * flags.regular_degree.value_or(0) + 2;
        report.push_back({"double_order_regular", "upper", "W_tau", 2LL * n - 3, ok,
                          "connected r-regular graphs on at least 2r+2 vertices: at most 2|V|-3 colors"});
    }

    {
        bool ok = n >= 1 && flags.connected;
        long long value = 0;
        if (ok) value = 1LL + max_shortest_path_degree_sum(g);
        report.push_back({"shortest_path_degree_sum", "upper", "W_tau", value, ok,
                          "connected graphs: 1 + the heaviest degree sum along any shortest path"});
    }

    {
        bool ok = n >= 1 && flags.connected;
        long long value = 0;
        if (ok) value = 1LL + (static_cast<long long>(diameter(g)) + 1) * max_deg;
        report.push_back({"diameter_degree", "upper", "W_tau", value, ok,
                          "connected graphs: 1 + (diameter+1) * max_degree"});
    }

    {
        bool ok = flags.universal_vertices.size() == 1;
        long long k = 0;
        if (ok) {
            int u = flags.universal_vertices[0];
            for (int v = 0; v < n; ++v)
                if (v != u) k = std::max(k, static_cast<long long>(g.degree(v)));
        }
        report.push_back({"universal_vertex", "upper", "W_tau", n + 2 * k, ok,
                          "exactly one vertex adjacent to all others: |V| + twice the next-largest degree"});
    }

    {
        bool ok = flags.bipartite && flags.regular_degree && *flags.regular_degree >= 1;
        report.push_back({"regular_bipartite", "upper", "w_tau",
                          flags.regular_degree.value_or(0) + 2LL, ok,
                          "r-regular bipartite graphs: r+2 colors suffice"});
    }

    report.push_back({"tree", "upper", "w_tau", max_deg + 2LL,
                      flags.connected && m == n - 1 && n >= 1,
                      "trees: max_degree+2 colors suffice"});

    {
        // Structural detection: connected, bipartite, and the two sides are
        // completely joined.
        bool ok = false;
        long long value = 0;
        if (n >= 2 && flags.connected && flags.bipartite) {
            std::vector<int> color(n, -1);
            std::vector<int> stack{0};
            color[0] = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto [w, e] : g.neighbors(v)) {
                    (void)e;
                    if (color[w] < 0) {
                        color[w] = color[v] ^ 1;
                        stack.push_back(w);
                    }
                }
            }
            long long a = std::count(color.begin(), color.end(), 0);
            long long b = n - a;
            if (a >= 1 && b >= 1 && static_cast<long long>(m) == a * b) {
                ok = true;
                value = a + b + 1;
            }
        }
        report.push_back({"complete_bipartite_order", "lower", "W_tau", value, ok,
                          "complete bipartite graphs reach at least m+n+1 colors"});
    }

    return report;
}

int known_chi_double_prime(Family family, int n) {
    switch (family) {
        case Family::cycle:
            if (n < 3) throw std::invalid_argument("known_chi_double_prime: cycle needs n >= 3");
            return n % 3 == 0 ? 3 : 4;
        case Family::complete:
            if (n < 1) throw std::invalid_argument("known_chi_double_prime: complete needs n >= 1");
            return n % 2 == 1 ? n : n + 1;
        default:
            throw std::invalid_argument("known_chi_double_prime: no closed form for family '" +
                                        family_name(family) + "'");
    }
}

KnownValues known_exact_values(Family family, int n) {
    KnownValues kv;
    switch (family) {
        case Family::path:
            if (n < 1) throw std::invalid_argument("known_exact_values: path needs n >= 1");
            kv.greatest_t = 2 * n - 1;
            return kv;
        case Family::cycle:
            if (n < 3) throw std::invalid_argument("known_exact_values: cycle needs n >= 3");
            kv.chi_double_prime = known_chi_double_prime(family, n);
            kv.least_t = n % 3 == 0 ? 3 : 4;
            kv.greatest_t = n + 2;
            return kv;
        case Family::complete:
            if (n < 1) throw std::invalid_argument("known_exact_values: complete needs n >= 1");
            kv.chi_double_prime = known_chi_double_prime(family, n);
            kv.least_t = n % 2 == 1 ? n : 3 * n / 2;
            kv.greatest_t = 2 * n - 1;
            kv.feasible_range = {{*kv.least_t, *kv.greatest_t}};
            return kv;
        case Family::wheel:
            if (n < 4) throw std::invalid_argument("known_exact_values: wheel needs n >= 4");
            kv.least_t = n == 4 ? 6 : n;
            kv.greatest_t = n <= 8 ? n + 3 : n + 4;
            kv.feasible_range = {{*kv.least_t, *kv.greatest_t}};
            return kv;
        default:
            throw std::invalid_argument("known_exact_values: no closed form for family '" +
                                        family_name(family) + "'");
    }
}

}  // namespace itc
