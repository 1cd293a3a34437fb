#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itc/graph.hpp"

namespace itc {

// One bound on the least (w) or greatest (W) feasible color count.
// Inapplicable bounds are still listed with applicable = false; value is
// filled whenever the formula's inputs exist (it may be meaningless then).
struct Bound {
    std::string name;    // stable identifier, e.g. "diameter_degree"
    std::string kind;    // "lower" or "upper"
    std::string target;  // "w_tau" or "W_tau"
    long long value = 0;
    bool applicable = false;
    std::string ref;  // one-line description of the bound
};

using BoundReport = std::vector<Bound>;

// Every known bound for g, with structural applicability worked out from
// the graph itself (no family hint needed). Never throws on valid graphs.
BoundReport bound_report(const Graph& g);

// Total chromatic number of a family member, where a closed form exists.
// Supported: cycle (3 when 3 | n, else 4), complete (n odd: n, n even: n+1).
int known_chi_double_prime(Family family, int n);

// Closed-form least/greatest feasible t for a family member, plus the full
// feasible range when one is established. Fields are set only when known.
struct KnownValues {
    std::optional<int> chi_double_prime;
    std::optional<int> least_t;                      // w
    std::optional<int> greatest_t;                   // W
    std::optional<std::pair<int, int>> feasible_range;  // every t in [a,b] works
};

// Supported families: path (greatest 2n-1), cycle, complete, wheel.
KnownValues known_exact_values(Family family, int n);

}  // namespace itc
