#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "itc/coloring.hpp"
#include "itc/graph.hpp"

namespace itc {

// Controls for the exhaustive oracle. t_min/t_max of 0 mean "derive from
// the graph" (max_degree+1 and the least applicable upper bound). The node
// budget counts attempted assignments and is split evenly across the
// first element's color branches, so verdicts do not depend on the worker
// count. The pruning toggles exist for testing; disabling them changes
// speed, never verdicts.
struct SearchConfig {
    int t_min = 0;
    int t_max = 0;
    std::uint64_t node_budget = 0;  // 0 = unlimited
    int jobs = 1;
    bool symmetry_break = false;  // restrict the first element to colors <= ceil(t/2)
    bool palette_prune = true;
    bool surjectivity_prune = true;
};

enum class Verdict { feasible, infeasible, budget_exhausted };

std::string verdict_name(Verdict v);

struct SearchOutcome {
    Verdict verdict = Verdict::infeasible;
    std::optional<TotalColoring> witness;  // present iff feasible
    std::uint64_t nodes = 0;               // attempted assignments
};

// Is there an interval total t-coloring of g? Exhaustive, so "infeasible"
// is a proof. Colors are tracked in machine words; t must be at most 64.
SearchOutcome exists_coloring(const Graph& g, int t, const SearchConfig& cfg = {});

struct SpectrumEntry {
    int t = 0;
    Verdict verdict = Verdict::infeasible;
    std::optional<TotalColoring> witness;
};

struct SpectrumResult {
    int t_lo = 0, t_hi = 0;
    std::vector<SpectrumEntry> entries;
    // Set only when this run proves them: least_t needs every smaller t in
    // a window starting at the proven floor to be infeasible; greatest_t
    // needs the window to end at a proven upper bound.
    std::optional<int> least_t;
    std::optional<int> greatest_t;
};

SpectrumResult compute_spectrum(const Graph& g, const SearchConfig& cfg = {});

// [max_degree+1, least applicable upper bound on the greatest t].
std::pair<int, int> default_t_window(const Graph& g);

// Naive set-based recheck of the full interval total coloring definition,
// working straight off the edge list. Deliberately shares no code with the
// main verifier; used to cross-validate it.
bool brute_force_verifier_oracle(const Graph& g, const TotalColoring& c);

}  // namespace itc
