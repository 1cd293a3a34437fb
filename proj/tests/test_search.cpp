#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "itc/graph.hpp"
#include "itc/search.hpp"
#include "test_helpers.hpp"

using namespace itc;

namespace {

Graph make(Family f, int n, int m = 0) {
    FamilySpec spec;
    spec.family = f;
    spec.n = n;
    spec.m = m;
    return generate(spec);
}

}  // namespace

TEST_CASE("verdict names") {
    CHECK(verdict_name(Verdict::feasible) == "feasible");
    CHECK(verdict_name(Verdict::infeasible) == "infeasible");
    CHECK(verdict_name(Verdict::budget_exhausted) == "budget-exhausted");
}

TEST_CASE("default search window") {
    CHECK(default_t_window(make(Family::complete, 3)) == std::pair<int, int>{3, 5});
    CHECK(default_t_window(make(Family::cycle, 6)) == std::pair<int, int>{3, 9});
    CHECK(default_t_window(make(Family::path, 1)) == std::pair<int, int>{1, 1});
    CHECK(default_t_window(make(Family::wheel, 5)) == std::pair<int, int>{5, 9});
    CHECK(default_t_window(make(Family::wheel, 6)) == std::pair<int, int>{6, 11});
    CHECK_THROWS_AS(default_t_window(Graph::from_edges(0, {})), std::invalid_argument);
}

TEST_CASE("single edge needs exactly three colors") {
    auto g = make(Family::path, 2);
    CHECK(exists_coloring(g, 2).verdict == Verdict::infeasible);
    auto three = exists_coloring(g, 3);
    REQUIRE(three.verdict == Verdict::feasible);
    REQUIRE(three.witness.has_value());
    CHECK(brute_force_verifier_oracle(g, *three.witness));
    CHECK(exists_coloring(g, 4).verdict == Verdict::infeasible);
}

TEST_CASE("complete graph on four vertices starts at six colors") {
    auto g = make(Family::complete, 4);
    CHECK(exists_coloring(g, 5).verdict == Verdict::infeasible);
    auto six = exists_coloring(g, 6);
    REQUIRE(six.verdict == Verdict::feasible);
    CHECK(brute_force_verifier_oracle(g, *six.witness));
}

TEST_CASE("five-cycle refuses three colors") {
    auto g = make(Family::cycle, 5);
    CHECK(exists_coloring(g, 3).verdict == Verdict::infeasible);
    CHECK(exists_coloring(g, 4).verdict == Verdict::feasible);
}

TEST_CASE("out-of-contract inputs") {
    auto g = make(Family::path, 2);
    CHECK(exists_coloring(g, 0).verdict == Verdict::infeasible);
    CHECK(exists_coloring(g, -3).verdict == Verdict::infeasible);
    CHECK_THROWS_AS(exists_coloring(g, 65), std::invalid_argument);
    CHECK_THROWS_AS(exists_coloring(Graph::from_edges(0, {}), 1), std::invalid_argument);
}

TEST_CASE("triangle spectrum is three through five") {
    auto g = make(Family::complete, 3);
    auto spec = compute_spectrum(g);
    CHECK(spec.t_lo == 3);
    CHECK(spec.t_hi == 5);
    REQUIRE(spec.entries.size() == 3);
    for (const auto& entry : spec.entries) {
        CHECK(entry.verdict == Verdict::feasible);
        REQUIRE(entry.witness.has_value());
        CHECK(entry.witness->t == entry.t);
        CHECK(brute_force_verifier_oracle(g, *entry.witness));
    }
    CHECK(spec.least_t == 3);
    CHECK(spec.greatest_t == 5);
}

TEST_CASE("complete graph spectrum has a gap below six") {
    auto g = make(Family::complete, 4);
    auto spec = compute_spectrum(g);
    CHECK(spec.t_lo == 4);
    CHECK(spec.t_hi == 7);
    REQUIRE(spec.entries.size() == 4);
    CHECK(spec.entries[0].verdict == Verdict::infeasible);
    CHECK(spec.entries[1].verdict == Verdict::infeasible);
    CHECK(spec.entries[2].verdict == Verdict::feasible);
    CHECK(spec.entries[3].verdict == Verdict::feasible);
    CHECK(spec.least_t == 6);
    CHECK(spec.greatest_t == 7);
}

TEST_CASE("narrowed windows withhold unproven extremes") {
    auto g = make(Family::complete, 3);

    SearchConfig floor_raised;
    floor_raised.t_min = 4;
    auto a = compute_spectrum(g, floor_raised);
    CHECK(!a.least_t.has_value());  // t=3 was never ruled out
    CHECK(a.greatest_t == 5);

    SearchConfig ceiling_lowered;
    ceiling_lowered.t_max = 4;
    auto b = compute_spectrum(g, ceiling_lowered);
    CHECK(b.least_t == 3);
    CHECK(!b.greatest_t.has_value());  // t=5 was never examined

    SearchConfig empty;
    empty.t_min = 6;
    empty.t_max = 5;
    CHECK_THROWS_AS(compute_spectrum(g, empty), std::invalid_argument);
}

TEST_CASE("budget exhaustion is reported, not guessed") {
    auto g = make(Family::complete, 4);
    SearchConfig tiny;
    tiny.node_budget = 50;
    auto out = exists_coloring(g, 5, tiny);
    CHECK(out.verdict == Verdict::budget_exhausted);
    CHECK(!out.witness.has_value());

    SearchConfig unlimited;
    CHECK(exists_coloring(g, 5, unlimited).verdict == Verdict::infeasible);

    // a budget entry below the first feasible t blocks the least-t claim
    SearchConfig spectrum_budget;
    spectrum_budget.node_budget = 50;
    auto spec = compute_spectrum(g, spectrum_budget);
    CHECK(!spec.least_t.has_value());
}

TEST_CASE("worker count changes neither verdicts nor budget verdicts") {
    auto g = make(Family::complete, 4);
    for (int t : {5, 6}) {
        SearchConfig serial, parallel;
        serial.jobs = 1;
        parallel.jobs = 4;
        CHECK(exists_coloring(g, t, serial).verdict == exists_coloring(g, t, parallel).verdict);

        serial.node_budget = parallel.node_budget = 2000;
        CHECK(exists_coloring(g, t, serial).verdict == exists_coloring(g, t, parallel).verdict);
    }
}

TEST_CASE("symmetry break and prune toggles never change verdicts") {
    struct Instance {
        Graph g;
        int t_lo, t_hi;
    };
    std::vector<Instance> instances;
    instances.push_back({make(Family::complete, 3), 2, 6});
    instances.push_back({make(Family::cycle, 4), 3, 7});
    instances.push_back({make(Family::path, 4), 2, 8});

    for (const auto& [g, t_lo, t_hi] : instances)
        for (int t = t_lo; t <= t_hi; ++t) {
            SearchConfig base;
            auto expected = exists_coloring(g, t, base).verdict;
            for (int sym = 0; sym <= 1; ++sym)
                for (int pal = 0; pal <= 1; ++pal)
                    for (int sur = 0; sur <= 1; ++sur) {
                        SearchConfig cfg;
                        cfg.symmetry_break = sym != 0;
                        cfg.palette_prune = pal != 0;
                        cfg.surjectivity_prune = sur != 0;
                        auto got = exists_coloring(g, t, cfg);
                        CHECK_MESSAGE(got.verdict == expected, "t=", t, " sym=", sym, " pal=", pal,
                                      " sur=", sur);
                        if (got.verdict == Verdict::feasible)
                            CHECK(brute_force_verifier_oracle(g, *got.witness));
                    }
        }
}

TEST_CASE("searching a disconnected graph works elementwise") {
    auto g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    // each lone edge occupies exactly 3 consecutive colors, so two of them
    // can cover anything from 3 to 6 colors but never 7
    CHECK(exists_coloring(g, 2).verdict == Verdict::infeasible);
    for (int t = 3; t <= 6; ++t) CHECK(exists_coloring(g, t).verdict == Verdict::feasible);
    CHECK(exists_coloring(g, 7).verdict == Verdict::infeasible);
}

TEST_CASE("random connected graphs: witnesses always survive both verifiers") {
    for (std::uint64_t seed = 10; seed < 16; ++seed) {
        auto g = itc_test::random_connected_graph(5, 40, seed);
        auto [lo, hi] = default_t_window(g);
        for (int t = lo; t <= std::min(hi, lo + 3); ++t) {
            auto out = exists_coloring(g, t);
            if (out.verdict == Verdict::feasible)
                CHECK(brute_force_verifier_oracle(g, *out.witness));
        }
    }
}
