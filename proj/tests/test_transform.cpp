#include <doctest.h>

#include <stdexcept>
#include <string>

#include "itc/constructions.hpp"
#include "itc/graph.hpp"
#include "itc/json_io.hpp"
#include "itc/transform.hpp"
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

TEST_CASE("doubling a single edge gives a four-cycle") {
    auto aux = build_auxiliary(make(Family::path, 2));
    CHECK(aux.h.vertex_count() == 4);
    REQUIRE(aux.h.edge_count() == 4);
    CHECK(aux.h.edge(0) == std::pair<int, int>{0, 2});  // diagonal of vertex 0
    CHECK(aux.h.edge(1) == std::pair<int, int>{1, 3});  // diagonal of vertex 1
    CHECK(aux.h.edge(2) == std::pair<int, int>{0, 3});  // mirror pair of the edge
    CHECK(aux.h.edge(3) == std::pair<int, int>{1, 2});
    CHECK(aux.part == std::vector<int>{0, 0, 1, 1});
    auto flags = structure_flags(aux.h);
    CHECK(flags.connected);
    CHECK(flags.bipartite);
    CHECK(flags.regular_degree == 2);
}

TEST_CASE("doubling a single vertex gives a single edge") {
    auto aux = build_auxiliary(make(Family::path, 1));
    CHECK(aux.h.vertex_count() == 2);
    REQUIRE(aux.h.edge_count() == 1);
    CHECK(std::holds_alternative<DiagonalEdge>(aux.origin[0]));
}

TEST_CASE("doubling a triangle gives K_{3,3}") {
    auto aux = build_auxiliary(make(Family::cycle, 3));
    CHECK(aux.h.vertex_count() == 6);
    CHECK(aux.h.edge_count() == 9);
    auto flags = structure_flags(aux.h);
    CHECK(flags.connected);
    CHECK(flags.bipartite);
    CHECK(flags.regular_degree == 3);
    // diagonals first, then mirror pairs in base edge order
    for (int e = 0; e < 3; ++e) CHECK(std::holds_alternative<DiagonalEdge>(aux.origin[e]));
    for (int e = 3; e < 9; ++e) CHECK(std::holds_alternative<MirrorEdge>(aux.origin[e]));
    auto first = std::get<MirrorEdge>(aux.origin[3]);
    auto second = std::get<MirrorEdge>(aux.origin[4]);
    CHECK(first.i == 0);
    CHECK(first.j == 1);
    CHECK(second.i == 1);
    CHECK(second.j == 0);
}

TEST_CASE("doubled degrees are base degrees plus one") {
    for (const auto& g : itc_test::small_graph_menagerie()) {
        auto aux = build_auxiliary(g);
        int n = g.vertex_count();
        REQUIRE(aux.h.vertex_count() == 2 * n);
        REQUIRE(aux.h.edge_count() == n + 2 * g.edge_count());
        for (int v = 0; v < n; ++v) {
            CHECK(aux.h.degree(v) == g.degree(v) + 1);
            CHECK(aux.h.degree(n + v) == g.degree(v) + 1);
        }
        // every edge crosses the two parts
        for (auto [u, v] : aux.h.edges()) CHECK(aux.part[u] != aux.part[v]);
    }
}

TEST_CASE("lifting a valid coloring yields a valid interval edge coloring") {
    struct Item {
        Graph g;
        TotalColoring c;
        std::string what;
    };
    std::vector<Item> items;
    items.push_back({make(Family::cycle, 6), color_cycle_min(6), "cycle 6"});
    items.push_back({make(Family::cycle, 5), color_cycle_max(5), "cycle 5 wide"});
    items.push_back({make(Family::complete, 5), color_complete_max(5), "complete 5"});
    items.push_back({make(Family::complete, 6), color_complete_even_min(6), "complete 6 narrow"});
    items.push_back({make(Family::wheel, 7), color_wheel(7, 8), "wheel 7 t=8"});
    items.push_back({make(Family::complete_bipartite, 3, 2), color_complete_bipartite(2, 3), "K_{2,3}"});
    items.push_back({make(Family::path, 1), TotalColoring{1, {1}, {}}, "single vertex"});
    for (const auto& [g, c, what] : items) {
        REQUIRE(verify_interval_total(g, c).valid);
        auto aux = build_auxiliary(g);
        auto lifted = lift_coloring(aux, c);
        CHECK(lifted.t == c.t);
        auto out = verify_interval_edge(aux.h, lifted);
        if (!out.valid)
            for (const auto& f : out.failures) MESSAGE(what, ": ", f.message);
        CHECK_MESSAGE(out.valid, what);
    }
}

TEST_CASE("lift rejects colorings of the wrong shape") {
    auto aux = build_auxiliary(make(Family::cycle, 6));
    auto c = color_cycle_min(6);
    c.vertex_colors.pop_back();
    CHECK_THROWS_AS(lift_coloring(aux, c), std::invalid_argument);
    c = color_cycle_min(6);
    c.edge_colors.push_back(1);
    CHECK_THROWS_AS(lift_coloring(aux, c), std::invalid_argument);
}

TEST_CASE("interval edge verifier failures") {
    auto p3 = make(Family::path, 3);

    SUBCASE("gap at the middle vertex") {
        EdgeColoring c{3, {1, 3}};
        auto out = verify_interval_edge(p3, c);
        CHECK(!out.valid);
        bool gap = false, unused = false;
        for (const auto& f : out.failures) {
            gap = gap || f.clause == Clause::palette_interval;
            unused = unused || f.clause == Clause::color_unused;
        }
        CHECK(gap);
        CHECK(unused);
    }
    SUBCASE("duplicate at a shared endpoint") {
        EdgeColoring c{1, {1, 1}};
        auto out = verify_interval_edge(p3, c);
        CHECK(!out.valid);
        CHECK(out.failures[0].clause == Clause::proper_edge);
    }
    SUBCASE("color out of range") {
        EdgeColoring c{2, {1, 5}};
        auto out = verify_interval_edge(p3, c);
        CHECK(!out.valid);
        CHECK(out.failures[0].clause == Clause::color_out_of_range);
    }
    SUBCASE("valid two-coloring of a path") {
        EdgeColoring c{2, {1, 2}};
        CHECK(verify_interval_edge(p3, c).valid);
    }
    SUBCASE("shape mismatch throws") {
        EdgeColoring c{2, {1, 2, 3}};
        CHECK_THROWS_AS(verify_interval_edge(p3, c), std::invalid_argument);
    }
    SUBCASE("isolated vertices are skipped") {
        auto g = Graph::from_edges(3, {{0, 1}});
        EdgeColoring c{1, {1}};
        CHECK(verify_interval_edge(g, c).valid);
    }
}

TEST_CASE("projection inverts the lift") {
    for (const auto& g : itc_test::small_graph_menagerie()) {
        if (g.vertex_count() > 6) continue;
        auto aux = build_auxiliary(g);
        TotalColoring c;
        c.t = g.vertex_count() + g.edge_count();
        for (int v = 0; v < g.vertex_count(); ++v) c.vertex_colors.push_back(v + 1);
        for (int e = 0; e < g.edge_count(); ++e)
            c.edge_colors.push_back(g.vertex_count() + e + 1);
        auto lifted = lift_coloring(aux, c);
        auto back = project_to_total(aux, lifted);
        CHECK(back.t == c.t);
        CHECK(back.vertex_colors == c.vertex_colors);
        CHECK(back.edge_colors == c.edge_colors);
    }
}

TEST_CASE("projection rejects asymmetric mirror pairs") {
    auto g = make(Family::cycle, 3);
    auto aux = build_auxiliary(g);
    auto lifted = lift_coloring(aux, color_cycle_min(3));
    lifted.colors[4] += 1;  // second half of the first mirror pair
    CHECK_THROWS_WITH_AS(project_to_total(aux, lifted), doctest::Contains("asymmetrically"),
                         std::invalid_argument);
    EdgeColoring short_colors{3, {1, 2}};
    CHECK_THROWS_AS(project_to_total(aux, short_colors), std::invalid_argument);
}

TEST_CASE("doubled graph serialization carries provenance") {
    auto g = make(Family::path, 2);
    auto aux = build_auxiliary(g);
    auto j = auxiliary_to_json(aux);
    CHECK(j["graph"]["n"] == 4);
    REQUIRE(j["provenance"].size() == 4);
    CHECK(j["provenance"][0]["diag"] == 0);
    CHECK(j["provenance"][2]["mirror"][0] == 0);
    CHECK(j["provenance"][2]["mirror"][1] == 1);
    CHECK(j["provenance"][3]["mirror"][0] == 1);
    CHECK(j["provenance"][3]["mirror"][1] == 0);
    CHECK(!j.contains("edge_colors"));

    TotalColoring c{3, {1, 3}, {2}};
    auto lifted = lift_coloring(aux, c);
    auto jc = auxiliary_to_json(aux, &lifted);
    CHECK(jc["t"] == 3);
    CHECK(jc["edge_colors"] == std::vector<int>{1, 3, 2, 2});
}
