#include <doctest.h>

#include <stdexcept>
#include <string>

#include "itc/bounds.hpp"
#include "itc/graph.hpp"
#include "itc/json_io.hpp"
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

const Bound& find(const BoundReport& report, const std::string& name) {
    for (const auto& b : report)
        if (b.name == name) return b;
    throw std::runtime_error("bound not in report: " + name);
}

}  // namespace

TEST_CASE("bound report for a six-cycle") {
    auto report = bound_report(make(Family::cycle, 6));

    auto& lower = find(report, "max_degree_plus_one");
    CHECK(lower.applicable);
    CHECK(lower.kind == "lower");
    CHECK(lower.target == "w_tau");
    CHECK(lower.value == 3);

    CHECK(find(report, "total_elements").value == 12);
    CHECK(find(report, "total_elements").applicable);
    CHECK(find(report, "double_order").value == 11);
    CHECK(find(report, "double_order_regular").applicable);
    CHECK(find(report, "double_order_regular").value == 9);
    CHECK(find(report, "shortest_path_degree_sum").value == 9);
    CHECK(find(report, "diameter_degree").value == 9);
    CHECK(!find(report, "universal_vertex").applicable);
    CHECK(find(report, "regular_bipartite").applicable);
    CHECK(find(report, "regular_bipartite").value == 4);
    CHECK(find(report, "regular_bipartite").target == "w_tau");
    CHECK(!find(report, "tree").applicable);
    CHECK(!find(report, "complete_bipartite_order").applicable);  // C_6 is not K_{3,3}
}

TEST_CASE("universal vertex bound applies to wheels but not complete graphs") {
    auto wheel = bound_report(make(Family::wheel, 6));
    auto& u = find(wheel, "universal_vertex");
    CHECK(u.applicable);
    CHECK(u.value == 12);  // 6 + 2*3

    auto k4 = bound_report(make(Family::complete, 4));
    CHECK(!find(k4, "universal_vertex").applicable);  // every vertex is universal
    CHECK(find(k4, "diameter_degree").value == 7);
    CHECK(find(k4, "double_order").value == 7);
}

TEST_CASE("four-cycle is detected as complete bipartite") {
    auto report = bound_report(make(Family::cycle, 4));
    auto& b = find(report, "complete_bipartite_order");
    CHECK(b.applicable);
    CHECK(b.kind == "lower");
    CHECK(b.target == "W_tau");
    CHECK(b.value == 5);
}

TEST_CASE("tree and bipartite structure bounds") {
    auto p5 = bound_report(make(Family::path, 5));
    CHECK(find(p5, "tree").applicable);
    CHECK(find(p5, "tree").value == 4);
    CHECK(!find(p5, "regular_bipartite").applicable);
    CHECK(!find(p5, "double_order_regular").applicable);

    auto k33 = bound_report(make(Family::complete_bipartite, 3, 3));
    CHECK(find(k33, "regular_bipartite").value == 5);
    CHECK(find(k33, "complete_bipartite_order").value == 7);
    CHECK(!find(k33, "tree").applicable);
    // 6 vertices < 2r+2 = 8, so the stronger regular cap is out
    CHECK(!find(k33, "double_order_regular").applicable);
}

TEST_CASE("connectivity-dependent bounds drop out on disconnected graphs") {
    auto report = bound_report(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK(find(report, "total_elements").applicable);
    CHECK(find(report, "total_elements").value == 6);
    CHECK(find(report, "max_degree_plus_one").applicable);
    CHECK(!find(report, "double_order").applicable);
    CHECK(!find(report, "shortest_path_degree_sum").applicable);
    CHECK(!find(report, "diameter_degree").applicable);
    CHECK(!find(report, "tree").applicable);
}

TEST_CASE("single vertex bounds are tight") {
    auto report = bound_report(make(Family::path, 1));
    CHECK(find(report, "max_degree_plus_one").value == 1);
    CHECK(find(report, "total_elements").value == 1);
    CHECK(find(report, "double_order").value == 1);
    CHECK(find(report, "shortest_path_degree_sum").value == 1);
    CHECK(find(report, "diameter_degree").value == 1);
}

TEST_CASE("bounds bracket the known exact values") {
    auto check_family = [](Family f, int n, const Graph& g) {
        auto kv = known_exact_values(f, n);
        auto report = bound_report(g);
        for (const auto& b : report) {
            if (!b.applicable) continue;
            if (b.target == "w_tau" && b.kind == "lower" && kv.least_t)
                CHECK_MESSAGE(b.value <= *kv.least_t, b.name, " n=", n);
            if (b.target == "w_tau" && b.kind == "upper" && kv.least_t)
                CHECK_MESSAGE(b.value >= *kv.least_t, b.name, " n=", n);
            if (b.target == "W_tau" && b.kind == "upper" && kv.greatest_t)
                CHECK_MESSAGE(b.value >= *kv.greatest_t, b.name, " n=", n);
            if (b.target == "W_tau" && b.kind == "lower" && kv.greatest_t)
                CHECK_MESSAGE(b.value <= *kv.greatest_t, b.name, " n=", n);
        }
    };
    for (int n = 3; n <= 12; ++n) check_family(Family::cycle, n, make(Family::cycle, n));
    for (int n = 1; n <= 12; ++n) check_family(Family::complete, n, make(Family::complete, n));
    for (int n = 4; n <= 12; ++n) check_family(Family::wheel, n, make(Family::wheel, n));
    for (int n = 1; n <= 12; ++n) check_family(Family::path, n, make(Family::path, n));
}

TEST_CASE("closed-form total chromatic numbers") {
    CHECK(known_chi_double_prime(Family::cycle, 3) == 3);
    CHECK(known_chi_double_prime(Family::cycle, 4) == 4);
    CHECK(known_chi_double_prime(Family::cycle, 5) == 4);
    CHECK(known_chi_double_prime(Family::cycle, 6) == 3);
    CHECK(known_chi_double_prime(Family::complete, 5) == 5);
    CHECK(known_chi_double_prime(Family::complete, 6) == 7);
    CHECK_THROWS_AS(known_chi_double_prime(Family::wheel, 6), std::invalid_argument);
    CHECK_THROWS_AS(known_chi_double_prime(Family::cycle, 2), std::invalid_argument);
}

TEST_CASE("known exact value tables") {
    auto cycle = known_exact_values(Family::cycle, 6);
    CHECK(cycle.chi_double_prime == 3);
    CHECK(cycle.least_t == 3);
    CHECK(cycle.greatest_t == 8);
    CHECK(!cycle.feasible_range.has_value());

    auto c7 = known_exact_values(Family::cycle, 7);
    CHECK(c7.least_t == 4);
    CHECK(c7.greatest_t == 9);

    auto path = known_exact_values(Family::path, 4);
    CHECK(path.greatest_t == 7);
    CHECK(!path.least_t.has_value());

    auto k5 = known_exact_values(Family::complete, 5);
    CHECK(k5.least_t == 5);
    CHECK(k5.greatest_t == 9);
    CHECK(k5.feasible_range == std::pair<int, int>{5, 9});

    auto k6 = known_exact_values(Family::complete, 6);
    CHECK(k6.least_t == 9);
    CHECK(k6.greatest_t == 11);

    CHECK(known_exact_values(Family::wheel, 4).feasible_range == std::pair<int, int>{6, 7});
    CHECK(known_exact_values(Family::wheel, 8).feasible_range == std::pair<int, int>{8, 11});
    CHECK(known_exact_values(Family::wheel, 9).feasible_range == std::pair<int, int>{9, 13});

    CHECK_THROWS_AS(known_exact_values(Family::tree_random, 5), std::invalid_argument);
    CHECK_THROWS_AS(known_exact_values(Family::complete_bipartite, 3), std::invalid_argument);
    CHECK_THROWS_AS(known_exact_values(Family::wheel, 3), std::invalid_argument);
}

TEST_CASE("bound report serializes completely") {
    auto report = bound_report(make(Family::wheel, 5));
    auto j = bound_report_to_json(report);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == report.size());
    CHECK(j.size() == 10);
    for (const auto& bj : j) {
        CHECK(bj.contains("name"));
        CHECK(bj.contains("kind"));
        CHECK(bj.contains("target"));
        CHECK(bj.contains("value"));
        CHECK(bj.contains("applicable"));
        CHECK(bj.contains("ref"));
    }
}
