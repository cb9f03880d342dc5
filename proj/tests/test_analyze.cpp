#include <doctest.h>

#include <algorithm>

#include "lr/analyze.hpp"
#include "lr/strings.hpp"

using namespace lr;

TEST_CASE("class degree helper") {
    Graph p3 = path_graph(3);
    CHECK(class_degree(p3, {0, 2}, {1}) == 1);
    CHECK(class_degree(p3, {1}, {0, 2}) == 2);
    CHECK(class_degree(p3, {0, 1}, {2}) == std::nullopt);  // 0 vs 1
}

TEST_CASE("unbalanced classes") {
    // P3 with the stable partition {ends},{middle}: nothing unbalanced
    Graph p3 = path_graph(3);
    Colouring stable;
    stable.colour = {0, 1, 0};
    stable.k = 2;
    CHECK(unbalanced_classes(p3, stable).empty());

    // P4 monochromatic: the single class is unbalanced wrt itself
    Graph p4 = path_graph(4);
    auto unbalanced = unbalanced_classes(p4, Colouring::monochromatic(4));
    REQUIRE(unbalanced.size() == 1);
    CHECK(unbalanced[0].members == std::vector<int>{0, 1, 2, 3});
    REQUIRE(unbalanced[0].witnesses.size() == 1);
    CHECK(unbalanced[0].witnesses[0] == std::vector<int>{0, 1, 2, 3});

    CHECK_THROWS_AS(unbalanced_classes(p4, Colouring::monochromatic(3)), std::invalid_argument);
}

TEST_CASE("every non-stable iteration of a long-refinement trace has one unbalanced class") {
    Graph g = realize(parse_lr_string("S011XX")).graph;
    RefinementTrace t = run_colour_refinement(g);
    REQUIRE(t.iteration_number == g.order() - 1);
    for (int i = 0; i < t.iteration_number; ++i) {
        auto unbalanced = unbalanced_classes(g, t.partitions[i]);
        REQUIRE(unbalanced.size() == 1);
        if (i > 0) {
            // the two witnesses are exactly A_i and B_i
            REQUIRE(unbalanced[0].witnesses.size() == 2);
            auto children = t.splits[i - 1][0].children;
            std::sort(children.begin(), children.end());
            auto witnesses = unbalanced[0].witnesses;
            std::sort(witnesses.begin(), witnesses.end());
            CHECK(children == witnesses);
        }
    }
    CHECK(unbalanced_classes(g, t.partitions.back()).empty());
}

TEST_CASE("pair phase of S011XX") {
    Graph g = realize(parse_lr_string("S011XX")).graph;
    RefinementTrace t = run_colour_refinement(g);
    PairPhase ph = pair_phase(t, g);
    CHECK(ph.p == 5);
    CHECK(ph.n_pairs == 6);
    CHECK(ph.a == 5);
    CHECK(ph.b == 6);
    CHECK(ph.ell == 0);
    CHECK(ph.t == 0);
    CHECK(ph.t_shape_ok);
    CHECK(ph.d == 4);  // b=a+1 allows d up to ell+4
    CHECK(ph.singletons.empty());
    // p is minimal: pi^{p-1} still has a class larger than 2
    int max_before = 0;
    for (const auto& cls : t.partitions[ph.p - 1].classes())
        max_before = std::max(max_before, static_cast<int>(cls.size()));
    CHECK(max_before > 2);
}

TEST_CASE("pair phase rejects non-long-refinement traces") {
    Graph c6 = cycle_graph(6);
    RefinementTrace t = run_colour_refinement(c6);
    CHECK_THROWS_AS(pair_phase(t, c6), std::invalid_argument);
}

TEST_CASE("verify_structure on a catalog graph") {
    Graph g = realize(parse_lr_string("S011XX")).graph;
    StructureReport report = verify_structure(g);
    REQUIRE(report.checks.size() == 10);
    CHECK(report.all_pass());
    // ell = 0 makes the two cascade checks vacuous
    CHECK(report.checks[6].status == CheckStatus::Vacuous);
    CHECK(report.checks[7].status == CheckStatus::Vacuous);
    CHECK(report.phase.has_value());
}

TEST_CASE("verify_structure with a non-trivial cascade") {
    Graph g = realize(expand_family("even-2", 2)).graph;
    StructureReport report = verify_structure(g);
    CHECK(report.all_pass());
    REQUIRE(report.phase.has_value());
    CHECK(report.phase->ell > 0);
    CHECK(report.checks[6].status == CheckStatus::Pass);
    CHECK(report.checks[7].status == CheckStatus::Pass);
}

TEST_CASE("verify_structure fails check 1 on non-long-refinement input") {
    StructureReport report = verify_structure(cycle_graph(6));
    REQUIRE(report.checks.size() == 10);
    CHECK(report.checks[0].status == CheckStatus::Fail);
    CHECK_FALSE(report.all_pass());
    for (size_t i = 1; i < report.checks.size(); ++i)
        CHECK(report.checks[i].status == CheckStatus::Vacuous);
    CHECK_FALSE(report.phase.has_value());
}

TEST_CASE("verify_structure on a complement") {
    Graph g = realize(parse_lr_string("S011XX")).graph.complement();
    StructureReport report = verify_structure(g);
    CHECK(report.all_pass());
}
