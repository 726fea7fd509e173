#include <algorithm>
#include <random>

#include "doctest.h"
#include "mforge/canonical.hpp"
#include "mforge/errors.hpp"
#include "mforge/graph.hpp"
#include "mforge/minor.hpp"
#include "oracles.hpp"

using namespace mforge;

namespace {

Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

Graph tight4() {
    const int s[] = {2, 2};
    const Graph k22 = complete_multipartite(s);
    return complement(disjoint_union(k22, k22));
}

Graph k222() {
    const int s[] = {2, 2, 2};
    return complete_multipartite(s);
}

} // namespace

TEST_CASE("witness validation") {
    const Graph c4 = cycle_graph(4);
    BranchPartition ok{{{0, 1}, {2}, {3}}, {}};
    CHECK(minor_witness_error(c4, complete_graph(3), ok) == "");
    BranchPartition split{{{0, 2}, {1}, {3}}, {}};
    CHECK(minor_witness_error(c4, complete_graph(3), split).find("not connected") != std::string::npos);
    BranchPartition overlap{{{0, 1}, {1, 2}}, {}};
    CHECK_FALSE(partition_error(c4, overlap).empty());
    BranchPartition short_{{{0}, {1}}, {}};
    CHECK_FALSE(minor_witness_error(c4, complete_graph(3), short_).empty());
    BranchPartition del{{{0}, {1}, {2}, {3}}, {{0, 1}}};
    CHECK(are_isomorphic(minor_from_partition(c4, del), path_graph(4)));
    CHECK(minor_from_partition(c4, del).size() == 3);
    BranchPartition bad_del{{{0}, {1}, {2}, {3}}, {{0, 2}}};
    CHECK_FALSE(partition_error(c4, bad_del).empty());
}

TEST_CASE("has_minor examples") {
    auto r = has_minor(complete_graph(4), complete_graph(4));
    CHECK(r.found);
    CHECK(minor_witness_error(complete_graph(4), complete_graph(4), r.witness) == "");

    const Graph p = petersen();
    r = has_minor(p, complete_graph(5));
    REQUIRE(r.found);
    CHECK(minor_witness_error(p, complete_graph(5), r.witness) == "");
    const int s33[] = {3, 3};
    CHECK(has_minor(p, complete_multipartite(s33)).found);
    CHECK_FALSE(has_minor(p, complete_graph(6)).found);

    r = has_minor(tight4(), complete_graph(6));
    REQUIRE(r.found);
    CHECK(minor_witness_error(tight4(), complete_graph(6), r.witness) == "");

    CHECK_FALSE(has_minor(cycle_graph(6), complete_graph(4)).found);
    CHECK(has_minor(cycle_graph(6), complete_graph(3)).found);
    CHECK_FALSE(has_minor(path_graph(3), complete_graph(3)).found);
    CHECK(has_minor(empty_graph(3), empty_graph(2)).found);
    CHECK(has_minor(disjoint_union(complete_graph(4), complete_graph(3)), disjoint_union(complete_graph(3), complete_graph(3))).found);
    CHECK_FALSE(has_minor(disjoint_union(complete_graph(4), path_graph(3)), disjoint_union(complete_graph(3), complete_graph(3))).found);
}

TEST_CASE("has_minor agrees with brute-force branch sets") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int h = 1 + static_cast<int>(rng() % 4);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const Graph pattern = oracle::random_graph(h, 0.6, rng);
        const auto r = has_minor(g, pattern);
        REQUIRE(r.found == oracle::brute_has_minor(g, pattern));
        if (r.found) CHECK(minor_witness_error(g, pattern, r.witness) == "");
    }
}

TEST_CASE("contraction minors") {
    auto k3 = contraction_minors(complete_graph(3));
    REQUIRE(k3.size() == 2);
    CHECK(k3[0].graph == complete_graph(2));
    CHECK(k3[1].graph == complete_graph(1));
    CHECK(contraction_minors(complete_graph(4)).size() == 3);
    bool triangle = false;
    for (const auto& m : contraction_minors(cycle_graph(4))) {
        triangle = triangle || are_isomorphic(m.graph, complete_graph(3));
    }
    CHECK(triangle);

    std::mt19937 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const auto ours = contraction_minors(g);
        CHECK(ours.size() == oracle::brute_contraction_minors(g).size());
        for (const auto& m : ours) {
            CHECK(static_cast<int>(m.witness.parts.size()) == m.graph.order());
            CHECK(minor_witness_error(g, m.graph, m.witness) == "");
            CHECK(minor_from_partition(g, m.witness) == m.graph);
        }
        for (std::size_t i = 1; i < ours.size(); ++i) {
            CHECK(ours[i - 1].graph.order() >= ours[i].graph.order());
        }
    }
}

TEST_CASE("all minors match brute force") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const Graph g = oracle::random_graph(n, 0.6, rng);
        const auto ours = all_minors(g);
        CHECK(ours.size() == oracle::brute_all_minors(g).size());
        for (const auto& m : ours) {
            CHECK(partition_error(g, m.witness) == "");
            CHECK(minor_from_partition(g, m.witness) == m.graph);
        }
    }
}

TEST_CASE("down parameters") {
    for (int n = 1; n <= 7; ++n) CHECK(down_parameter(complete_graph(n), ParamKind::MinDegree) == n - 1);
    CHECK(down_parameter(path_graph(6), ParamKind::MinDegree) == 1);
    const Edge star[] = {{0, 1}, {0, 2}, {0, 3}, {3, 4}};
    CHECK(down_parameter(Graph(5, star), ParamKind::MinDegree) == 1);
    CHECK(down_parameter(tight4(), ParamKind::MinDegree) == 5);
    CHECK(down_parameter_by_full_minors(tight4(), ParamKind::MinDegree) == 5);
    CHECK(down_parameter(petersen(), ParamKind::MinDegree) == 4);
    CHECK(down_parameter(cycle_graph(5), ParamKind::Connectivity) == 2);
    CHECK(down_parameter(k222(), ParamKind::Connectivity) == 4);
    CHECK(down_parameter(Graph(1), ParamKind::MinDegree) == 0);
    CHECK_THROWS_AS(down_parameter(Graph(0), ParamKind::MinDegree), PreconditionError);

    std::mt19937 rng(29);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        for (ParamKind f : {ParamKind::MinDegree, ParamKind::Connectivity, ParamKind::Treewidth,
                            ParamKind::Pathwidth}) {
            CHECK(down_parameter(g, f) == down_parameter_by_full_minors(g, f));
        }
    }
}

TEST_CASE("membership") {
    auto r = is_member(complete_graph(4), ParamKind::MinDegree, 2);
    CHECK_FALSE(r.verdict);
    REQUIRE(r.witness);
    CHECK(minor_from_partition(complete_graph(4), *r.witness) == complete_graph(4));
    CHECK(certificate_holds(r));

    r = is_member(cycle_graph(5), ParamKind::MinDegree, 1);
    CHECK_FALSE(r.verdict);
    CHECK(are_isomorphic(minor_from_partition(cycle_graph(5), *r.witness), complete_graph(3)));
    CHECK(certificate_holds(r));

    CHECK(is_member(cycle_graph(5), ParamKind::MinDegree, 2).verdict);
    CHECK(is_member(path_graph(5), ParamKind::Treewidth, 1).verdict);
    CHECK_FALSE(is_member(cycle_graph(5), ParamKind::Treewidth, 1).verdict);
    r = is_member(k222(), ParamKind::Connectivity, 3);
    CHECK_FALSE(r.verdict);
    CHECK(certificate_holds(r));
    CHECK_THROWS_AS(is_member(k222(), ParamKind::MinDegree, -1), PreconditionError);

    const auto j = is_member(cycle_graph(5), ParamKind::MinDegree, 1).to_json();
    CHECK(j["graph"] == "Dhc");
    CHECK(j["param"] == "delta");
    CHECK(j["verdict"] == false);
    CHECK(j["failed_condition"] == "member");
    CHECK(j["witness_parts"].size() == 3);
}

TEST_CASE("obstruction checks") {
    CHECK(is_minimal_obstruction(complete_graph(5), ParamKind::MinDegree, 3).verdict);
    CHECK(is_minimal_obstruction(k222(), ParamKind::MinDegree, 3).verdict);
    auto r = is_minimal_obstruction(complete_graph(5), ParamKind::MinDegree, 2);
    CHECK_FALSE(r.verdict);
    CHECK(r.failed_condition == "D1");
    CHECK(certificate_holds(r));
    CHECK(is_minimal_obstruction(k222(), ParamKind::Treewidth, 3).verdict);
    r = is_minimal_obstruction(cycle_graph(4), ParamKind::Treewidth, 1);
    CHECK_FALSE(r.verdict);
    CHECK(r.failed_condition == "M2");
    CHECK(certificate_holds(r));

    // Disconnected: two K4s at k = 2.
    r = is_minimal_obstruction(disjoint_union(complete_graph(4), complete_graph(4)), ParamKind::MinDegree, 2);
    CHECK(r.failed_condition == "D3");
    CHECK(certificate_holds(r));
    // The two singleton parts have degree 5 and are adjacent.
    const int s[] = {1, 1, 2, 2};
    r = is_minimal_obstruction(complete_multipartite(s), ParamKind::MinDegree, 3);
    CHECK(r.failed_condition == "D4");
    CHECK(certificate_holds(r));
    // Regular with no high vertices, so only the contraction search can reject it.
    r = is_minimal_obstruction(complement(cycle_graph(9)), ParamKind::MinDegree, 5);
    CHECK(r.failed_condition == (r.verdict ? "" : "D2"));
    CHECK(certificate_holds(r));

    CHECK(is_minimal_obstruction(complete_graph(3), ParamKind::Connectivity, 1).verdict);
    CHECK_FALSE(is_minimal_obstruction(cycle_graph(4), ParamKind::Connectivity, 1).verdict);
    CHECK(is_minimal_obstruction(complete_graph(2), ParamKind::MinDegree, 0).verdict);
    CHECK(is_minimal_obstruction(complete_graph(4), ParamKind::Pathwidth, 2).verdict);
}

TEST_CASE("certificates re-validate on random graphs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_graph(n, 0.6, rng);
        for (ParamKind f : {ParamKind::MinDegree, ParamKind::Connectivity, ParamKind::Treewidth,
                            ParamKind::Pathwidth}) {
            const int down = down_parameter_by_full_minors(g, f);
            for (int k = 0; k <= 3; ++k) {
                const auto m = is_member(g, f, k);
                CHECK(m.verdict == (down <= k));
                CHECK(certificate_holds(m));
                const auto o = is_minimal_obstruction(g, f, k);
                CHECK(certificate_holds(o));
            }
        }
    }
}

TEST_CASE("budget exhaustion names the depth") {
    Budget b;
    b.max_states = 3;
    try {
        contraction_minors(complete_graph(6), b);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("deepest level") != std::string::npos);
    }
    b = Budget{};
    b.max_lattice_order = 5;
    CHECK_THROWS_AS(all_minors(complete_graph(6), b), BudgetExceeded);
}
