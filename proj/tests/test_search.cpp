#include <algorithm>
#include <set>

#include "doctest.h"
#include "mforge/canonical.hpp"
#include "mforge/constructions.hpp"
#include "mforge/errors.hpp"
#include "mforge/graph_io.hpp"
#include "mforge/search.hpp"
#include "oracles.hpp"

using namespace mforge;

namespace {

// Isomorphism classes of labelled graphs on n vertices, by brute certificate.
std::set<std::string> brute_classes(int n, const GraphFilter& f) {
    std::set<std::string> out;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        const Graph g = oracle::from_code(n, code);
        bool ok = !f.connected_only || is_connected(g);
        for (int v = 0; v < n && ok; ++v) {
            ok = g.degree(v) >= f.min_degree && (f.regular_degree < 0 || g.degree(v) == f.regular_degree);
        }
        if (ok) out.insert(oracle::brute_certificate(g));
    }
    return out;
}

std::vector<std::string> lines(const SearchResult& r) {
    std::vector<std::string> out;
    for (const auto& g : r.obstructions) out.push_back(to_graph6(g));
    return out;
}

} // namespace

TEST_CASE("enumeration matches brute-force classes") {
    const GraphFilter filters[] = {{}, {true, -1, 0}, {false, 2, 0}, {false, -1, 2}, {true, -1, 3}};
    for (int n = 1; n <= 6; ++n) {
        for (const auto& f : filters) {
            const auto got = enumerate_graphs(n, f);
            const auto want = brute_classes(n, f);
            CHECK(got.size() == want.size());
            std::set<std::string> seen;
            for (const auto& g : got) seen.insert(oracle::brute_certificate(g));
            CHECK(seen == want);
        }
    }
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_graphs(1).size() == 1);
    CHECK(enumerate_graphs(4).size() == 11);
    CHECK(enumerate_graphs(7).size() == 1044);
    CHECK(enumerate_graphs(7, {true, -1, 0}).size() == 853);
    GraphFilter cubic;
    cubic.regular_degree = 3;
    const auto six = enumerate_graphs(6, cubic);
    REQUIRE(six.size() == 2);
    const int s33[] = {3, 3};
    const Graph prism = complement(cycle_graph(6));
    CHECK(std::any_of(six.begin(), six.end(), [&](const Graph& g) { return are_isomorphic(g, complete_multipartite(s33)); }));
    CHECK(std::any_of(six.begin(), six.end(), [&](const Graph& g) { return are_isomorphic(g, prism); }));
    CHECK(enumerate_graphs(8, cubic).size() == 6);
    CHECK(enumerate_graphs(8, {true, 3, 0}).size() == 5);
    CHECK(enumerate_graphs(10, cubic).size() == 21);

    Budget small;
    small.max_enumeration_order = 5;
    CHECK_THROWS_AS(enumerate_graphs(6, {}, small), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_graphs(0), PreconditionError);
}

TEST_CASE("enumeration is independent of worker count") {
    Budget four;
    four.jobs = 4;
    GraphFilter f;
    f.min_degree = 3;
    const auto a = enumerate_graphs(8, f);
    const auto b = enumerate_graphs(8, f, four);
    CHECK(a == b);
}

TEST_CASE("obstruction search reproduces small sets") {
    auto r = obstruction_search({ParamKind::MinDegree, 0, 4, {}});
    CHECK(lines(r) == std::vector<std::string>{to_graph6(complete_graph(2))});
    r = obstruction_search({ParamKind::MinDegree, 1, 5, {}});
    REQUIRE(r.obstructions.size() == 1);
    CHECK(are_isomorphic(r.obstructions[0], complete_graph(3)));
    r = obstruction_search({ParamKind::MinDegree, 2, 6, {}});
    REQUIRE(r.obstructions.size() == 1);
    CHECK(are_isomorphic(r.obstructions[0], complete_graph(4)));
    r = obstruction_search({ParamKind::MinDegree, 3, 7, {}});
    REQUIRE(r.obstructions.size() == 2);
    const int s222[] = {2, 2, 2};
    CHECK(are_isomorphic(r.obstructions[0], complete_graph(5)));
    CHECK(are_isomorphic(r.obstructions[1], complete_multipartite(s222)));
    CHECK(r.complete_up_to == 7);
    const auto m = r.manifest();
    CHECK(m["count"] == 2);
    CHECK(m["complete_up_to"] == 7);
    CHECK(m["spec"]["param"] == "delta");
    CHECK(r.graph6_lines() == to_graph6(r.obstructions[0]) + "\n" + to_graph6(r.obstructions[1]) + "\n");
}

TEST_CASE("obstruction search for other parameters") {
    auto r = obstruction_search({ParamKind::Treewidth, 1, 6, {}});
    REQUIRE(r.obstructions.size() == 1);
    CHECK(are_isomorphic(r.obstructions[0], complete_graph(3)));
    r = obstruction_search({ParamKind::Treewidth, 2, 6, {}});
    REQUIRE(r.obstructions.size() == 1);
    CHECK(are_isomorphic(r.obstructions[0], complete_graph(4)));
    r = obstruction_search({ParamKind::Connectivity, 1, 6, {}});
    REQUIRE(r.obstructions.size() == 1);
    CHECK(are_isomorphic(r.obstructions[0], complete_graph(3)));
    // Pathwidth at most one: the triangle and the subdivided claw.
    r = obstruction_search({ParamKind::Pathwidth, 1, 7, {}});
    REQUIRE(r.obstructions.size() == 2);
    CHECK(are_isomorphic(r.obstructions[0], complete_graph(3)));
    GraphBuilder spider(7);
    spider.add_edge(0, 1).add_edge(1, 2).add_edge(0, 3).add_edge(3, 4).add_edge(0, 5).add_edge(5, 6);
    CHECK(are_isomorphic(r.obstructions[1], std::move(spider).build()));
}

TEST_CASE("obstruction search output properties") {
    Budget four;
    four.jobs = 4;
    const SearchSpec spec{ParamKind::MinDegree, 4, 8, {}};
    const auto a = obstruction_search(spec);
    const auto b = obstruction_search(spec, four);
    CHECK(a.graph6_lines() == b.graph6_lines());
    CHECK(a.manifest() == b.manifest());
    // K6, K_{1,2,2,2}, C5 join 3K1 all fit in eight vertices.
    for (const char* name : {"k_1222", "c5_join_k3bar"}) {
        const Graph g = named_graph(name);
        CHECK(std::any_of(a.obstructions.begin(), a.obstructions.end(),
                          [&](const Graph& h) { return are_isomorphic(g, h); }));
    }
    CHECK(std::any_of(a.obstructions.begin(), a.obstructions.end(),
                      [&](const Graph& h) { return are_isomorphic(complete_graph(6), h); }));
    for (std::size_t i = 0; i < a.obstructions.size(); ++i) {
        CHECK(is_minimal_obstruction(a.obstructions[i], ParamKind::MinDegree, 4).verdict);
        for (std::size_t j = 0; j < a.obstructions.size(); ++j) {
            if (i == j || a.obstructions[i].order() > a.obstructions[j].order()) continue;
            CHECK_FALSE(has_minor(a.obstructions[j], a.obstructions[i]).found);
        }
    }
}

TEST_CASE("regular family sweep") {
    auto r = regular_family_sweep(2);
    REQUIRE(r.levels.size() == 2);
    REQUIRE(r.levels[0].graphs.size() == 1);
    CHECK(r.levels[1].graphs.empty());
    CHECK(are_isomorphic(r.levels[0].graphs[0], complete_graph(4)));
    CHECK(r.all_members());
    CHECK_FALSE(r.tight.has_value());

    r = regular_family_sweep(4);
    CHECK(r.all_members());
    REQUIRE(r.levels.size() == 2);
    CHECK(r.levels[0].n == 6);
    CHECK(r.levels[0].graphs.size() == 1);
    CHECK(r.levels[1].n == 7);
    REQUIRE(r.tight.has_value());
    CHECK_FALSE(r.tight->member);
    REQUIRE(r.tight->clique_witness.has_value());
    CHECK(r.tight->clique.order() == 6);
    CHECK(minor_witness_error(r.tight->graph, r.tight->clique, *r.tight->clique_witness).empty());
    CHECK(r.to_json()["tight"]["member"] == false);
}
