#include <algorithm>
#include <random>

#include "doctest.h"
#include "mforge/canonical.hpp"
#include "mforge/characterizations.hpp"
#include "mforge/constructions.hpp"
#include "mforge/errors.hpp"
#include "oracles.hpp"

using namespace mforge;

namespace {

void shapes_of(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        shapes_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> shapes_up_to(int max_n) {
    std::vector<std::vector<int>> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> cur;
        shapes_of(n, n, cur, out);
    }
    return out;
}

int brute_value(const Graph& g, ParamKind kind) {
    switch (kind) {
    case ParamKind::MinDegree:
        return g.min_degree();
    case ParamKind::Connectivity:
        return oracle::brute_kappa(g);
    case ParamKind::Treewidth:
        return oracle::brute_treewidth(g);
    case ParamKind::Pathwidth:
        return oracle::brute_pathwidth(g);
    }
    return 0;
}

const ParamKind kAllKinds[] = {ParamKind::MinDegree, ParamKind::Connectivity, ParamKind::Treewidth,
                               ParamKind::Pathwidth};

} // namespace

TEST_CASE("multipartite predicate examples") {
    const int s1222[] = {1, 2, 2, 2};
    const int s12[] = {1, 2};
    const int s13[] = {1, 3};
    const int s222[] = {2, 2, 2};
    const int s22[] = {2, 2};
    const int s11[] = {1, 1};
    const int s122[] = {1, 2, 2};
    CHECK(cmg_obstruction_predicate(s1222, ParamKind::MinDegree, 4));
    CHECK(cmg_obstruction_predicate(s1222, ParamKind::Connectivity, 4));
    for (int k = 0; k <= 6; ++k) {
        CHECK_FALSE(cmg_obstruction_predicate(s12, ParamKind::MinDegree, k));
        CHECK_FALSE(cmg_obstruction_predicate(s13, ParamKind::MinDegree, k));
    }
    CHECK(cmg_obstruction_predicate(s222, ParamKind::Treewidth, 3));
    CHECK(cmg_obstruction_predicate(s222, ParamKind::Pathwidth, 3));
    CHECK_FALSE(cmg_obstruction_predicate(s22, ParamKind::Treewidth, 1));
    CHECK(cmg_obstruction_predicate(s11, ParamKind::MinDegree, 0));
    CHECK(cmg_obstruction_predicate(s222, ParamKind::MinDegree, 3));
    CHECK_FALSE(cmg_obstruction_predicate(s122, ParamKind::MinDegree, 2));
}

TEST_CASE("multipartite predicate matches the definition") {
    // Independent check: every minor enumerated by brute force.
    for (const auto& shape : shapes_up_to(5)) {
        const Graph g = complete_multipartite(shape);
        for (ParamKind kind : kAllKinds) {
            for (int k = 0; k <= 4; ++k) {
                const bool brute = oracle::brute_minimal_obstruction(
                    g, [&](const Graph& h) { return brute_value(h, kind); }, k);
                CHECK_MESSAGE(cmg_obstruction_predicate(shape, kind, k) == brute,
                              to_string(kind) << " k=" << k << " n=" << g.order());
            }
        }
    }
}

TEST_CASE("multipartite predicate matches the engine") {
    for (const auto& shape : shapes_up_to(7)) {
        const Graph g = complete_multipartite(shape);
        for (ParamKind kind : kAllKinds) {
            for (int k = 0; k <= 6; ++k) {
                const auto r = is_minimal_obstruction(g, kind, k);
                CHECK_MESSAGE(cmg_obstruction_predicate(shape, kind, k) == r.verdict,
                              to_string(kind) << " k=" << k << " n=" << g.order());
            }
        }
    }
}

TEST_CASE("small regular check") {
    for (int k = 1; k <= 5; ++k) {
        const auto r = small_regular_check(complete_graph(k + 2), k);
        CHECK(r.applies);
        REQUIRE(r.member.has_value());
        CHECK(*r.member);
        CHECK(r.min_edge_triangles == k);
        CHECK(r.many_triangles_condition);
    }
    auto r = small_regular_check(named_graph("c5_join_k3bar"), 4);
    CHECK(r.regular);
    CHECK_FALSE(r.applies);
    CHECK_FALSE(r.member.has_value());
    r = small_regular_check(named_graph("icosahedron"), 4);
    CHECK(r.regular);
    CHECK_FALSE(r.applies);
    CHECK(r.min_edge_triangles == 2);
    r = small_regular_check(cycle_graph(5), 3);
    CHECK_FALSE(r.regular);
    CHECK_FALSE(r.applies);

    // Every edge of a (k+1)-regular graph lies in at least 2k+2-n triangles.
    const int s222[] = {2, 2, 2};
    const int s33[] = {3, 3};
    for (const Graph& g : {complete_multipartite(s222), complete_multipartite(s33), named_graph("petersen"),
                           named_graph("icosahedron"), tight_regular_example(4), cycle_graph(7)}) {
        const int k = g.degree(0) - 1;
        const auto v = small_regular_check(g, k);
        CHECK(v.min_edge_triangles >= 2 * k + 2 - g.order());
    }
    const auto t = small_regular_check(tight_regular_example(4), 4);
    CHECK_FALSE(t.applies);
    CHECK_FALSE(is_minimal_obstruction(tight_regular_example(4), ParamKind::MinDegree, 4).verdict);
}

TEST_CASE("add-vertex characterisation over all subsets") {
    const int s222[] = {2, 2, 2};
    struct Case {
        Graph g;
        int k;
    };
    const Case cases[] = {{complete_graph(3), 1}, {complete_graph(4), 2}, {complete_multipartite(s222), 3},
                          {complete_graph(5), 3}};
    for (const auto& c : cases) {
        const int n = c.g.order();
        const auto low = low_degree_vertices(c.g);
        for (std::uint32_t code = 0; code < (1U << n); ++code) {
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
                if ((code >> v) & 1U) s.push_back(v);
            CHECK(add_vertex_characterisation(c.g, s, c.k) == (s == low));
        }
    }
    const int s1222[] = {1, 2, 2, 2};
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    CHECK(are_isomorphic(add_vertex(complete_multipartite(s222), all), complete_multipartite(s1222)));
    CHECK_THROWS_AS(add_vertex_characterisation(cycle_graph(4), all, 1), PreconditionError);
}

TEST_CASE("low-set conditions") {
    const int s222[] = {2, 2, 2};
    const Graph k1222 = plus_dominating(complete_multipartite(s222), 1);
    CHECK(low_set_conditions(k1222, 4));
    CHECK(is_minimal_obstruction(k1222, ParamKind::MinDegree, 4).verdict);
    CHECK(low_set_conditions(plus_dominating(complete_graph(4), 1), 3));
    CHECK_FALSE(low_set_conditions(named_graph("c5_join_k3bar"), 4));
    CHECK_FALSE(low_set_conditions(complete_graph(5), 4));
    // X^{+p} from small regular X, p < n - r - 1.
    const int s33[] = {3, 3};
    for (const Graph& x : {complete_graph(4), complete_multipartite(s222), complete_graph(6)}) {
        const int r = x.degree(0) - 1;
        for (int p = 0; p < x.order() - r - 1; ++p) {
            const Graph g = plus_dominating(x, p);
            const int k = r + p;
            if (!low_set_conditions(g, k)) continue;
            CHECK(is_minimal_obstruction(g, ParamKind::MinDegree, k).verdict);
        }
    }
    CHECK_FALSE(low_set_conditions(complete_multipartite(s33), 2));
}

TEST_CASE("obstruction audit") {
    const int s222[] = {2, 2, 2};
    struct Case {
        Graph g;
        int k;
    };
    const Case cases[] = {{complete_graph(6), 4},        {named_graph("d3"), 4},
                          {complete_graph(4), 2},        {complete_multipartite(s222), 3},
                          {named_graph("icosahedron"), 4}, {complete_graph(3), 1}};
    for (const auto& c : cases) {
        const auto r = audit_obstruction_properties(c.g, c.k);
        CHECK_MESSAGE(r.all_pass(), r.failure);
        CHECK(r.failure.empty());
    }
    const auto d3 = audit_obstruction_properties(named_graph("d3"), 4);
    CHECK(d3.low_count == 12);
    CHECK(d3.sparse_subgraphs_checked > 0);
    CHECK(d3.cliques_checked > 0);
    CHECK_THROWS_AS(audit_obstruction_properties(cycle_graph(5), 1), PreconditionError);
}

namespace {

void check_four_connected(const Graph& g) {
    const auto r = find_4_connected_minor(g);
    CHECK(r.minor.order() >= 5);
    CHECK(vertex_connectivity(r.minor) >= 4);
    CHECK(minor_witness_error(g, r.minor, r.witness).empty());
    CHECK(minor_from_partition(g, r.witness) == r.minor);
}

} // namespace

TEST_CASE("4-connected minors") {
    const int s222[] = {2, 2, 2};
    auto r = find_4_connected_minor(complete_multipartite(s222));
    CHECK(r.minor == complete_multipartite(s222));
    CHECK(r.steps.empty());
    r = find_4_connected_minor(named_graph("icosahedron"));
    CHECK(r.minor == named_graph("icosahedron"));

    // Two K5s sharing a vertex.
    GraphBuilder b(9);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            b.add_edge(i, j);
            b.add_edge(i == 0 ? 0 : i + 4, j + 4);
        }
    const Graph bowtie = std::move(b).build();
    r = find_4_connected_minor(bowtie);
    CHECK(are_isomorphic(r.minor, complete_graph(5)));
    check_four_connected(bowtie);

    check_four_connected(named_graph("d3"));
    check_four_connected(tight_regular_example(4));
    check_four_connected(plus_dominating(cycle_graph(6), 2));

    std::mt19937 rng(4);
    int tested = 0;
    for (int trial = 0; trial < 3000 && tested < 150; ++trial) {
        const int n = 6 + trial % 7;
        const Graph g = oracle::random_graph(n, 0.55, rng);
        if (g.min_degree() < 4) continue;
        ++tested;
        check_four_connected(g);
    }
    CHECK(tested >= 100);

    GraphBuilder kmin(complete_graph(5));
    kmin.remove_edge(0, 1);
    CHECK_THROWS_AS(find_4_connected_minor(std::move(kmin).build()), PreconditionError);
    CHECK_THROWS_AS(find_4_connected_minor(complete_graph(4)), PreconditionError);
}

TEST_CASE("K5 or K222 in 4-connected graphs") {
    auto r = find_k5_or_k222(complete_graph(6));
    CHECK(r.target == "K5");
    CHECK(minor_witness_error(complete_graph(6), r.graph, r.witness).empty());
    r = find_k5_or_k222(named_graph("icosahedron"));
    CHECK(r.target == "K222");
    CHECK(minor_witness_error(named_graph("icosahedron"), r.graph, r.witness).empty());

    GraphBuilder sq(9);
    for (int i = 0; i < 9; ++i) {
        sq.add_edge(i, (i + 1) % 9);
        sq.add_edge(i, (i + 2) % 9);
    }
    const Graph c9sq = std::move(sq).build();
    r = find_k5_or_k222(c9sq);
    CHECK(r.target == "K5");
    CHECK(minor_witness_error(c9sq, r.graph, r.witness).empty());
    CHECK_THROWS_AS(find_k5_or_k222(cycle_graph(6)), PreconditionError);
}
