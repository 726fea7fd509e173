#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mforge/config.hpp"
#include "mforge/graph.hpp"
#include "mforge/minor.hpp"
#include "mforge/params.hpp"

namespace mforge {

struct GraphFilter {
    bool connected_only = false;
    /// -1 for no regularity requirement.
    int regular_degree = -1;
    int min_degree = 0;
};

/// One canonical representative per isomorphism class of n-vertex graphs
/// passing the filter, sorted by canonical form. Vertices are added one at a
/// time and a child is kept only when deleting its canonically last vertex
/// gives back the parent's class. Throws BudgetExceeded past
/// budget.max_enumeration_order.
std::vector<Graph> enumerate_graphs(int n, const GraphFilter& filter = {}, const Budget& budget = {});

struct SearchSpec {
    ParamKind kind = ParamKind::MinDegree;
    int k = 0;
    int max_order = 1;
    /// Extra restrictions on candidates, on top of the ones every obstruction
    /// satisfies anyway (connected; minimum degree k+1 for delta and kappa).
    GraphFilter filter;

    nlohmann::json to_json() const;
};

struct SearchResult {
    SearchSpec spec;
    /// Sorted by order, then size, then graph6 of the canonical form.
    std::vector<Graph> obstructions;
    /// Every obstruction with at most this many vertices is listed.
    int complete_up_to = 0;
    std::size_t candidates = 0;

    /// {spec, count, complete_up_to}.
    nlohmann::json manifest() const;
    /// One graph6 line per obstruction.
    std::string graph6_lines() const;
};

/// All minimal obstructions for (kind, k) with at most max_order vertices.
/// Candidates are verified in parallel over budget.jobs workers; the output
/// does not depend on the worker count.
SearchResult obstruction_search(const SearchSpec& spec, const Budget& budget = {});

struct RegularLevel {
    int n = 0;
    std::vector<Graph> graphs;
    /// Index-aligned with graphs.
    std::vector<bool> member;
};

struct TightCheck {
    Graph graph;
    /// K_{3p} with its witness, for p = (k+2)/3.
    Graph clique;
    std::optional<BranchPartition> clique_witness;
    bool member = false;
};

struct RegularSweepReport {
    int k = 0;
    std::vector<RegularLevel> levels;
    /// Present when k = 1 mod 3.
    std::optional<TightCheck> tight;

    bool all_members() const;
    nlohmann::json to_json() const;
};

/// Every (k+1)-regular graph with 3n < 4(k+2), checked for membership in the
/// minimal delta-obstructions for k; for k = 1 mod 3 also the tight example.
RegularSweepReport regular_family_sweep(int k, const Budget& budget = {});

} // namespace mforge
