#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mforge/config.hpp"
#include "mforge/graph.hpp"

namespace mforge {

enum class ParamKind { MinDegree, Connectivity, Treewidth, Pathwidth };

/// "delta", "kappa", "tw", "pw".
std::string_view to_string(ParamKind kind);
/// Accepts the short names above plus "min-degree", "connectivity",
/// "treewidth", "pathwidth".
ParamKind param_from_string(std::string_view name);

// Connectivity.

/// Maximum number of internally disjoint s-t paths for nonadjacent s, t.
int local_vertex_connectivity(const Graph& g, int s, int t);

/// Size of a minimum vertex cut; n-1 for complete graphs, 0 if disconnected.
int vertex_connectivity(const Graph& g);

/// A minimum vertex cut. Empty for complete graphs and for disconnected graphs.
std::vector<int> minimum_vertex_separator(const Graph& g);

/// Up to `limit` vertex-disjoint paths from `sources` to `sinks`, each path
/// listed source-end first. Paths share no vertex, endpoints included.
std::vector<std::vector<int>> disjoint_paths(const Graph& g, std::span<const int> sources,
                                             std::span<const int> sinks, int limit);

int edge_connectivity(const Graph& g);

// Cliques and independent sets (exact branch-and-bound).

std::vector<int> maximum_clique(const Graph& g, const Budget& budget = {});
int clique_number(const Graph& g, const Budget& budget = {});
int independence_number(const Graph& g, const Budget& budget = {});

// Width parameters.

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<Edge> tree_edges;

    int width() const;
};

/// Empty string when valid; otherwise a description of the first violation.
std::string decomposition_error(const Graph& g, const TreeDecomposition& td);
bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td);
bool is_path_shaped(const TreeDecomposition& td);

struct WidthResult {
    int value = 0;
    TreeDecomposition witness;
};

/// Exact treewidth by DP over eliminated-vertex subsets.
WidthResult treewidth(const Graph& g, const Budget& budget = {});
/// Exact pathwidth (vertex separation number) by DP over placed prefixes.
WidthResult pathwidth(const Graph& g, const Budget& budget = {});

/// f(g) for any ParamKind.
int evaluate(const Graph& g, ParamKind kind, const Budget& budget = {});

// Brambles.

struct Bramble {
    std::vector<std::vector<int>> elements;
};

/// Throws InvalidBramble naming the first disconnected element or the first
/// non-touching pair.
void validate_bramble(const Graph& g, const Bramble& b);

/// Minimum number of vertices meeting every set (exact branch-and-bound).
int minimum_hitting_set(int n, std::span<const VertexMask> sets, std::vector<int>* witness = nullptr);

/// Validates, then returns the bramble's order.
int bramble_order(const Graph& g, const Bramble& b);

/// E(g) together with the singletons of `clique`.
Bramble edge_clique_bramble(const Graph& g, std::span<const int> clique);

struct CmgEqualities {
    int n = 0;
    int alpha = 0;
    int kappa = 0;
    int delta = 0;
    int tw = 0;
    int pw = 0;
    bool all_equal = false;
};

/// Computes the four parameters of K_shape independently and compares them
/// with n - max part.
CmgEqualities cmg_equalities_check(std::span<const int> shape, const Budget& budget = {});

} // namespace mforge
