#pragma once

#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mforge/graph.hpp"

namespace mforge {

/// G+: one new vertex adjacent to every minimum-degree vertex of g.
Graph plus_min_degree(const Graph& g);

/// G^{+p}: p new pairwise nonadjacent vertices, each adjacent to all of V(g).
/// p = 0 returns g.
Graph plus_dominating(const Graph& g, int p);

/// Complement of two disjoint copies of K_{p,p} with p = (k+2)/3; needs
/// k = 1 mod 3. The result is (k+1)-regular on 4p vertices.
Graph tight_regular_example(int k);

/// icosahedron, c5_join_k3bar, k_1222, k_222, petersen, d3.
Graph named_graph(std::string_view name);
std::vector<std::string> named_graph_names();

/// A K_{d+1} with matchings swapped out for one or two horn vertices.
struct HornedGraph {
    Graph graph;
    std::vector<int> horns;

    std::vector<int> originals() const;
};

/// G_{d,4}: originals 0..d, horn d+1 adjacent to 0..3, edges 01 and 23 gone.
HornedGraph single_horned(int d);

/// G_{d,a,b}: originals 0..d; horn d+1 takes M_a = {01, 23, .., (a-2)(a-1)},
/// horn d+2 takes M_b = {(a-1)a, (a+1)(a+2), ..}. Vertex a-1 is in both.
HornedGraph double_horned(int d, int a, int b);

struct HornContractionCheck {
    int minors_checked = 0;
    bool holds = true;
    /// Description of the first contraction that breaks the property.
    std::string counterexample;
};

/// Every contraction of one or two edges that keeps an original vertex leaves
/// some original vertex below degree d; three or more contractions leave at
/// most d vertices, which the check also asserts.
HornContractionCheck check_horned_contractions(const HornedGraph& h, int d);

/// A tree with a bipartition into low vertices (degree <= 2, holding every
/// leaf) and high vertices (degree >= 2).
class LowHighTree {
public:
    /// Throws PreconditionError unless the edges form such a tree.
    LowHighTree(int order, std::vector<Edge> edges);

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    bool is_high(int v) const { return high_[v]; }
    std::vector<int> high_vertices() const;
    std::vector<int> leaves() const;
    /// Index of edge uv in edges().
    int edge_index(int u, int v) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<bool> high_;
};

struct EdgeLabelling {
    /// phi[i] labels edges()[i].
    std::vector<int> phi;
    std::vector<bool> blue;
    int blue_count = 0;
    int red_count = 0;
    int d = 0;
};

/// Blue edges (even distance from root) get 4 per leaf edge plus 2 per red
/// edge in the subtree they hang; a red edge gets d + 2 minus the blue edge
/// before it. `root` must be high.
EdgeLabelling phi_labelling(const LowHighTree& t, int root);

/// Random low-high tree with at most max_order vertices, labels shuffled.
LowHighTree random_low_high_tree(int max_order, std::mt19937_64& rng);

/// The 20-edge tree with 8 leaves and 6 red edges (d = 44).
LowHighTree figure_tree();
/// The 7-edge tree with 4 leaves and 2 red edges (d = 20).
LowHighTree figure_example_tree();

struct TreeGraph {
    int d = 0;
    Graph graph;
};

/// One horned graph per low vertex, horns identified at high vertices.
/// High vertices take ids 0..h-1 in index order, then each low vertex adds
/// its d+1 originals. A degree-2 low vertex's first horn (degree phi) goes
/// to its smaller-index neighbour.
TreeGraph graph_from_low_high_tree(const LowHighTree& t);

/// Works for any block decomposition tree (all leaves in one class, at least
/// one edge). Block-class vertices of degree >= 3 get their edges subdivided,
/// the low-high construction runs on the result, and one extra vertex per
/// block-class bag restores the block structure.
TreeGraph graph_from_block_tree(int order, std::span<const Edge> edges);

} // namespace mforge
