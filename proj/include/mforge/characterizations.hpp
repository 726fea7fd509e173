#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mforge/config.hpp"
#include "mforge/graph.hpp"
#include "mforge/minor.hpp"
#include "mforge/params.hpp"

namespace mforge {

/// Closed-form test for complete multipartite obstructions. For delta and
/// kappa: one part a plus p >= 2 parts b >= a with k+1 = a + (p-1)b, and
/// a = b when p = 2 (K2 for k = 0). For tw and pw: K_{k+2}, or (k+3)/2 parts
/// of size two when k >= 3 is odd.
bool cmg_obstruction_predicate(std::span<const int> shape, ParamKind kind, int k);

struct SmallRegularVerdict {
    bool regular = false;
    /// (k+1)-regular with 3n < 4(k+2).
    bool applies = false;
    /// Only computed when the hypothesis applies.
    std::optional<bool> member;
    /// Fewest triangles on any edge; -1 for edgeless graphs.
    int min_edge_triangles = -1;
    /// Connected, (k+1)-regular and every edge in at least 2n-2k-5 triangles.
    bool many_triangles_condition = false;
};

SmallRegularVerdict small_regular_check(const Graph& g, int k, const Budget& budget = {});

/// The vertices of minimum degree.
std::vector<int> low_degree_vertices(const Graph& g);

/// Whether g plus a vertex on s is a minimal delta-obstruction for k+1.
/// Throws PreconditionError unless g is one for k.
bool add_vertex_characterisation(const Graph& g, std::span<const int> s, int k,
                                 const Budget& budget = {});

/// The four hypotheses on the low set L: delta = k+1, 3|L| < 4(k+2-p) with
/// p = n - |L|, V-L independent, and every vertex of V-L adjacent to all of L.
bool low_set_conditions(const Graph& g, int k);

struct AuditReport {
    int low_count = 0;
    bool many_lows = false;
    bool common_neighbour = false;
    int sparse_subgraphs_checked = 0;
    bool sparse_subgraph = false;
    int cliques_checked = 0;
    bool clique_neighbour = false;
    /// First failure, if any.
    std::string failure;

    bool all_pass() const { return many_lows && common_neighbour && sparse_subgraph && clique_neighbour; }
};

/// Structural properties every minimal delta-obstruction for k has. Connected
/// induced subgraphs are checked up to five vertices. Throws PreconditionError
/// unless g is such an obstruction.
AuditReport audit_obstruction_properties(const Graph& g, int k, const Budget& budget = {});

struct FourConnectedMinor {
    Graph minor;
    BranchPartition witness;
    /// One line per reduction step.
    std::vector<std::string> steps;
};

/// A 4-connected minor by the inductive reduction: contract at low degree,
/// cut at 1- and 2-separators, clear the degree-3 clique, then fold one side
/// of each 3-separator onto a triangle. Needs n >= 5 and the vertices of
/// degree at most 3 to form a clique.
FourConnectedMinor find_4_connected_minor(const Graph& g);

struct K5OrK222 {
    /// "K5" or "K222".
    std::string target;
    Graph graph;
    BranchPartition witness;
};

/// Direct minor search for K5, then K_{2,2,2}. Needs a 4-connected input;
/// throws std::logic_error if neither is found.
K5OrK222 find_k5_or_k222(const Graph& g, const Budget& budget = {});

} // namespace mforge
