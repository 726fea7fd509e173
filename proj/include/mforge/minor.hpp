#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mforge/config.hpp"
#include "mforge/graph.hpp"
#include "mforge/params.hpp"

namespace mforge {

/// Disjoint connected branch sets of a host graph. Part i becomes vertex i of
/// the minor. Contraction minors cover V; general minors need not.
struct BranchPartition {
    std::vector<std::vector<int>> parts;
    /// Minor edges (between part indices) that were deleted after contracting.
    /// Empty for contraction minors and for has_minor witnesses.
    std::vector<Edge> deleted_edges;

    bool operator==(const BranchPartition&) const = default;
};

/// The minor a partition describes: quotient over the parts, minus deleted_edges.
Graph minor_from_partition(const Graph& host, const BranchPartition& w);

/// Empty when every part is nonempty, connected, disjoint from the others and
/// every deleted edge is an edge of the quotient.
std::string partition_error(const Graph& host, const BranchPartition& w);

/// Empty when w models `minor` in `host`: a valid partition with one part per
/// minor vertex and every minor edge realised between the matching parts.
std::string minor_witness_error(const Graph& host, const Graph& minor, const BranchPartition& w);

struct MinorSearchResult {
    bool found = false;
    BranchPartition witness;
};

/// Decides whether h is a minor of g; on success the witness maps vertex i of
/// h to witness.parts[i].
MinorSearchResult has_minor(const Graph& g, const Graph& h, const Budget& budget = {});

struct MinorEntry {
    Graph graph;
    BranchPartition witness;
};

/// One representative per isomorphism class of proper contraction minors,
/// ordered by vertex count (descending), then canonical form. Works on
/// disconnected graphs too: parts never join different components.
std::vector<MinorEntry> contraction_minors(const Graph& g, const Budget& budget = {});

/// One representative per isomorphism class of every minor of g, g included,
/// the null graph excluded. Exhaustive; meant for small hosts and oracles.
std::vector<MinorEntry> all_minors(const Graph& g, const Budget& budget = {});

/// Some contraction minor of g (g itself allowed unless `proper`) with
/// minimum degree at least t, or nullopt if none exists.
std::optional<BranchPartition> contraction_with_min_degree(const Graph& g, int t, bool proper,
                                                           const Budget& budget = {});

/// Maximum of f over all minors of g. Minimum degree uses targeted
/// contraction search; treewidth and pathwidth are minor-monotone; connectivity
/// walks the minor lattice with a degree bound.
int down_parameter(const Graph& g, ParamKind kind, const Budget& budget = {});

/// Brute-force reference: evaluates f on every minor from all_minors.
int down_parameter_by_full_minors(const Graph& g, ParamKind kind, const Budget& budget = {});

struct MembershipReport {
    Graph graph;
    ParamKind param = ParamKind::MinDegree;
    int k = 0;
    bool verdict = false;
    /// "D1".."D4" for minimum-degree obstruction checks, "M1" (value) or "M2"
    /// (a proper minor also violates) for the other parameters, "member" for
    /// failed membership. Empty on positive verdicts.
    std::string failed_condition;
    std::optional<BranchPartition> witness;

    nlohmann::json to_json() const;
};

/// Is every minor of g at most k under f?
MembershipReport is_member(const Graph& g, ParamKind kind, int k, const Budget& budget = {});

/// Is g a minor-minimal graph outside the class (f, k)?
MembershipReport is_minimal_obstruction(const Graph& g, ParamKind kind, int k,
                                        const Budget& budget = {});

/// Rebuilds the certificate minor and checks f(minor) >= k+1. Reports without
/// a witness are accepted only when positive or failing D1/M1.
bool certificate_holds(const MembershipReport& r, const Budget& budget = {});

} // namespace mforge
