#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mforge/graph.hpp"
#include "mforge/mask_graph.hpp"

namespace mforge {

/// Byte string identifying an isomorphism class: equal iff isomorphic.
struct CanonicalForm {
    std::string bytes;

    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabelling {
    CanonicalForm form;
    /// order[i] is the input vertex placed at canonical position i.
    std::vector<int> order;
    /// Automorphisms discovered during the search, as vertex maps.
    std::vector<std::vector<int>> generators;
};

/// Partition refinement plus individualisation search with automorphism
/// pruning. Accepts graphs up to 64 vertices.
CanonicalLabelling canonical_labelling(const MaskGraph& g);

CanonicalForm canonical_form(const MaskGraph& g);
CanonicalForm canonical_form(const Graph& g);

/// The representative of g's class with vertices renumbered canonically.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept { return std::hash<std::string>{}(f.bytes); }
};

} // namespace mforge
