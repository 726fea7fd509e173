#pragma once

#include <cstdint>
#include <vector>

#include "mforge/graph.hpp"

namespace mforge {

/// Graph on at most 64 vertices as one word per row. The working
/// representation inside every exhaustive search.
struct MaskGraph {
    int n = 0;
    std::vector<VertexMask> adj;

    MaskGraph() = default;
    explicit MaskGraph(int order) : n(order), adj(static_cast<std::size_t>(order), 0) {}
    explicit MaskGraph(const Graph& g);

    Graph to_graph() const;

    bool has_edge(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1U; }
    int degree(int v) const { return popcount(adj[static_cast<std::size_t>(v)]); }
    int edge_count() const;
    int min_degree() const;
    void add_edge(int u, int v) {
        adj[static_cast<std::size_t>(u)] |= bit(v);
        adj[static_cast<std::size_t>(v)] |= bit(u);
    }
    void remove_edge(int u, int v) {
        adj[static_cast<std::size_t>(u)] &= ~bit(v);
        adj[static_cast<std::size_t>(v)] &= ~bit(u);
    }
    VertexMask all() const { return low_bits(n); }

    bool operator==(const MaskGraph&) const = default;
};

/// Drops bit `pos` from m, shifting higher bits down by one.
inline VertexMask squeeze_bit(VertexMask m, int pos) {
    const VertexMask low = m & low_bits(pos);
    const VertexMask high = pos >= 63 ? 0 : (m >> (pos + 1)) << pos;
    return low | high;
}

/// Same labelling convention as contract_edge: x = min survives.
MaskGraph contract(const MaskGraph& g, int v, int w);
MaskGraph remove_vertex(const MaskGraph& g, int v);
bool is_connected(const MaskGraph& g);
bool is_connected_within(const MaskGraph& g, VertexMask set);

} // namespace mforge
