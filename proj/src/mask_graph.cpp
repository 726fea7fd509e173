#include "mforge/mask_graph.hpp"

#include <algorithm>

#include "mforge/errors.hpp"

namespace mforge {

MaskGraph::MaskGraph(const Graph& g) : MaskGraph(g.order()) {
    if (g.order() > kMaskLimit) {
        throw PreconditionError("graph of order " + std::to_string(g.order()) +
                                " exceeds the 64-vertex search limit");
    }
    for (int v = 0; v < n; ++v) {
        adj[static_cast<std::size_t>(v)] = g.mask(v);
    }
}

Graph MaskGraph::to_graph() const {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for_each_bit(adj[static_cast<std::size_t>(u)] & ~low_bits(u + 1), [&](int v) { b.add_edge(u, v); });
    }
    return std::move(b).build();
}

int MaskGraph::edge_count() const {
    int s = 0;
    for (auto r : adj) {
        s += popcount(r);
    }
    return s / 2;
}

int MaskGraph::min_degree() const {
    int best = n;
    for (auto r : adj) {
        best = std::min(best, popcount(r));
    }
    return n == 0 ? 0 : best;
}

MaskGraph contract(const MaskGraph& g, int v, int w) {
    const int keep = std::min(v, w);
    const int gone = std::max(v, w);
    MaskGraph out(g.n - 1);
    const VertexMask merged = (g.adj[static_cast<std::size_t>(keep)] | g.adj[static_cast<std::size_t>(gone)]) &
                              ~(bit(keep) | bit(gone));
    for (int x = 0, y = 0; x < g.n; ++x) {
        if (x == gone) {
            continue;
        }
        VertexMask r = x == keep ? merged : g.adj[static_cast<std::size_t>(x)];
        if ((r >> gone) & 1U) {
            r = (r & ~bit(gone)) | bit(keep);
        }
        out.adj[static_cast<std::size_t>(y++)] = squeeze_bit(r, gone);
    }
    return out;
}

MaskGraph remove_vertex(const MaskGraph& g, int v) {
    MaskGraph out(g.n - 1);
    for (int x = 0, y = 0; x < g.n; ++x) {
        if (x != v) {
            out.adj[static_cast<std::size_t>(y++)] = squeeze_bit(g.adj[static_cast<std::size_t>(x)] & ~bit(v), v);
        }
    }
    return out;
}

bool is_connected_within(const MaskGraph& g, VertexMask set) {
    if (set == 0) {
        return false;
    }
    VertexMask seen = set & (~set + 1);
    VertexMask frontier = seen;
    while (frontier != 0) {
        VertexMask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.adj[static_cast<std::size_t>(v)]; });
        next &= set & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == set;
}

bool is_connected(const MaskGraph& g) {
    return is_connected_within(g, g.all());
}

} // namespace mforge
