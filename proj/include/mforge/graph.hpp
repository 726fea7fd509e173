#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mforge {

using Edge = std::pair<int, int>;
using VertexMask = std::uint64_t;

/// Largest order the bitmask-based search engines accept.
inline constexpr int kMaskLimit = 64;

class GraphBuilder;

/// Simple undirected graph on vertices 0..n-1, stored as fixed-width bit rows.
///
/// Values are immutable once built; every editing operation returns a new
/// graph. Use GraphBuilder to assemble one edge by edge.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbours(int v) const;
    std::vector<Edge> edges() const;
    std::vector<int> degrees() const;

    int min_degree() const;
    int max_degree() const;

    /// Neighbourhood of v as a single word; only valid when order() <= 64.
    VertexMask mask(int v) const { return words_[static_cast<std::size_t>(v) * stride_]; }
    std::span<const std::uint64_t> row(int v) const;

    int common_neighbour_count(int u, int v) const;

    bool operator==(const Graph& other) const = default;

private:
    friend class GraphBuilder;

    void set(int u, int v, bool on);

    int n_ = 0;
    int m_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> words_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

    /// Adds uv; loops are rejected and repeated edges are ignored.
    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    int order() const { return g_.order(); }

    Graph build() && { return std::move(g_); }
    Graph build() const& { return g_; }

private:
    Graph g_;
};

// Editing. All return fresh graphs.

/// Contracts edge vw. The merged vertex takes label min(v, w); vertices above
/// max(v, w) shift down by one. Parallel edges collapse to one.
Graph contract_edge(const Graph& g, int v, int w);
Graph delete_edge(const Graph& g, int v, int w);
/// Removes v; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, int v);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
/// Quotient by a family of disjoint vertex sets: part i becomes vertex i,
/// adjacent to part j when some edge joins them. Vertices outside every part
/// are dropped.
Graph quotient(const Graph& g, std::span<const std::vector<int>> parts);
/// Adds a new vertex (label n) adjacent to `attach`.
Graph add_vertex(const Graph& g, std::span<const int> attach);

// Standard families and products.

Graph complement(const Graph& g);
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Parts are laid out consecutively in the order given.
Graph complete_multipartite(std::span<const int> shape);
Graph relabel(const Graph& g, std::span<const int> perm);

// Structure.

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
bool is_regular(const Graph& g, int r);
/// Part sizes if g is complete multipartite (sorted ascending), else empty.
std::vector<int> multipartite_shape(const Graph& g);

/// Iterates set bits of a word, low to high.
template <typename F>
void for_each_bit(VertexMask m, F&& f) {
    while (m != 0) {
        f(__builtin_ctzll(m));
        m &= m - 1;
    }
}

inline int popcount(VertexMask m) { return __builtin_popcountll(m); }
inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline VertexMask low_bits(int n) { return n >= 64 ? ~VertexMask{0} : (bit(n) - 1); }

std::vector<int> mask_to_vector(VertexMask m);
VertexMask vector_to_mask(std::span<const int> vs);

} // namespace mforge
