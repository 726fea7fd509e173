#include "mforge/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mforge/errors.hpp"

namespace mforge {

namespace {

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) {
        throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(g.order()));
    }
}

} // namespace

Graph::Graph(int n) : n_(n), stride_((static_cast<std::size_t>(std::max(n, 0)) + 63) / 64) {
    if (n < 0) {
        throw PreconditionError("negative vertex count");
    }
    words_.assign(stride_ * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(*this, u);
        check_vertex(*this, v);
        if (u == v) {
            throw PreconditionError("loop at vertex " + std::to_string(u));
        }
        set(u, v, true);
    }
}

void Graph::set(int u, int v, bool on) {
    const bool had = has_edge(u, v);
    if (had == on) {
        return;
    }
    auto& a = words_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v) / 64];
    auto& b = words_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(u) / 64];
    const auto bu = std::uint64_t{1} << (u % 64);
    const auto bv = std::uint64_t{1} << (v % 64);
    if (on) {
        a |= bv;
        b |= bu;
        ++m_;
    } else {
        a &= ~bv;
        b &= ~bu;
        --m_;
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        return false;
    }
    return (words_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
}

std::span<const std::uint64_t> Graph::row(int v) const {
    return {words_.data() + static_cast<std::size_t>(v) * stride_, stride_};
}

int Graph::degree(int v) const {
    int d = 0;
    for (auto w : row(v)) {
        d += popcount(w);
    }
    return d;
}

std::vector<int> Graph::neighbours(int v) const {
    std::vector<int> out;
    auto r = row(v);
    for (std::size_t i = 0; i < r.size(); ++i) {
        for_each_bit(r[i], [&](int b) { out.push_back(static_cast<int>(i * 64) + b); });
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v : neighbours(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
        d[static_cast<std::size_t>(v)] = degree(v);
    }
    return d;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) {
        best = std::min(best, degree(v));
    }
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) {
        best = std::max(best, degree(v));
    }
    return best;
}

int Graph::common_neighbour_count(int u, int v) const {
    auto a = row(u);
    auto b = row(v);
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        c += popcount(a[i] & b[i]);
    }
    return c;
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    check_vertex(g_, u);
    check_vertex(g_, v);
    if (u == v) {
        throw PreconditionError("loop at vertex " + std::to_string(u));
    }
    g_.set(u, v, true);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
    check_vertex(g_, u);
    check_vertex(g_, v);
    if (u != v) {
        g_.set(u, v, false);
    }
    return *this;
}

Graph contract_edge(const Graph& g, int v, int w) {
    check_vertex(g, v);
    check_vertex(g, w);
    if (!g.has_edge(v, w)) {
        throw PreconditionError("contract_edge: " + std::to_string(v) + "-" + std::to_string(w) +
                                " is not an edge");
    }
    const int keep = std::min(v, w);
    const int gone = std::max(v, w);
    auto relabel_of = [&](int x) { return x == gone ? keep : (x > gone ? x - 1 : x); };
    GraphBuilder b(g.order() - 1);
    for (auto [x, y] : g.edges()) {
        const int a = relabel_of(x);
        const int c = relabel_of(y);
        if (a != c) {
            b.add_edge(a, c);
        }
    }
    return std::move(b).build();
}

Graph delete_edge(const Graph& g, int v, int w) {
    if (!g.has_edge(v, w)) {
        throw PreconditionError("delete_edge: " + std::to_string(v) + "-" + std::to_string(w) +
                                " is not an edge");
    }
    return std::move(GraphBuilder(g).remove_edge(v, w)).build();
}

Graph delete_vertex(const Graph& g, int v) {
    check_vertex(g, v);
    std::vector<int> keep;
    for (int x = 0; x < g.order(); ++x) {
        if (x != v) {
            keep.push_back(x);
        }
    }
    return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(g, vertices[i]);
        if (index[static_cast<std::size_t>(vertices[i])] != -1) {
            throw PreconditionError("induced_subgraph: repeated vertex");
        }
        index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    }
    GraphBuilder b(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (int y : g.neighbours(vertices[i])) {
            const int j = index[static_cast<std::size_t>(y)];
            if (j > static_cast<int>(i)) {
                b.add_edge(static_cast<int>(i), j);
            }
        }
    }
    return std::move(b).build();
}

Graph quotient(const Graph& g, std::span<const std::vector<int>> parts) {
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int v : parts[i]) {
            check_vertex(g, v);
            if (owner[static_cast<std::size_t>(v)] != -1) {
                throw PreconditionError("quotient: parts overlap at vertex " + std::to_string(v));
            }
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    GraphBuilder b(static_cast<int>(parts.size()));
    for (auto [u, v] : g.edges()) {
        const int a = owner[static_cast<std::size_t>(u)];
        const int c = owner[static_cast<std::size_t>(v)];
        if (a >= 0 && c >= 0 && a != c) {
            b.add_edge(a, c);
        }
    }
    return std::move(b).build();
}

Graph add_vertex(const Graph& g, std::span<const int> attach) {
    GraphBuilder b(g.order() + 1);
    for (auto [u, v] : g.edges()) {
        b.add_edge(u, v);
    }
    for (int v : attach) {
        b.add_edge(g.order(), v);
    }
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    GraphBuilder b(g.order());
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder out(a.order() + b.order());
    for (auto [u, v] : a.edges()) {
        out.add_edge(u, v);
    }
    for (auto [u, v] : b.edges()) {
        out.add_edge(u + a.order(), v + a.order());
    }
    return std::move(out).build();
}

Graph join(const Graph& a, const Graph& b) {
    GraphBuilder out(disjoint_union(a, b));
    for (int u = 0; u < a.order(); ++u) {
        for (int v = 0; v < b.order(); ++v) {
            out.add_edge(u, a.order() + v);
        }
    }
    return std::move(out).build();
}

Graph complete_graph(int n) {
    return complement(Graph(n));
}

Graph empty_graph(int n) {
    return Graph(n);
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw PreconditionError("cycle needs at least 3 vertices");
    }
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) {
        b.add_edge(i, (i + 1) % n);
    }
    return std::move(b).build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) {
        b.add_edge(i, i + 1);
    }
    return std::move(b).build();
}

Graph complete_multipartite(std::span<const int> shape) {
    if (shape.empty()) {
        throw PreconditionError("complete_multipartite: empty shape");
    }
    std::vector<int> part;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i] < 1) {
            throw PreconditionError("complete_multipartite: part sizes must be positive");
        }
        part.insert(part.end(), static_cast<std::size_t>(shape[i]), static_cast<int>(i));
    }
    const int n = static_cast<int>(part.size());
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) {
                b.add_edge(u, v);
            }
        }
    }
    return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order()) {
        throw PreconditionError("relabel: permutation size mismatch");
    }
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) {
        b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
    return std::move(b).build();
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) {
            continue;
        }
        std::vector<int> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (int w : g.neighbours(comp[i])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() > 0 && components(g).size() == 1;
}

bool is_regular(const Graph& g, int r) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != r) {
            return false;
        }
    }
    return true;
}

std::vector<int> multipartite_shape(const Graph& g) {
    // Complete multipartite iff non-adjacency (plus equality) is an equivalence relation.
    const int n = g.order();
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    std::vector<int> sizes;
    for (int v = 0; v < n; ++v) {
        if (cls[static_cast<std::size_t>(v)] != -1) {
            continue;
        }
        const int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        for (int w = v; w < n; ++w) {
            if (w == v || !g.has_edge(v, w)) {
                if (cls[static_cast<std::size_t>(w)] != -1) {
                    return {};
                }
                cls[static_cast<std::size_t>(w)] = id;
                ++sizes.back();
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool same = cls[static_cast<std::size_t>(u)] == cls[static_cast<std::size_t>(v)];
            if (same == g.has_edge(u, v)) {
                return {};
            }
        }
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<int> mask_to_vector(VertexMask m) {
    std::vector<int> out;
    for_each_bit(m, [&](int v) { out.push_back(v); });
    return out;
}

VertexMask vector_to_mask(std::span<const int> vs) {
    VertexMask m = 0;
    for (int v : vs) {
        if (v < 0 || v >= kMaskLimit) {
            throw PreconditionError("vertex " + std::to_string(v) + " exceeds mask width");
        }
        m |= bit(v);
    }
    return m;
}

} // namespace mforge
