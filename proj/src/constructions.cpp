#include "mforge/constructions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mforge/errors.hpp"
#include "mforge/mask_graph.hpp"

namespace mforge {

Graph plus_min_degree(const Graph& g) {
    if (g.order() == 0) {
        throw PreconditionError("G+ needs a nonempty graph");
    }
    std::vector<int> low;
    const int delta = g.min_degree();
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == delta) low.push_back(v);
    }
    return add_vertex(g, low);
}

Graph plus_dominating(const Graph& g, int p) {
    if (p < 0) {
        throw PreconditionError("p must be non-negative");
    }
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    Graph out = g;
    for (int i = 0; i < p; ++i) {
        out = add_vertex(out, all);
    }
    return out;
}

Graph tight_regular_example(int k) {
    if (k < 1 || k % 3 != 1) {
        throw PreconditionError("tight example needs k = 1 mod 3, got " + std::to_string(k));
    }
    const int p = (k + 2) / 3;
    const int shape[] = {p, p};
    const Graph kpp = complete_multipartite(shape);
    return complement(disjoint_union(kpp, kpp));
}

namespace {

Graph icosahedron() {
    // Apex 0, upper ring 1..5, lower ring 6..10, apex 11.
    GraphBuilder b(12);
    for (int i = 1; i <= 5; ++i) {
        const int next = i % 5 + 1;
        b.add_edge(0, i);
        b.add_edge(11, 5 + i);
        b.add_edge(i, next);
        b.add_edge(5 + i, 5 + next);
        b.add_edge(i, 5 + i);
        b.add_edge(i, 5 + next);
    }
    return std::move(b).build();
}

Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return std::move(b).build();
}

// Two copies of G_{5,4} sharing their horn: originals 0..5 and 6..11, horn 12.
Graph d3() {
    const HornedGraph h = single_horned(5);
    GraphBuilder b(13);
    for (int copy = 0; copy < 2; ++copy) {
        auto id = [&](int v) { return v == 6 ? 12 : 6 * copy + v; };
        for (auto [u, v] : h.graph.edges()) {
            b.add_edge(id(u), id(v));
        }
    }
    return std::move(b).build();
}

} // namespace

Graph named_graph(std::string_view name) {
    if (name == "icosahedron") return icosahedron();
    if (name == "c5_join_k3bar") return join(cycle_graph(5), empty_graph(3));
    if (name == "k_1222") {
        const int s[] = {1, 2, 2, 2};
        return complete_multipartite(s);
    }
    if (name == "k_222") {
        const int s[] = {2, 2, 2};
        return complete_multipartite(s);
    }
    if (name == "petersen") return petersen();
    if (name == "d3") return d3();
    throw PreconditionError("unknown graph name '" + std::string(name) + "'");
}

std::vector<std::string> named_graph_names() {
    return {"icosahedron", "c5_join_k3bar", "k_1222", "k_222", "petersen", "d3"};
}

std::vector<int> HornedGraph::originals() const {
    std::vector<int> out;
    for (int v = 0; v < graph.order(); ++v) {
        if (std::find(horns.begin(), horns.end(), v) == horns.end()) out.push_back(v);
    }
    return out;
}

HornedGraph single_horned(int d) {
    if (d < 4) {
        throw PreconditionError("G_{d,4} needs d >= 4");
    }
    GraphBuilder b(complete_graph(d + 1));
    b = GraphBuilder(add_vertex(std::move(b).build(), std::vector<int>{0, 1, 2, 3}));
    b.remove_edge(0, 1).remove_edge(2, 3);
    return {std::move(b).build(), {d + 1}};
}

HornedGraph double_horned(int d, int a, int b) {
    if (a < 4 || b < 4 || a % 2 != 0 || b % 2 != 0 || d != a + b - 2) {
        throw PreconditionError("G_{d,a,b} needs even a, b >= 4 and d = a + b - 2");
    }
    std::vector<int> ma(static_cast<std::size_t>(a));
    std::iota(ma.begin(), ma.end(), 0);
    std::vector<int> mb(static_cast<std::size_t>(b));
    std::iota(mb.begin(), mb.end(), a - 1);
    Graph g = add_vertex(add_vertex(complete_graph(d + 1), ma), mb);
    GraphBuilder gb(std::move(g));
    for (int i = 0; i + 1 < a; i += 2) gb.remove_edge(i, i + 1);
    for (int i = a - 1; i + 1 <= d; i += 2) gb.remove_edge(i, i + 1);
    return {std::move(gb).build(), {d + 1, d + 2}};
}

HornContractionCheck check_horned_contractions(const HornedGraph& h, int d) {
    HornContractionCheck out;
    const MaskGraph g(h.graph);
    const VertexMask horns = vector_to_mask(h.horns);

    auto fails = [&](const MaskGraph& q, VertexMask hq) {
        const VertexMask originals = q.all() & ~hq;
        if (originals == 0) return false;
        bool low = false;
        for_each_bit(originals, [&](int v) { low = low || q.degree(v) < d; });
        return !low;
    };
    auto contract_tracked = [](const MaskGraph& q, VertexMask hq, int u, int v, VertexMask& out_h) {
        const int lo = std::min(u, v);
        const int hi = std::max(u, v);
        if ((hq >> hi) & 1U) hq |= bit(lo);
        out_h = squeeze_bit(hq, hi);
        return contract(q, lo, hi);
    };

    for (auto [u, v] : h.graph.edges()) {
        VertexMask h1 = 0;
        const MaskGraph g1 = contract_tracked(g, horns, u, v, h1);
        ++out.minors_checked;
        if (out.holds && fails(g1, h1)) {
            out.holds = false;
            out.counterexample = "contract " + std::to_string(u) + "-" + std::to_string(v);
        }
        for (auto [x, y] : g1.to_graph().edges()) {
            VertexMask h2 = 0;
            const MaskGraph g2 = contract_tracked(g1, h1, x, y, h2);
            ++out.minors_checked;
            if (out.holds && fails(g2, h2)) {
                out.holds = false;
                out.counterexample = "contract " + std::to_string(u) + "-" + std::to_string(v) + " then " +
                                     std::to_string(x) + "-" + std::to_string(y);
            }
        }
    }
    // Three contractions leave at most d vertices, so every degree is below d.
    if (h.graph.order() - 3 > d) {
        out.holds = false;
        out.counterexample = "three contractions leave more than d vertices";
    }
    return out;
}

namespace {

struct TreeShape {
    std::vector<std::vector<int>> adj;
    std::vector<int> colour;
    int leaf_colour = 0;
};

TreeShape check_tree(int n, const std::vector<Edge>& edges) {
    if (n < 2) {
        throw PreconditionError("tree needs at least two vertices");
    }
    if (static_cast<int>(edges.size()) != n - 1) {
        throw PreconditionError("a tree on " + std::to_string(n) + " vertices has " + std::to_string(n - 1) +
                                " edges, got " + std::to_string(edges.size()));
    }
    TreeShape t;
    t.adj.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
            throw PreconditionError("bad tree edge " + std::to_string(u) + "-" + std::to_string(v));
        }
        t.adj[u].push_back(v);
        t.adj[v].push_back(u);
    }
    t.colour.assign(static_cast<std::size_t>(n), -1);
    std::deque<int> queue{0};
    t.colour[0] = 0;
    int reached = 1;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : t.adj[u]) {
            if (t.colour[w] < 0) {
                t.colour[w] = 1 - t.colour[u];
                ++reached;
                queue.push_back(w);
            }
        }
    }
    if (reached != n) {
        throw PreconditionError("edges do not form a tree");
    }
    t.leaf_colour = -1;
    for (int v = 0; v < n; ++v) {
        if (t.adj[v].size() != 1) continue;
        if (t.leaf_colour >= 0 && t.colour[v] != t.leaf_colour) {
            throw PreconditionError("leaves lie in both classes of the bipartition");
        }
        t.leaf_colour = t.colour[v];
    }
    return t;
}

} // namespace

LowHighTree::LowHighTree(int order, std::vector<Edge> edges) : n_(order), edges_(std::move(edges)) {
    const TreeShape t = check_tree(n_, edges_);
    adj_ = t.adj;
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    high_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
        high_[v] = t.colour[v] != t.leaf_colour;
        const int deg = static_cast<int>(adj_[v].size());
        if (high_[v] && deg < 2) {
            throw PreconditionError("high vertex " + std::to_string(v) + " has degree below 2");
        }
        if (!high_[v] && deg > 2) {
            throw PreconditionError("low vertex " + std::to_string(v) + " has degree above 2");
        }
    }
}

std::vector<int> LowHighTree::high_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (high_[v]) out.push_back(v);
    return out;
}

std::vector<int> LowHighTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (adj_[v].size() == 1) out.push_back(v);
    return out;
}

int LowHighTree::edge_index(int u, int v) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto [a, b] = edges_[i];
        if ((a == u && b == v) || (a == v && b == u)) return static_cast<int>(i);
    }
    throw PreconditionError("no tree edge " + std::to_string(u) + "-" + std::to_string(v));
}

EdgeLabelling phi_labelling(const LowHighTree& t, int root) {
    const int n = t.order();
    if (root < 0 || root >= n || !t.is_high(root)) {
        throw PreconditionError("root " + std::to_string(root) + " is not a high vertex");
    }
    // BFS order from the root; parent[] and depth[] per vertex.
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    std::vector<int> order{root};
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[root] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int w : t.neighbours(order[i])) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = order[i];
                depth[w] = depth[order[i]] + 1;
                order.push_back(w);
            }
        }
    }
    EdgeLabelling out;
    const auto m = t.edges().size();
    out.phi.assign(m, 0);
    out.blue.assign(m, false);
    // Edge above child c: blue when its upper end is at even depth.
    auto is_leaf = [&](int v) { return t.neighbours(v).size() == 1; };
    std::vector<int> leaf_edges(static_cast<std::size_t>(n), 0);
    std::vector<int> red_edges(static_cast<std::size_t>(n), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int c = *it;
        if (c == root) continue;
        const bool blue = depth[parent[c]] % 2 == 0;
        leaf_edges[c] += (is_leaf(c) || is_leaf(parent[c])) ? 1 : 0;
        red_edges[c] += blue ? 0 : 1;
        leaf_edges[parent[c]] += leaf_edges[c];
        red_edges[parent[c]] += red_edges[c];
        const int e = t.edge_index(parent[c], c);
        out.blue[e] = blue;
        (blue ? out.blue_count : out.red_count) += 1;
    }
    int leaf_total = 0;
    for (int v = 0; v < n; ++v) leaf_total += is_leaf(v) ? 1 : 0;
    out.d = 4 * leaf_total + 2 * out.red_count;
    for (int c : order) {
        if (c == root) continue;
        const int e = t.edge_index(parent[c], c);
        if (out.blue[e]) {
            out.phi[e] = 4 * leaf_edges[c] + 2 * red_edges[c];
        } else {
            const int p = parent[c];
            out.phi[e] = out.d + 2 - out.phi[t.edge_index(parent[p], p)];
        }
    }
    return out;
}

LowHighTree random_low_high_tree(int max_order, std::mt19937_64& rng) {
    if (max_order < 3) {
        throw PreconditionError("a low-high tree needs at least three vertices");
    }
    std::vector<Edge> edges;
    std::vector<bool> high{true};
    int n = 1;
    std::uniform_int_distribution<int> kids(1, 3);
    std::bernoulli_distribution extend(0.5);
    // Frontier of high vertices that still need low children.
    std::vector<int> pending{0};
    for (std::size_t i = 0; i < pending.size(); ++i) {
        const int h = pending[i];
        // The root needs two children; others already have their parent edge.
        const int want = kids(rng) + (h == 0 ? 1 : 0);
        for (int j = 0; j < want && n < max_order; ++j) {
            const int low = n++;
            high.push_back(false);
            edges.emplace_back(h, low);
            if (n + 2 <= max_order && extend(rng)) {
                const int next = n++;
                high.push_back(true);
                edges.emplace_back(low, next);
                pending.push_back(next);
            }
        }
    }
    // Any high vertex left with a single edge gets one more leaf; if space ran
    // out, drop it together with its low parent's extension.
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    std::vector<Edge> kept;
    std::vector<bool> drop(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        if (high[v] && deg[v] < 2) drop[v] = true;
    }
    for (auto [u, v] : edges) {
        if (!drop[u] && !drop[v]) kept.emplace_back(u, v);
    }
    std::vector<int> relabel_to(static_cast<std::size_t>(n), -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!drop[v]) relabel_to[v] = m++;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [u, v] : kept) {
        u = perm[relabel_to[u]];
        v = perm[relabel_to[v]];
    }
    return LowHighTree(m, std::move(kept));
}

LowHighTree figure_tree() {
    // 0 root; a* are degree-2 low vertices, h* high, l* leaves.
    enum { r, a1, a2, a3, a4, a5, a6, h1, h2, h3, h4, h5, h6, l1, l2, l3, l4, l5, l6, l7, l8, count };
    std::vector<Edge> e = {{r, l1},   {r, a1},   {r, a2},   {a1, h1}, {h1, l2}, {h1, a3}, {a3, h3},
                           {h3, l3},  {h3, l4},  {a2, h2},  {h2, l5}, {h2, a4}, {h2, a5}, {a4, h4},
                           {h4, l6},  {a5, h5},  {h5, a6},  {h5, l7}, {a6, h6}, {h6, l8}};
    return LowHighTree(count, std::move(e));
}

LowHighTree figure_example_tree() {
    enum { r, v1, v2, h1, h2, l1, l2, l3, l4, count };
    std::vector<Edge> e = {{r, l1}, {r, v1}, {r, v2}, {v1, h1}, {h1, l2}, {h1, l3}, {v2, h2}, {h2, l4}};
    return LowHighTree(count, std::move(e));
}

namespace {

struct LowHighBuild {
    int d = 0;
    Graph graph;
    std::vector<int> high_id;                   // per tree vertex, -1 if low
    std::vector<std::vector<int>> originals;    // per tree vertex, empty if high
};

LowHighBuild build_low_high(const LowHighTree& t) {
    const auto highs = t.high_vertices();
    const EdgeLabelling phi = phi_labelling(t, highs.front());
    LowHighBuild out;
    out.d = phi.d;
    const int d = phi.d;
    out.high_id.assign(static_cast<std::size_t>(t.order()), -1);
    out.originals.resize(static_cast<std::size_t>(t.order()));
    int next = 0;
    for (int h : highs) out.high_id[h] = next++;
    const int lows = t.order() - static_cast<int>(highs.size());
    GraphBuilder b(next + lows * (d + 1));
    for (int v = 0; v < t.order(); ++v) {
        if (t.is_high(v)) continue;
        const auto& nb = t.neighbours(v);
        HornedGraph piece = nb.size() == 1
                                ? single_horned(d)
                                : double_horned(d, phi.phi[t.edge_index(v, nb[0])], phi.phi[t.edge_index(v, nb[1])]);
        std::vector<int> id(static_cast<std::size_t>(piece.graph.order()));
        for (int u = 0; u <= d; ++u) {
            id[u] = next + u;
            out.originals[v].push_back(next + u);
        }
        for (std::size_t i = 0; i < piece.horns.size(); ++i) {
            id[piece.horns[i]] = out.high_id[nb[i]];
        }
        next += d + 1;
        for (auto [x, y] : piece.graph.edges()) b.add_edge(id[x], id[y]);
    }
    out.graph = std::move(b).build();
    return out;
}

} // namespace

TreeGraph graph_from_low_high_tree(const LowHighTree& t) {
    LowHighBuild b = build_low_high(t);
    return {b.d, std::move(b.graph)};
}

TreeGraph graph_from_block_tree(int order, std::span<const Edge> edges) {
    const std::vector<Edge> tree_edges(edges.begin(), edges.end());
    const TreeShape shape = check_tree(order, tree_edges);
    auto block_class = [&](int v) { return shape.colour[v] == shape.leaf_colour; };
    std::vector<int> hubs;
    for (int v = 0; v < order; ++v) {
        if (block_class(v) && shape.adj[v].size() >= 3) hubs.push_back(v);
    }
    if (hubs.empty()) {
        return graph_from_low_high_tree(LowHighTree(order, tree_edges));
    }

    // Subdivide every edge at a hub; subdivision vertex ids start at `order`.
    std::vector<Edge> sub_edges;
    int n2 = order;
    std::vector<int> sub_owner;  // hub owning each subdivision vertex
    for (auto [u, v] : tree_edges) {
        const bool hu = block_class(u) && shape.adj[u].size() >= 3;
        const bool hv = block_class(v) && shape.adj[v].size() >= 3;
        if (hu || hv) {
            const int s = n2++;
            sub_owner.push_back(hu ? u : v);
            sub_edges.emplace_back(u, s);
            sub_edges.emplace_back(s, v);
        } else {
            sub_edges.emplace_back(u, v);
        }
    }
    const LowHighTree t2(n2, sub_edges);
    const LowHighBuild g2 = build_low_high(t2);
    const int base = g2.graph.order();

    // Bags keyed by block-class vertex.
    std::vector<int> bag_of(static_cast<std::size_t>(base), -1);
    std::vector<int> bag_keys;
    for (int y = 0; y < order; ++y) {
        if (!block_class(y)) continue;
        const int key = static_cast<int>(bag_keys.size());
        bag_keys.push_back(y);
        if (shape.adj[y].size() >= 3) {
            bag_of[g2.high_id[y]] = key;
            for (int s = order; s < n2; ++s) {
                if (sub_owner[s - order] != y) continue;
                for (int v : g2.originals[s]) bag_of[v] = key;
            }
        } else {
            for (int v : g2.originals[y]) bag_of[v] = key;
        }
    }
    // Remaining cut vertices join the bag of their first step toward hub x.
    const int x = g2.high_id[hubs.front()];
    std::vector<int> dist(static_cast<std::size_t>(base), -1);
    std::deque<int> queue{x};
    dist[x] = 0;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : g2.graph.neighbours(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    for (int c = 0; c < order; ++c) {
        if (block_class(c)) continue;
        const int id = g2.high_id[c];
        for (int w : g2.graph.neighbours(id)) {
            if (dist[w] == dist[id] - 1) {
                bag_of[id] = bag_of[w];
                break;
            }
        }
    }

    GraphBuilder b(base + static_cast<int>(bag_keys.size()));
    for (auto [u, v] : g2.graph.edges()) b.add_edge(u, v);
    for (int v = 0; v < base; ++v) {
        if (bag_of[v] < 0) {
            throw std::logic_error("vertex left outside every bag");
        }
        b.add_edge(v, base + bag_of[v]);
    }
    return {g2.d + 1, std::move(b).build()};
}

} // namespace mforge
