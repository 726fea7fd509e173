#include "mforge/params.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

#include "mforge/errors.hpp"
#include "mforge/mask_graph.hpp"

namespace mforge {

std::string_view to_string(ParamKind kind) {
    switch (kind) {
    case ParamKind::MinDegree: return "delta";
    case ParamKind::Connectivity: return "kappa";
    case ParamKind::Treewidth: return "tw";
    case ParamKind::Pathwidth: return "pw";
    }
    return "?";
}

ParamKind param_from_string(std::string_view name) {
    if (name == "delta" || name == "min-degree") return ParamKind::MinDegree;
    if (name == "kappa" || name == "connectivity") return ParamKind::Connectivity;
    if (name == "tw" || name == "treewidth") return ParamKind::Treewidth;
    if (name == "pw" || name == "pathwidth") return ParamKind::Pathwidth;
    throw PreconditionError("unknown parameter '" + std::string(name) + "'");
}

namespace {

// Residual network with integer capacities; augmenting paths by BFS.
class FlowNet {
public:
    explicit FlowNet(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

    void add(int u, int v, int cap) {
        out_[u].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({v, cap, cap});
        out_[v].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({u, 0, 0});
    }

    int max_flow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && augment(s, t)) {
            ++flow;
        }
        return flow;
    }

    std::vector<bool> reachable(int s) const {
        std::vector<bool> seen(out_.size(), false);
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int a : out_[u]) {
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    queue.push_back(arcs_[a].to);
                }
            }
        }
        return seen;
    }

    // Follows one unit of flow out of u and consumes it; -1 if none.
    int take_flow(int u) {
        for (int a : out_[u]) {
            if (arcs_[a].original > 0 && arcs_[a].cap < arcs_[a].original) {
                ++arcs_[a].cap;
                return arcs_[a].to;
            }
        }
        return -1;
    }

private:
    struct Arc {
        int to;
        int cap;
        int original;
    };

    // Pushes one unit along a shortest augmenting path. All bottlenecks here
    // are at least one, so unit pushes are enough.
    bool augment(int s, int t) {
        std::vector<int> via(out_.size(), -1);
        std::vector<bool> seen(out_.size(), false);
        std::deque<int> queue{s};
        seen[s] = true;
        while (!queue.empty() && !seen[t]) {
            const int u = queue.front();
            queue.pop_front();
            for (int a : out_[u]) {
                const int v = arcs_[a].to;
                if (arcs_[a].cap > 0 && !seen[v]) {
                    seen[v] = true;
                    via[v] = a;
                    queue.push_back(v);
                }
            }
        }
        if (!seen[t]) {
            return false;
        }
        for (int v = t; v != s;) {
            const int a = via[v];
            --arcs_[a].cap;
            ++arcs_[a ^ 1].cap;
            v = arcs_[a ^ 1].to;
        }
        return true;
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
};

int in_node(int v) { return 2 * v; }
int out_node(int v) { return 2 * v + 1; }

// Vertex-split network: each vertex is an in->out arc of capacity one.
FlowNet split_network(const Graph& g, int extra_nodes) {
    const int n = g.order();
    FlowNet net(2 * n + extra_nodes);
    for (int v = 0; v < n; ++v) {
        net.add(in_node(v), out_node(v), 1);
    }
    for (auto [u, v] : g.edges()) {
        net.add(out_node(u), in_node(v), n);
        net.add(out_node(v), in_node(u), n);
    }
    return net;
}

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) {
        throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    }
}

bool is_complete(const Graph& g) {
    const long long n = g.order();
    return g.size() == n * (n - 1) / 2;
}

struct SeparatorSearch {
    int value = 0;
    std::vector<int> cut;
};

// Every nonadjacent pair; the smallest local value is the global one.
SeparatorSearch min_separator(const Graph& g, bool want_cut) {
    const int n = g.order();
    SeparatorSearch res;
    if (n <= 1 || is_complete(g)) {
        res.value = std::max(0, n - 1);
        return res;
    }
    if (!is_connected(g)) {
        return res;
    }
    res.value = n - 1;
    int best_s = -1;
    int best_t = -1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) {
                continue;
            }
            const int k = local_vertex_connectivity(g, i, j);
            if (k < res.value) {
                res.value = k;
                best_s = i;
                best_t = j;
            }
        }
    }
    if (want_cut && best_s >= 0) {
        FlowNet net = split_network(g, 0);
        net.max_flow(out_node(best_s), in_node(best_t), n);
        const auto seen = net.reachable(out_node(best_s));
        for (int v = 0; v < n; ++v) {
            if (v != best_s && v != best_t && seen[in_node(v)] && !seen[out_node(v)]) {
                res.cut.push_back(v);
            }
        }
    }
    return res;
}

} // namespace

int local_vertex_connectivity(const Graph& g, int s, int t) {
    check_vertex(g, s);
    check_vertex(g, t);
    if (s == t || g.has_edge(s, t)) {
        throw PreconditionError("local connectivity needs distinct nonadjacent vertices");
    }
    FlowNet net = split_network(g, 0);
    return net.max_flow(out_node(s), in_node(t), g.order());
}

int vertex_connectivity(const Graph& g) { return min_separator(g, false).value; }

std::vector<int> minimum_vertex_separator(const Graph& g) { return min_separator(g, true).cut; }

std::vector<std::vector<int>> disjoint_paths(const Graph& g, std::span<const int> sources,
                                             std::span<const int> sinks, int limit) {
    const int n = g.order();
    const int src = 2 * n;
    const int dst = 2 * n + 1;
    FlowNet net = split_network(g, 2);
    for (int v : sources) {
        check_vertex(g, v);
        net.add(src, in_node(v), 1);
    }
    for (int v : sinks) {
        check_vertex(g, v);
        net.add(out_node(v), dst, 1);
    }
    const int flow = net.max_flow(src, dst, limit);
    std::vector<std::vector<int>> paths;
    for (int p = 0; p < flow; ++p) {
        std::vector<int> path;
        int node = net.take_flow(src);
        while (node != dst && node >= 0) {
            if (node % 2 == 0) {
                path.push_back(node / 2);
            }
            node = net.take_flow(node);
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

int edge_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1 || !is_connected(g)) {
        return 0;
    }
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < n; ++t) {
        FlowNet net(n);
        for (auto [u, v] : g.edges()) {
            net.add(u, v, 1);
            net.add(v, u, 1);
        }
        best = std::min(best, net.max_flow(0, t, best));
    }
    return best;
}

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const std::vector<VertexMask>& adj) : adj_(adj) {}

    std::vector<int> run(VertexMask candidates) {
        expand(candidates);
        return best_;
    }

private:
    void expand(VertexMask p) {
        if (p == 0) {
            if (current_.size() > best_.size()) {
                best_ = current_;
            }
            return;
        }
        // Greedy colouring; colour[i] bounds the clique within order[0..i].
        std::vector<int> order;
        std::vector<int> colour;
        VertexMask uncoloured = p;
        int c = 0;
        while (uncoloured != 0) {
            ++c;
            VertexMask q = uncoloured;
            while (q != 0) {
                const int v = __builtin_ctzll(q);
                q &= ~bit(v) & ~adj_[v];
                uncoloured &= ~bit(v);
                order.push_back(v);
                colour.push_back(c);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (current_.size() + static_cast<std::size_t>(colour[i]) <= best_.size()) {
                return;
            }
            const int v = order[i];
            current_.push_back(v);
            expand(p & adj_[v]);
            current_.pop_back();
            p &= ~bit(v);
        }
    }

    const std::vector<VertexMask>& adj_;
    std::vector<int> current_;
    std::vector<int> best_;
};

void check_exact_order(const Graph& g, const Budget& budget) {
    if (g.order() > budget.max_exact_order || g.order() > kMaskLimit) {
        throw BudgetExceeded("clique search limited to " + std::to_string(budget.max_exact_order) +
                             " vertices, got " + std::to_string(g.order()));
    }
}

} // namespace

std::vector<int> maximum_clique(const Graph& g, const Budget& budget) {
    check_exact_order(g, budget);
    const MaskGraph mg(g);
    auto clique = CliqueSearch(mg.adj).run(mg.all());
    std::sort(clique.begin(), clique.end());
    return clique;
}

int clique_number(const Graph& g, const Budget& budget) {
    return static_cast<int>(maximum_clique(g, budget).size());
}

int independence_number(const Graph& g, const Budget& budget) {
    check_exact_order(g, budget);
    MaskGraph mg(g);
    for (int v = 0; v < mg.n; ++v) {
        mg.adj[v] = ~mg.adj[v] & mg.all() & ~bit(v);
    }
    return static_cast<int>(CliqueSearch(mg.adj).run(mg.all()).size());
}

int TreeDecomposition::width() const {
    std::size_t widest = 0;
    for (const auto& b : bags) {
        widest = std::max(widest, b.size());
    }
    return static_cast<int>(widest) - 1;
}

std::string decomposition_error(const Graph& g, const TreeDecomposition& td) {
    const int n = g.order();
    const int nb = static_cast<int>(td.bags.size());
    if (n == 0) {
        return {};
    }
    if (nb == 0) {
        return "no bags";
    }
    if (static_cast<int>(td.tree_edges.size()) != nb - 1) {
        return "tree has " + std::to_string(td.tree_edges.size()) + " edges for " + std::to_string(nb) +
               " bags";
    }
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(nb));
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) {
            return "bad tree edge " + std::to_string(a) + "-" + std::to_string(b);
        }
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
    for (int i = 0; i < nb; ++i) {
        for (int v : td.bags[i]) {
            if (v < 0 || v >= n) {
                return "bag " + std::to_string(i) + " names vertex " + std::to_string(v);
            }
            holders[v].push_back(i);
        }
    }
    // n-1 edges plus connectivity means tree.
    {
        std::vector<bool> seen(static_cast<std::size_t>(nb), false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : tree[x]) {
                if (!seen[y]) {
                    seen[y] = true;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        if (count != nb) {
            return "decomposition tree is not connected";
        }
    }
    for (int v = 0; v < n; ++v) {
        if (holders[v].empty()) {
            return "vertex " + std::to_string(v) + " in no bag";
        }
        // The bags holding v must induce a connected subtree.
        std::vector<bool> has(static_cast<std::size_t>(nb), false);
        for (int i : holders[v]) {
            has[i] = true;
        }
        std::vector<bool> seen(static_cast<std::size_t>(nb), false);
        std::vector<int> stack{holders[v].front()};
        seen[holders[v].front()] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : tree[x]) {
                if (has[y] && !seen[y]) {
                    seen[y] = true;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        if (count != holders[v].size()) {
            return "bags holding vertex " + std::to_string(v) + " are not connected";
        }
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i : holders[u]) {
            const auto& b = td.bags[i];
            if (std::find(b.begin(), b.end(), v) != b.end()) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            return "edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag";
        }
    }
    return {};
}

bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td) {
    return decomposition_error(g, td).empty();
}

bool is_path_shaped(const TreeDecomposition& td) {
    std::vector<int> deg(td.bags.size(), 0);
    for (auto [a, b] : td.tree_edges) {
        if (++deg[a] > 2 || ++deg[b] > 2) {
            return false;
        }
    }
    return true;
}

namespace {

void check_width_order(const Graph& g, const Budget& budget) {
    if (g.order() > budget.max_width_order || g.order() > 30) {
        throw BudgetExceeded("width DP limited to " + std::to_string(budget.max_width_order) +
                             " vertices, got " + std::to_string(g.order()));
    }
}

// Vertices outside S and v reachable from v through S.
int frontier_size(const std::vector<VertexMask>& adj, VertexMask s, int v) {
    VertexMask reached = bit(v);
    VertexMask todo = bit(v);
    VertexMask nb = 0;
    while (todo != 0) {
        const int u = __builtin_ctzll(todo);
        todo &= ~bit(u);
        const VertexMask a = adj[u];
        const VertexMask fresh = a & s & ~reached;
        reached |= fresh;
        todo |= fresh;
        nb |= a;
    }
    return popcount(nb & ~s & ~bit(v));
}

} // namespace

WidthResult treewidth(const Graph& g, const Budget& budget) {
    check_width_order(g, budget);
    const int n = g.order();
    WidthResult res;
    if (n == 0) {
        res.value = -1;
        return res;
    }
    const MaskGraph mg(g);
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<std::int8_t> tw(full + 1);
    tw[0] = -1;
    auto step = [&](std::size_t s, int v) {
        const std::size_t rest = s & ~(std::size_t{1} << v);
        return std::max<int>(tw[rest], frontier_size(mg.adj, rest, v));
    };
    for (std::size_t s = 1; s <= full; ++s) {
        int best = n;
        for (VertexMask m = s; m != 0; m &= m - 1) {
            best = std::min(best, step(s, __builtin_ctzll(m)));
        }
        tw[s] = static_cast<std::int8_t>(best);
    }
    res.value = tw[full];

    // Elimination order, last-eliminated first.
    std::vector<int> order;
    for (std::size_t s = full; s != 0;) {
        for (VertexMask m = s; m != 0; m &= m - 1) {
            const int v = __builtin_ctzll(m);
            if (step(s, v) == tw[s]) {
                order.push_back(v);
                s &= ~(std::size_t{1} << v);
                break;
            }
        }
    }
    std::reverse(order.begin(), order.end());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pos[order[i]] = i;
    }

    std::vector<VertexMask> filled = mg.adj;
    VertexMask alive = mg.all();
    auto& td = res.witness;
    int prev_root = -1;
    // Bag i belongs to order[i] and hangs off the earliest later neighbour.
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        alive &= ~bit(v);
        const VertexMask later = filled[v] & alive;
        td.bags.push_back(mask_to_vector(later | bit(v)));
        for_each_bit(later, [&](int u) { filled[u] |= later & ~bit(u); });
        if (later == 0) {
            if (prev_root >= 0) {
                td.tree_edges.emplace_back(prev_root, i);
            }
            prev_root = i;
            continue;
        }
        int parent = n;
        for_each_bit(later, [&](int u) { parent = std::min(parent, pos[u]); });
        td.tree_edges.emplace_back(i, parent);
    }
    return res;
}

WidthResult pathwidth(const Graph& g, const Budget& budget) {
    check_width_order(g, budget);
    const int n = g.order();
    WidthResult res;
    if (n == 0) {
        res.value = -1;
        return res;
    }
    const MaskGraph mg(g);
    const std::size_t full = (std::size_t{1} << n) - 1;
    auto boundary = [&](std::size_t s) {
        int c = 0;
        for (VertexMask m = s; m != 0; m &= m - 1) {
            if ((mg.adj[__builtin_ctzll(m)] & ~s) != 0) {
                ++c;
            }
        }
        return c;
    };
    std::vector<std::int8_t> vs(full + 1);
    vs[0] = 0;
    for (std::size_t s = 1; s <= full; ++s) {
        int best = n;
        for (VertexMask m = s; m != 0; m &= m - 1) {
            best = std::min<int>(best, vs[s & ~(std::size_t{1} << __builtin_ctzll(m))]);
        }
        vs[s] = static_cast<std::int8_t>(std::max(best, boundary(s)));
    }
    res.value = vs[full];

    std::vector<int> order;
    for (std::size_t s = full; s != 0;) {
        int pick = -1;
        for (VertexMask m = s; m != 0; m &= m - 1) {
            const int v = __builtin_ctzll(m);
            if (pick < 0 || vs[s & ~(std::size_t{1} << v)] < vs[s & ~(std::size_t{1} << pick)]) {
                pick = v;
            }
        }
        order.push_back(pick);
        s &= ~(std::size_t{1} << pick);
    }
    std::reverse(order.begin(), order.end());
    std::size_t placed = 0;
    for (int i = 0; i < n; ++i) {
        VertexMask bag = bit(order[i]);
        for (VertexMask m = placed; m != 0; m &= m - 1) {
            const int u = __builtin_ctzll(m);
            if ((mg.adj[u] & ~placed) != 0) {
                bag |= bit(u);
            }
        }
        res.witness.bags.push_back(mask_to_vector(bag));
        if (i > 0) {
            res.witness.tree_edges.emplace_back(i - 1, i);
        }
        placed |= std::size_t{1} << order[i];
    }
    return res;
}

int evaluate(const Graph& g, ParamKind kind, const Budget& budget) {
    if (g.order() == 0) {
        throw PreconditionError("parameters are undefined on the null graph");
    }
    switch (kind) {
    case ParamKind::MinDegree: return g.min_degree();
    case ParamKind::Connectivity: return vertex_connectivity(g);
    case ParamKind::Treewidth: return treewidth(g, budget).value;
    case ParamKind::Pathwidth: return pathwidth(g, budget).value;
    }
    return 0;
}

namespace {

std::string describe(const std::vector<int>& element) {
    std::string s = "{";
    for (std::size_t i = 0; i < element.size(); ++i) {
        s += (i ? "," : "") + std::to_string(element[i]);
    }
    return s + "}";
}

class HittingSet {
public:
    HittingSet(std::span<const VertexMask> sets, int n) : sets_(sets.begin(), sets.end()) {
        best_ = n + 1;
        best_set_ = ~VertexMask{0};
    }

    int run(VertexMask* witness) {
        search(0, 0);
        if (witness != nullptr) {
            *witness = best_set_;
        }
        return best_;
    }

private:
    void search(VertexMask hit, int size) {
        VertexMask pick = 0;
        int pick_size = 65;
        int lower = 0;
        VertexMask used = 0;
        for (VertexMask s : sets_) {
            if ((s & hit) != 0) {
                continue;
            }
            if (popcount(s) < pick_size) {
                pick = s;
                pick_size = popcount(s);
            }
            // Pairwise disjoint unhit sets each need their own vertex.
            if ((s & used) == 0) {
                used |= s;
                ++lower;
            }
        }
        if (pick == 0) {
            if (size < best_) {
                best_ = size;
                best_set_ = hit;
            }
            return;
        }
        if (size + lower >= best_) {
            return;
        }
        for_each_bit(pick, [&](int v) { search(hit | bit(v), size + 1); });
    }

    std::vector<VertexMask> sets_;
    int best_;
    VertexMask best_set_;
};

} // namespace

void validate_bramble(const Graph& g, const Bramble& b) {
    if (g.order() > kMaskLimit) {
        throw PreconditionError("bramble checks need at most 64 vertices");
    }
    const MaskGraph mg(g);
    std::vector<VertexMask> masks;
    for (const auto& e : b.elements) {
        for (int v : e) {
            if (v < 0 || v >= g.order()) {
                throw InvalidBramble("element " + describe(e) + " names a vertex outside the graph");
            }
        }
        const VertexMask m = vector_to_mask(e);
        if (m == 0 || !is_connected_within(mg, m)) {
            throw InvalidBramble("element " + describe(e) + " is not connected");
        }
        masks.push_back(m);
    }
    for (std::size_t i = 0; i < masks.size(); ++i) {
        VertexMask closed = masks[i];
        for_each_bit(masks[i], [&](int v) { closed |= mg.adj[v]; });
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
            if ((closed & masks[j]) == 0) {
                throw InvalidBramble("elements " + describe(b.elements[i]) + " and " +
                                     describe(b.elements[j]) + " do not touch");
            }
        }
    }
}

int minimum_hitting_set(int n, std::span<const VertexMask> sets, std::vector<int>* witness) {
    for (VertexMask s : sets) {
        if (s == 0) {
            throw PreconditionError("cannot hit an empty set");
        }
    }
    VertexMask w = 0;
    const int value = HittingSet(sets, n).run(&w);
    if (witness != nullptr) {
        *witness = mask_to_vector(w);
    }
    return value;
}

int bramble_order(const Graph& g, const Bramble& b) {
    validate_bramble(g, b);
    std::vector<VertexMask> masks;
    for (const auto& e : b.elements) {
        masks.push_back(vector_to_mask(e));
    }
    return minimum_hitting_set(g.order(), masks);
}

Bramble edge_clique_bramble(const Graph& g, std::span<const int> clique) {
    Bramble b;
    for (auto [u, v] : g.edges()) {
        b.elements.push_back({u, v});
    }
    for (int c : clique) {
        b.elements.push_back({c});
    }
    return b;
}

CmgEqualities cmg_equalities_check(std::span<const int> shape, const Budget& budget) {
    const Graph g = complete_multipartite(shape);
    CmgEqualities r;
    r.n = g.order();
    r.alpha = independence_number(g, budget);
    r.kappa = vertex_connectivity(g);
    r.delta = g.min_degree();
    r.tw = treewidth(g, budget).value;
    r.pw = pathwidth(g, budget).value;
    const int expect = r.n - *std::max_element(shape.begin(), shape.end());
    r.all_equal = r.alpha == r.n - expect && r.kappa == expect && r.delta == expect &&
                  r.tw == expect && r.pw == expect;
    return r;
}

} // namespace mforge
