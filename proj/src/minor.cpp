#include "mforge/minor.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "mforge/canonical.hpp"
#include "mforge/errors.hpp"
#include "mforge/graph_io.hpp"
#include "mforge/mask_graph.hpp"

namespace mforge {

Graph minor_from_partition(const Graph& host, const BranchPartition& w) {
    GraphBuilder b(quotient(host, w.parts));
    for (auto [u, v] : w.deleted_edges) {
        b.remove_edge(u, v);
    }
    return std::move(b).build();
}

std::string partition_error(const Graph& host, const BranchPartition& w) {
    const int n = host.order();
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < w.parts.size(); ++i) {
        const auto& part = w.parts[i];
        if (part.empty()) {
            return "part " + std::to_string(i) + " is empty";
        }
        for (int v : part) {
            if (v < 0 || v >= n) {
                return "part " + std::to_string(i) + " names vertex " + std::to_string(v);
            }
            if (owner[v] >= 0) {
                return "vertex " + std::to_string(v) + " lies in parts " + std::to_string(owner[v]) +
                       " and " + std::to_string(i);
            }
            owner[v] = static_cast<int>(i);
        }
        if (!is_connected(induced_subgraph(host, part))) {
            return "part " + std::to_string(i) + " is not connected";
        }
    }
    const Graph q = quotient(host, w.parts);
    for (auto [a, b] : w.deleted_edges) {
        if (a < 0 || b < 0 || a >= q.order() || b >= q.order() || !q.has_edge(a, b)) {
            return "deleted edge " + std::to_string(a) + "-" + std::to_string(b) + " is not a quotient edge";
        }
    }
    return {};
}

std::string minor_witness_error(const Graph& host, const Graph& minor, const BranchPartition& w) {
    if (static_cast<int>(w.parts.size()) != minor.order()) {
        return "expected " + std::to_string(minor.order()) + " parts, got " + std::to_string(w.parts.size());
    }
    if (auto err = partition_error(host, w); !err.empty()) {
        return err;
    }
    const Graph realised = minor_from_partition(host, w);
    for (auto [u, v] : minor.edges()) {
        if (!realised.has_edge(u, v)) {
            return "minor edge " + std::to_string(u) + "-" + std::to_string(v) + " not realised";
        }
    }
    return {};
}

namespace {

using FormSet = std::unordered_set<CanonicalForm, CanonicalFormHash>;

// A minor in progress: the current graph plus the host vertices behind each
// of its vertices.
struct State {
    MaskGraph q;
    std::vector<VertexMask> parts;
};

State initial_state(const Graph& g) {
    State s{MaskGraph(g), {}};
    for (int v = 0; v < g.order(); ++v) {
        s.parts.push_back(bit(v));
    }
    return s;
}

State merged(const State& s, int a, int b) {
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    State t{contract(s.q, lo, hi), s.parts};
    t.parts[lo] |= t.parts[hi];
    t.parts.erase(t.parts.begin() + hi);
    return t;
}

State without_vertex(const State& s, int v) {
    State t{remove_vertex(s.q, v), s.parts};
    t.parts.erase(t.parts.begin() + v);
    return t;
}

State without_edge(const State& s, int a, int b) {
    State t = s;
    t.q.remove_edge(a, b);
    return t;
}

BranchPartition to_partition(const State& s, const MaskGraph& host) {
    BranchPartition w;
    for (VertexMask p : s.parts) {
        w.parts.push_back(mask_to_vector(p));
    }
    for (int i = 0; i < s.q.n; ++i) {
        VertexMask reach = 0;
        for_each_bit(s.parts[i], [&](int v) { reach |= host.adj[v]; });
        for (int j = i + 1; j < s.q.n; ++j) {
            if ((reach & s.parts[j]) != 0 && !s.q.has_edge(i, j)) {
                w.deleted_edges.emplace_back(i, j);
            }
        }
    }
    return w;
}

class StateCounter {
public:
    StateCounter(std::size_t limit, int root_order) : limit_(limit), root_(root_order) {}

    void tick(int order) {
        deepest_ = std::max(deepest_, root_ - order);
        if (++count_ > limit_) {
            throw BudgetExceeded("minor search exceeded " + std::to_string(limit_) +
                                 " states; deepest level reached " + std::to_string(deepest_) + " of " +
                                 std::to_string(root_));
        }
    }

private:
    std::size_t limit_;
    int root_;
    std::size_t count_ = 0;
    int deepest_ = 0;
};

void check_mask_order(const Graph& g) {
    if (g.order() > kMaskLimit) {
        throw PreconditionError("minor search needs at most 64 vertices");
    }
}

int min_degree_vertex(const MaskGraph& q) {
    int best = 0;
    for (int v = 1; v < q.n; ++v) {
        if (q.degree(v) < q.degree(best)) {
            best = v;
        }
    }
    return best;
}

// Contraction search for minimum degree >= t. A vertex below t can only gain
// degree by joining a neighbour's part, so branching on its merges loses
// nothing.
class DegreeSearch {
public:
    DegreeSearch(int t, bool proper, int root, const Budget& budget)
        : t_(t), proper_(proper), root_(root), counter_(budget.max_states, root) {}

    std::optional<State> run(const State& s) {
        const int m = s.q.n;
        counter_.tick(m);
        const int d = s.q.min_degree();
        if (d >= t_ && (!proper_ || m < root_)) {
            return s;
        }
        if (m <= t_ + 1) {
            return std::nullopt;
        }
        if (m < root_ && !dead_.insert(canonical_form(s.q)).second) {
            return std::nullopt;
        }
        if (d < t_) {
            const int x = min_degree_vertex(s.q);
            for (int y : mask_to_vector(s.q.adj[x])) {
                if (auto r = run(merged(s, x, y))) {
                    return r;
                }
            }
            return std::nullopt;
        }
        for (int a = 0; a < m; ++a) {
            for (int b : mask_to_vector(s.q.adj[a] & ~low_bits(a + 1))) {
                if (auto r = run(merged(s, a, b))) {
                    return r;
                }
            }
        }
        return std::nullopt;
    }

private:
    int t_;
    bool proper_;
    int root_;
    StateCounter counter_;
    FormSet dead_;
};

// Non-induced subgraph embedding of h into q.
class Embedder {
public:
    Embedder(const MaskGraph& h, const MaskGraph& q) : h_(h), q_(q), phi_(h.n, -1) {
        std::vector<bool> placed(h.n, false);
        for (int i = 0; i < h.n; ++i) {
            int pick = -1;
            int pick_links = -1;
            for (int v = 0; v < h.n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int u : order_) links += h.has_edge(u, v) ? 1 : 0;
                if (links > pick_links || (links == pick_links && h.degree(v) > h.degree(pick))) {
                    pick = v;
                    pick_links = links;
                }
            }
            placed[pick] = true;
            order_.push_back(pick);
        }
    }

    bool run() { return place(0, 0); }
    const std::vector<int>& mapping() const { return phi_; }

private:
    bool place(std::size_t i, VertexMask used) {
        if (i == order_.size()) {
            return true;
        }
        const int v = order_[i];
        VertexMask cand = q_.all() & ~used;
        for (std::size_t j = 0; j < i; ++j) {
            if (h_.has_edge(order_[j], v)) {
                cand &= q_.adj[phi_[order_[j]]];
            }
        }
        for (VertexMask m = cand; m != 0; m &= m - 1) {
            const int c = __builtin_ctzll(m);
            if (q_.degree(c) < h_.degree(v)) continue;
            phi_[v] = c;
            if (place(i + 1, used | bit(c))) {
                return true;
            }
        }
        phi_[v] = -1;
        return false;
    }

    const MaskGraph& h_;
    const MaskGraph& q_;
    std::vector<int> phi_;
    std::vector<int> order_;
};

// h is a minor of q iff h sits inside some contraction of q. A vertex of q
// with degree below delta(h) is either merged with a neighbour or unused, so
// it is deleted or merged; otherwise try an embedding and then every merge.
class MinorSearch {
public:
    MinorSearch(const MaskGraph& h, int root, const Budget& budget)
        : h_(h), dh_(h.min_degree()), eh_(h.edge_count()), counter_(budget.max_states, root) {}

    std::optional<std::pair<State, std::vector<int>>> run(const State& s) {
        const int m = s.q.n;
        counter_.tick(m);
        if (m < h_.n || s.q.edge_count() < eh_) {
            return std::nullopt;
        }
        if (!dead_.insert(canonical_form(s.q)).second) {
            return std::nullopt;
        }
        const int x = min_degree_vertex(s.q);
        if (s.q.degree(x) < dh_) {
            if (auto r = run(without_vertex(s, x))) {
                return r;
            }
            for (int y : mask_to_vector(s.q.adj[x])) {
                if (auto r = run(merged(s, x, y))) {
                    return r;
                }
            }
            return std::nullopt;
        }
        Embedder e(h_, s.q);
        if (e.run()) {
            return std::make_pair(s, e.mapping());
        }
        if (m == h_.n) {
            return std::nullopt;
        }
        for (int a = 0; a < m; ++a) {
            for (int b : mask_to_vector(s.q.adj[a] & ~low_bits(a + 1))) {
                if (auto r = run(merged(s, a, b))) {
                    return r;
                }
            }
        }
        return std::nullopt;
    }

private:
    const MaskGraph& h_;
    int dh_;
    int eh_;
    StateCounter counter_;
    FormSet dead_;
};

BranchPartition lift(const BranchPartition& w, const std::vector<int>& labels) {
    BranchPartition out = w;
    for (auto& part : out.parts) {
        for (int& v : part) v = labels[v];
        std::sort(part.begin(), part.end());
    }
    return out;
}

int degree_bound(const MaskGraph& q) {
    // Best minimum degree any minor of q could reach: at most v'-1 on v'
    // vertices, and at most 2E/v'.
    const int e = q.edge_count();
    int best = 0;
    for (int v = 1; v <= q.n; ++v) {
        best = std::max(best, std::min(v - 1, 2 * e / v));
    }
    return best;
}

void check_lattice_order(const Graph& g, const Budget& budget) {
    if (g.order() > budget.max_lattice_order) {
        throw BudgetExceeded("minor lattice search limited to " + std::to_string(budget.max_lattice_order) +
                             " vertices, got " + std::to_string(g.order()));
    }
}

// Breadth-first walk of the minor lattice below g, one state per class.
// visit() returns true to stop; skip(child) prunes a child and everything
// reachable only through it.
void walk_lattice(const Graph& g, const Budget& budget, const std::function<bool(const State&)>& visit,
                  const std::function<bool(const State&)>& skip) {
    StateCounter counter(budget.max_states, g.order());
    FormSet seen;
    std::deque<State> queue;
    State root = initial_state(g);
    seen.insert(canonical_form(root.q));
    queue.push_back(std::move(root));
    auto offer = [&](State child) {
        if (skip(child)) return;
        if (seen.insert(canonical_form(child.q)).second) {
            queue.push_back(std::move(child));
        }
    };
    while (!queue.empty()) {
        State s = std::move(queue.front());
        queue.pop_front();
        counter.tick(s.q.n);
        if (visit(s)) {
            return;
        }
        const auto edges = s.q.to_graph().edges();
        for (auto [a, b] : edges) {
            offer(without_edge(s, a, b));
            offer(merged(s, a, b));
        }
        if (s.q.n > 1) {
            for (int v = 0; v < s.q.n; ++v) {
                offer(without_vertex(s, v));
            }
        }
    }
}

std::optional<BranchPartition> find_lattice_minor(const Graph& g, int k, bool proper, const Budget& budget) {
    check_lattice_order(g, budget);
    const MaskGraph host(g);
    std::optional<BranchPartition> found;
    const int n = g.order();
    const int m = g.size();
    walk_lattice(
        g, budget,
        [&](const State& s) {
            if (proper && s.q.n == n && s.q.edge_count() == m) return false;
            if (s.q.min_degree() < k + 1) return false;
            if (vertex_connectivity(s.q.to_graph()) < k + 1) return false;
            found = to_partition(s, host);
            return true;
        },
        [&](const State& s) { return degree_bound(s.q) < k + 1; });
    return found;
}

std::vector<MinorEntry> sorted_entries(std::vector<std::pair<CanonicalForm, MinorEntry>> items) {
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second.graph.order() != b.second.graph.order()) {
            return a.second.graph.order() > b.second.graph.order();
        }
        return a.first < b.first;
    });
    std::vector<MinorEntry> out;
    for (auto& [form, entry] : items) {
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace

MinorSearchResult has_minor(const Graph& g, const Graph& h, const Budget& budget) {
    check_mask_order(g);
    MinorSearchResult res;
    if (h.order() == 0) {
        res.found = true;
        return res;
    }
    if (h.order() > g.order() || h.size() > g.size()) {
        return res;
    }
    const MaskGraph hm(h);
    MinorSearch search(hm, g.order(), budget);
    if (auto r = search.run(initial_state(g))) {
        res.found = true;
        const auto& [state, phi] = *r;
        for (int i = 0; i < h.order(); ++i) {
            res.witness.parts.push_back(mask_to_vector(state.parts[phi[i]]));
        }
    }
    return res;
}

std::vector<MinorEntry> contraction_minors(const Graph& g, const Budget& budget) {
    check_mask_order(g);
    const MaskGraph host(g);
    StateCounter counter(budget.max_states, g.order());
    std::unordered_map<CanonicalForm, MinorEntry, CanonicalFormHash> found;
    FormSet seen;
    std::vector<State> stack{initial_state(g)};
    while (!stack.empty()) {
        State s = std::move(stack.back());
        stack.pop_back();
        counter.tick(s.q.n);
        for (int a = 0; a < s.q.n; ++a) {
            for (int b : mask_to_vector(s.q.adj[a] & ~low_bits(a + 1))) {
                State t = merged(s, a, b);
                CanonicalForm f = canonical_form(t.q);
                if (seen.insert(f).second) {
                    found.emplace(std::move(f), MinorEntry{t.q.to_graph(), to_partition(t, host)});
                    stack.push_back(std::move(t));
                }
            }
        }
    }
    return sorted_entries({found.begin(), found.end()});
}

std::vector<MinorEntry> all_minors(const Graph& g, const Budget& budget) {
    check_lattice_order(g, budget);
    const MaskGraph host(g);
    std::vector<std::pair<CanonicalForm, MinorEntry>> items;
    walk_lattice(
        g, budget,
        [&](const State& s) {
            items.emplace_back(canonical_form(s.q), MinorEntry{s.q.to_graph(), to_partition(s, host)});
            return false;
        },
        [](const State&) { return false; });
    return sorted_entries(std::move(items));
}

std::optional<BranchPartition> contraction_with_min_degree(const Graph& g, int t, bool proper,
                                                           const Budget& budget) {
    check_mask_order(g);
    if (g.order() == 0) {
        return std::nullopt;
    }
    DegreeSearch search(t, proper, g.order(), budget);
    if (auto s = search.run(initial_state(g))) {
        return to_partition(*s, MaskGraph(g));
    }
    return std::nullopt;
}

int down_parameter(const Graph& g, ParamKind kind, const Budget& budget) {
    if (g.order() == 0) {
        throw PreconditionError("parameters are undefined on the null graph");
    }
    switch (kind) {
    case ParamKind::MinDegree: {
        int best = 0;
        for (const auto& comp : components(g)) {
            const Graph c = induced_subgraph(g, comp);
            int t = c.min_degree() + 1;
            while (contraction_with_min_degree(c, t, false, budget)) {
                ++t;
            }
            best = std::max(best, t - 1);
        }
        return best;
    }
    case ParamKind::Treewidth:
    case ParamKind::Pathwidth:
        return evaluate(g, kind, budget);
    case ParamKind::Connectivity: {
        check_lattice_order(g, budget);
        int best = vertex_connectivity(g);
        walk_lattice(
            g, budget,
            [&](const State& s) {
                if (s.q.min_degree() > best) {
                    best = std::max(best, vertex_connectivity(s.q.to_graph()));
                }
                return false;
            },
            [&](const State& s) { return degree_bound(s.q) <= best; });
        return best;
    }
    }
    return 0;
}

int down_parameter_by_full_minors(const Graph& g, ParamKind kind, const Budget& budget) {
    int best = 0;
    for (const auto& m : all_minors(g, budget)) {
        best = std::max(best, evaluate(m.graph, kind, budget));
    }
    return best;
}

nlohmann::json MembershipReport::to_json() const {
    nlohmann::json j;
    j["graph"] = to_graph6(graph);
    j["param"] = std::string(to_string(param));
    j["k"] = k;
    j["verdict"] = verdict;
    if (!failed_condition.empty()) {
        j["failed_condition"] = failed_condition;
    }
    if (witness) {
        j["witness_parts"] = witness->parts;
        if (!witness->deleted_edges.empty()) {
            auto arr = nlohmann::json::array();
            for (auto [a, b] : witness->deleted_edges) {
                arr.push_back({a, b});
            }
            j["witness_deleted_edges"] = arr;
        }
    }
    return j;
}

namespace {

BranchPartition identity_partition(const Graph& g) {
    BranchPartition w;
    for (int v = 0; v < g.order(); ++v) {
        w.parts.push_back({v});
    }
    return w;
}

void check_k(int k) {
    if (k < 0) {
        throw PreconditionError("k must be non-negative");
    }
}

// Parts of `outer` taken over the host through `inner`.
BranchPartition compose(const BranchPartition& inner, const BranchPartition& outer) {
    BranchPartition w;
    for (const auto& part : outer.parts) {
        std::vector<int> host;
        for (int v : part) {
            host.insert(host.end(), inner.parts[v].begin(), inner.parts[v].end());
        }
        std::sort(host.begin(), host.end());
        w.parts.push_back(std::move(host));
    }
    return w;
}

// Shrinks the witness until no proper contraction still violates, so the
// certificate is as small as contraction alone allows.
std::optional<BranchPartition> degree_violation(const Graph& g, int k, const Budget& budget) {
    for (const auto& comp : components(g)) {
        const Graph c = induced_subgraph(g, comp);
        if (c.order() < k + 2) continue;
        auto w = contraction_with_min_degree(c, k + 1, false, budget);
        if (!w) continue;
        while (auto smaller = contraction_with_min_degree(minor_from_partition(c, *w), k + 1, true, budget)) {
            w = compose(*w, *smaller);
        }
        return lift(*w, comp);
    }
    return std::nullopt;
}

// One-step minors of g that are at least k+1 under a minor-monotone f.
std::optional<BranchPartition> monotone_violation(const Graph& g, ParamKind kind, int k,
                                                  const Budget& budget) {
    const MaskGraph host(g);
    const State root = initial_state(g);
    FormSet seen;
    std::optional<BranchPartition> found;
    auto test = [&](const State& s) {
        if (found || s.q.n == 0 || !seen.insert(canonical_form(s.q)).second) return;
        if (evaluate(s.q.to_graph(), kind, budget) >= k + 1) {
            found = to_partition(s, host);
        }
    };
    for (auto [a, b] : g.edges()) {
        test(without_edge(root, a, b));
        test(merged(root, a, b));
    }
    for (int v = 0; v < g.order() && g.order() > 1; ++v) {
        test(without_vertex(root, v));
    }
    return found;
}

} // namespace

MembershipReport is_member(const Graph& g, ParamKind kind, int k, const Budget& budget) {
    check_k(k);
    check_mask_order(g);
    MembershipReport r{g, kind, k, true, {}, std::nullopt};
    std::optional<BranchPartition> w;
    switch (kind) {
    case ParamKind::MinDegree:
        w = degree_violation(g, k, budget);
        break;
    case ParamKind::Treewidth:
    case ParamKind::Pathwidth:
        if (g.order() > 0 && evaluate(g, kind, budget) > k) {
            w = identity_partition(g);
        }
        break;
    case ParamKind::Connectivity:
        w = find_lattice_minor(g, k, false, budget);
        break;
    }
    if (w) {
        r.verdict = false;
        r.failed_condition = "member";
        r.witness = std::move(w);
    }
    return r;
}

MembershipReport is_minimal_obstruction(const Graph& g, ParamKind kind, int k, const Budget& budget) {
    check_k(k);
    check_mask_order(g);
    MembershipReport r{g, kind, k, false, {}, std::nullopt};
    if (g.order() == 0) {
        r.failed_condition = kind == ParamKind::MinDegree ? "D1" : "M1";
        return r;
    }
    if (kind == ParamKind::MinDegree) {
        if (g.min_degree() != k + 1) {
            r.failed_condition = "D1";
            return r;
        }
        const auto comps = components(g);
        if (comps.size() > 1) {
            r.failed_condition = "D3";
            r.witness = BranchPartition{};
            for (int v : comps.front()) r.witness->parts.push_back({v});
            return r;
        }
        for (auto [v, w] : g.edges()) {
            if (g.degree(v) >= k + 2 && g.degree(w) >= k + 2) {
                r.failed_condition = "D4";
                r.witness = identity_partition(g);
                r.witness->deleted_edges.emplace_back(v, w);
                return r;
            }
        }
        if (auto w = contraction_with_min_degree(g, k + 1, true, budget)) {
            r.failed_condition = "D2";
            r.witness = std::move(w);
            return r;
        }
        r.verdict = true;
        return r;
    }
    if (evaluate(g, kind, budget) < k + 1) {
        r.failed_condition = "M1";
        return r;
    }
    std::optional<BranchPartition> w = kind == ParamKind::Connectivity
                                           ? find_lattice_minor(g, k, true, budget)
                                           : monotone_violation(g, kind, k, budget);
    if (w) {
        r.failed_condition = "M2";
        r.witness = std::move(w);
        return r;
    }
    r.verdict = true;
    return r;
}

bool certificate_holds(const MembershipReport& r, const Budget& budget) {
    if (r.verdict) {
        return !r.witness.has_value();
    }
    if (!r.witness) {
        if (r.failed_condition == "D1") return r.graph.order() == 0 || r.graph.min_degree() != r.k + 1;
        if (r.failed_condition == "M1") return r.graph.order() == 0 || evaluate(r.graph, r.param, budget) <= r.k;
        return false;
    }
    if (!partition_error(r.graph, *r.witness).empty()) {
        return false;
    }
    const Graph m = minor_from_partition(r.graph, *r.witness);
    if (m.order() == 0 || evaluate(m, r.param, budget) < r.k + 1) {
        return false;
    }
    if (r.failed_condition == "member") {
        return true;
    }
    // Obstruction failures must exhibit a proper minor.
    return m.order() < r.graph.order() || m.size() < r.graph.size();
}

} // namespace mforge
