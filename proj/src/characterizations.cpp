#include "mforge/characterizations.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "mforge/errors.hpp"

namespace mforge {

bool cmg_obstruction_predicate(std::span<const int> shape, ParamKind kind, int k) {
    std::vector<int> s(shape.begin(), shape.end());
    std::sort(s.begin(), s.end());
    if (s.empty() || s.front() < 1 || k < 0) return false;
    const int parts = static_cast<int>(s.size());
    if (kind == ParamKind::MinDegree || kind == ParamKind::Connectivity) {
        if (k == 0) return s == std::vector<int>{1, 1};
        const int a = s.front();
        const int b = s.back();
        const int p = parts - 1;
        if (p < 2 || std::any_of(s.begin() + 1, s.end(), [&](int x) { return x != b; })) return false;
        if (p == 2 && a != b) return false;
        return k + 1 == a + (p - 1) * b;
    }
    if (s.back() == 1) return parts == k + 2;
    if (k >= 3 && k % 2 == 1 && s.front() == 2 && s.back() == 2) return parts == (k + 3) / 2;
    return false;
}

namespace {

int edge_triangles(const Graph& g, int u, int v) { return g.common_neighbour_count(u, v); }

} // namespace

SmallRegularVerdict small_regular_check(const Graph& g, int k, const Budget& budget) {
    SmallRegularVerdict out;
    const int n = g.order();
    out.regular = n > 0 && is_regular(g, k + 1);
    out.applies = out.regular && 3 * n < 4 * (k + 2);
    const auto edges = g.edges();
    for (auto [u, v] : edges) {
        const int t = edge_triangles(g, u, v);
        out.min_edge_triangles = out.min_edge_triangles < 0 ? t : std::min(out.min_edge_triangles, t);
    }
    out.many_triangles_condition = out.regular && is_connected(g) && !edges.empty() &&
                                   out.min_edge_triangles >= 2 * n - 2 * k - 5;
    if (out.applies) {
        out.member = is_minimal_obstruction(g, ParamKind::MinDegree, k, budget).verdict;
    }
    return out;
}

std::vector<int> low_degree_vertices(const Graph& g) {
    std::vector<int> out;
    if (g.order() == 0) return out;
    const int delta = g.min_degree();
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == delta) out.push_back(v);
    }
    return out;
}

bool add_vertex_characterisation(const Graph& g, std::span<const int> s, int k, const Budget& budget) {
    if (!is_minimal_obstruction(g, ParamKind::MinDegree, k, budget).verdict) {
        throw PreconditionError("add_vertex_characterisation needs a minimal delta-obstruction for k = " +
                                std::to_string(k));
    }
    return is_minimal_obstruction(add_vertex(g, s), ParamKind::MinDegree, k + 1, budget).verdict;
}

bool low_set_conditions(const Graph& g, int k) {
    if (g.order() == 0 || g.min_degree() != k + 1) return false;
    const auto low = low_degree_vertices(g);
    const int l = static_cast<int>(low.size());
    const int p = g.order() - l;
    if (3 * l >= 4 * (k + 2 - p)) return false;
    std::vector<bool> is_low(static_cast<std::size_t>(g.order()), false);
    for (int v : low) is_low[v] = true;
    for (int v = 0; v < g.order(); ++v) {
        if (is_low[v]) continue;
        for (int w = 0; w < g.order(); ++w) {
            if (w == v) continue;
            if (is_low[w] != g.has_edge(v, w)) return false;
        }
    }
    return true;
}

namespace {

constexpr int kAuditSubgraphOrder = 5;

// Every connected vertex set with 2..hi vertices, each once.
std::vector<VertexMask> connected_sets(const Graph& g, int hi) {
    std::set<VertexMask> seen;
    std::vector<VertexMask> frontier;
    for (int v = 0; v < g.order(); ++v) {
        seen.insert(bit(v));
        frontier.push_back(bit(v));
    }
    std::vector<VertexMask> out;
    for (int size = 1; size < hi; ++size) {
        std::vector<VertexMask> next;
        for (VertexMask m : frontier) {
            VertexMask boundary = 0;
            for_each_bit(m, [&](int v) { boundary |= g.mask(v); });
            boundary &= ~m;
            for_each_bit(boundary, [&](int w) {
                if (seen.insert(m | bit(w)).second) next.push_back(m | bit(w));
            });
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

void for_each_clique(const Graph& g, int max_size, const std::function<void(VertexMask)>& f) {
    std::function<void(VertexMask, VertexMask, int)> grow = [&](VertexMask clique, VertexMask cand, int size) {
        if (size >= 2) f(clique);
        if (size == max_size) return;
        for_each_bit(cand, [&](int v) {
            grow(clique | bit(v), cand & g.mask(v) & ~low_bits(v + 1), size + 1);
        });
    };
    grow(0, low_bits(g.order()), 0);
}

} // namespace

AuditReport audit_obstruction_properties(const Graph& g, int k, const Budget& budget) {
    if (g.order() > kMaskLimit) {
        throw BudgetExceeded("audit handles at most 64 vertices");
    }
    if (!is_minimal_obstruction(g, ParamKind::MinDegree, k, budget).verdict) {
        throw PreconditionError("audit needs a minimal delta-obstruction for k = " + std::to_string(k));
    }
    AuditReport r;
    const int n = g.order();
    const VertexMask all = low_bits(n);
    VertexMask low = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == k + 1) low |= bit(v);
    }
    auto fail = [&](const std::string& what) {
        if (r.failure.empty()) r.failure = what;
    };

    r.low_count = popcount(low);
    r.many_lows = r.low_count >= k + 2;
    if (!r.many_lows) fail("only " + std::to_string(r.low_count) + " low-degree vertices");

    r.common_neighbour = true;
    for (auto [u, v] : g.edges()) {
        if ((g.mask(u) & g.mask(v) & low) == 0) {
            r.common_neighbour = false;
            fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " has no low common neighbour");
            break;
        }
    }

    r.sparse_subgraph = true;
    for (VertexMask h : connected_sets(g, std::min(kAuditSubgraphOrder, n - 1))) {
        const int size = popcount(h);
        int twice_m = 0;
        for_each_bit(h, [&](int v) { twice_m += popcount(g.mask(v) & h); });
        if (twice_m > (k + 1) * (size - 1)) continue;
        ++r.sparse_subgraphs_checked;
        bool found = false;
        for_each_bit(all & ~h, [&](int x) {
            const int c = popcount(g.mask(x) & h);
            found = found || (c >= 2 && c >= g.degree(x) - k + 1);
        });
        if (!found) {
            r.sparse_subgraph = false;
            fail("sparse subgraph " + std::to_string(h) + " has no heavy outside neighbour");
            break;
        }
    }

    r.clique_neighbour = true;
    for_each_clique(g, std::min(k + 1, n - 1), [&](VertexMask c) {
        ++r.cliques_checked;
        bool found = false;
        for_each_bit(all & ~c, [&](int x) { found = found || popcount(g.mask(x) & c) >= 2; });
        if (!found && r.clique_neighbour) {
            r.clique_neighbour = false;
            fail("clique " + std::to_string(c) + " has no common neighbour");
        }
        if (static_cast<std::size_t>(r.cliques_checked) > budget.max_states) {
            throw BudgetExceeded("audit clique enumeration exceeded " + std::to_string(budget.max_states));
        }
    });
    return r;
}

namespace {

// A minor in progress: cur is the quotient of the host by parts.
struct Reduction {
    Graph cur;
    std::vector<std::vector<int>> parts;
    std::vector<std::string> steps;

    // Each group is a connected set of current vertices; ungrouped vertices go.
    void apply(const std::vector<std::vector<int>>& groups, std::string what) {
        std::vector<std::vector<int>> next;
        for (const auto& grp : groups) {
            std::vector<int> merged;
            for (int v : grp) merged.insert(merged.end(), parts[v].begin(), parts[v].end());
            std::sort(merged.begin(), merged.end());
            next.push_back(std::move(merged));
        }
        cur = quotient(cur, groups);
        parts = std::move(next);
        steps.push_back(std::move(what));
    }

    void contract(std::vector<int> set, std::string what) {
        std::sort(set.begin(), set.end());
        std::vector<std::vector<int>> groups{set};
        for (int v = 0; v < cur.order(); ++v) {
            if (!std::binary_search(set.begin(), set.end(), v)) groups.push_back({v});
        }
        apply(groups, std::move(what));
    }

    void keep_only(std::vector<int> keep, std::string what) {
        std::sort(keep.begin(), keep.end());
        std::vector<std::vector<int>> groups;
        for (int v : keep) groups.push_back({v});
        apply(groups, std::move(what));
    }
};

std::vector<std::vector<int>> components_without(const Graph& g, const std::vector<int>& removed) {
    std::vector<int> rest;
    for (int v = 0; v < g.order(); ++v) {
        if (std::find(removed.begin(), removed.end(), v) == removed.end()) rest.push_back(v);
    }
    const Graph h = induced_subgraph(g, rest);
    auto comps = components(h);
    for (auto& c : comps) {
        for (int& v : c) v = rest[v];
        std::sort(c.begin(), c.end());
    }
    return comps;
}

std::vector<int> small_degree_vertices(const Graph& g) {
    std::vector<int> k;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) <= 3) k.push_back(v);
    }
    return k;
}

bool meets(const std::vector<int>& a, const std::vector<int>& b) {
    return std::any_of(a.begin(), a.end(), [&](int v) { return std::find(b.begin(), b.end(), v) != b.end(); });
}

// Some cycle of g, in order, or empty for forests.
std::vector<int> find_cycle(const Graph& g) {
    const int n = g.order();
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    for (int root = 0; root < n; ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbours(u)) {
                if (w == parent[u] || parent[w] == u) continue;
                if (parent[w] == -2) {
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    stack.push_back(w);
                    continue;
                }
                // Non-tree edge: walk both ends up to their meeting point.
                std::vector<int> left{u};
                std::vector<int> right{w};
                int a = u;
                int b = w;
                while (a != b) {
                    if (depth[a] >= depth[b]) {
                        a = parent[a];
                        left.push_back(a);
                    } else {
                        b = parent[b];
                        right.push_back(b);
                    }
                }
                right.pop_back();
                left.insert(left.end(), right.rbegin(), right.rend());
                return left;
            }
        }
    }
    return {};
}

bool is_four_connected(const Graph& g) { return g.order() >= 5 && vertex_connectivity(g) >= 4; }

} // namespace

FourConnectedMinor find_4_connected_minor(const Graph& g) {
    if (g.order() < 5) {
        throw PreconditionError("find_4_connected_minor needs at least 5 vertices");
    }
    {
        const auto k = small_degree_vertices(g);
        for (std::size_t i = 0; i < k.size(); ++i) {
            for (std::size_t j = i + 1; j < k.size(); ++j) {
                if (!g.has_edge(k[i], k[j])) {
                    throw PreconditionError("vertices of degree at most 3 do not form a clique");
                }
            }
        }
    }
    Reduction r{g, {}, {}};
    for (int v = 0; v < g.order(); ++v) r.parts.push_back({v});

    while (!is_four_connected(r.cur)) {
        const Graph& c = r.cur;
        if (c.order() < 5) {
            throw std::logic_error("4-connected reduction fell below five vertices");
        }
        const auto k = small_degree_vertices(c);

        const auto tiny = std::find_if(k.begin(), k.end(), [&](int v) { return c.degree(v) >= 1 && c.degree(v) <= 2; });
        if (tiny != k.end()) {
            const int v = *tiny;
            const int w = c.neighbours(v).front();
            r.contract({v, w}, "contract edge " + std::to_string(v) + "-" + std::to_string(w) + " at degree <= 2");
            continue;
        }

        const auto sep = minimum_vertex_separator(c);
        if (!is_connected(c) || sep.size() <= 2) {
            const auto comps = components_without(c, sep);
            const auto side2 = std::find_if(comps.begin(), comps.end(), [&](const auto& comp) { return !meets(comp, k); });
            if (side2 == comps.end() || comps.size() < 2) {
                throw std::logic_error("no separation side free of low-degree vertices");
            }
            const auto side1 = side2 == comps.begin() ? comps.begin() + 1 : comps.begin();
            std::vector<std::vector<int>> groups;
            if (sep.size() == 2) {
                std::vector<int> absorbed = *side1;
                absorbed.push_back(sep[0]);
                std::sort(absorbed.begin(), absorbed.end());
                groups.push_back(absorbed);
                groups.push_back({sep[1]});
            } else if (sep.size() == 1) {
                groups.push_back({sep[0]});
            }
            for (int v : *side2) groups.push_back({v});
            r.apply(groups, "cut at " + std::to_string(sep.size()) + "-separator");
            continue;
        }

        if (!k.empty()) {
            std::vector<int> nk;
            for (int v : k) {
                for (int w : c.neighbours(v)) {
                    if (std::find(k.begin(), k.end(), w) == k.end()) nk.push_back(w);
                }
            }
            std::sort(nk.begin(), nk.end());
            nk.erase(std::unique(nk.begin(), nk.end()), nk.end());
            if (k.size() == 2) {
                if (nk.size() >= 3) {
                    r.contract({k[0], k[1]}, "contract the degree-3 pair");
                } else {
                    r.contract({k[0], k[1], nk.front()}, "contract the degree-3 pair with a neighbour");
                }
                continue;
            }
            if (k.size() == 1 || k.size() == 3) {
                bool clique = true;
                int best = -1;
                int best_deg = 0;
                for (int u : nk) {
                    int d = 0;
                    for (int w : nk) d += c.has_edge(u, w) ? 1 : 0;
                    clique = clique && d == static_cast<int>(nk.size()) - 1;
                    if (best < 0 || d < best_deg) {
                        best = u;
                        best_deg = d;
                    }
                }
                if (clique) {
                    std::vector<int> keep;
                    for (int v = 0; v < c.order(); ++v) {
                        if (std::find(k.begin(), k.end(), v) == k.end()) keep.push_back(v);
                    }
                    r.keep_only(keep, "delete the degree-3 clique");
                } else {
                    const int v = *std::find_if(k.begin(), k.end(), [&](int x) { return c.has_edge(x, best); });
                    r.contract({v, best}, "contract " + std::to_string(v) + "-" + std::to_string(best) +
                                              " off the degree-3 clique");
                }
                continue;
            }
            throw std::logic_error("unexpected degree-3 clique of size " + std::to_string(k.size()));
        }

        // 3-connected with minimum degree 4: fold one side of a 3-separation.
        const auto comps = components_without(c, sep);
        const auto& side2 = comps[0];
        std::vector<int> g1_vertices = comps[1];
        g1_vertices.insert(g1_vertices.end(), sep.begin(), sep.end());
        std::sort(g1_vertices.begin(), g1_vertices.end());
        const Graph g1 = induced_subgraph(c, g1_vertices);
        const auto cycle = find_cycle(g1);
        if (cycle.empty()) {
            throw std::logic_error("separation side is a forest");
        }
        std::vector<int> sinks;
        for (int s : sep) {
            sinks.push_back(static_cast<int>(std::lower_bound(g1_vertices.begin(), g1_vertices.end(), s) -
                                             g1_vertices.begin()));
        }
        auto paths = disjoint_paths(g1, cycle, sinks, 3);
        if (paths.size() != 3) {
            throw std::logic_error("fewer than three cycle-separator paths");
        }
        // Each path starts at its last cycle vertex; order starts around the cycle.
        std::vector<std::pair<int, std::vector<int>>> anchored;
        for (auto& p : paths) {
            std::size_t last = 0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (std::find(cycle.begin(), cycle.end(), p[i]) != cycle.end()) last = i;
            }
            const int pos = static_cast<int>(std::find(cycle.begin(), cycle.end(), p[last]) - cycle.begin());
            anchored.emplace_back(pos, std::vector<int>(p.begin() + static_cast<long>(last), p.end()));
        }
        std::sort(anchored.begin(), anchored.end());
        const int len = static_cast<int>(cycle.size());
        std::vector<std::vector<int>> groups;
        for (int i = 0; i < 3; ++i) {
            const int from = anchored[i].first;
            const int to = i + 1 < 3 ? anchored[i + 1].first : anchored[0].first + len;
            std::vector<int> grp;
            for (int j = from; j < to; ++j) grp.push_back(g1_vertices[cycle[j % len]]);
            for (std::size_t j = 1; j < anchored[i].second.size(); ++j) grp.push_back(g1_vertices[anchored[i].second[j]]);
            std::sort(grp.begin(), grp.end());
            groups.push_back(std::move(grp));
        }
        for (int v : side2) groups.push_back({v});
        r.apply(groups, "fold a 3-separation side onto a triangle");
    }
    return {r.cur, BranchPartition{r.parts, {}}, r.steps};
}

K5OrK222 find_k5_or_k222(const Graph& g, const Budget& budget) {
    if (g.order() < 5 || vertex_connectivity(g) < 4) {
        throw PreconditionError("find_k5_or_k222 needs a 4-connected graph");
    }
    const int s222[] = {2, 2, 2};
    const Graph k5 = complete_graph(5);
    auto r = has_minor(g, k5, budget);
    if (r.found) return {"K5", k5, r.witness};
    const Graph k222 = complete_multipartite(s222);
    r = has_minor(g, k222, budget);
    if (r.found) return {"K222", k222, r.witness};
    throw std::logic_error("4-connected graph with neither a K5 nor a K222 minor");
}

} // namespace mforge
