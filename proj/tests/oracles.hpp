#pragma once

// Deliberately naive reference implementations. Slow, small n only, and
// written without sharing code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mforge/graph.hpp"

namespace oracle {

using mforge::Graph;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
    std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
    for (auto [u, v] : g.edges()) {
        a[u][v] = a[v][u] = true;
    }
    return a;
}

// Lexicographically smallest upper-triangle string over all relabellings.
inline std::string brute_certificate(const Graph& g) {
    const int n = g.order();
    const auto a = matrix(g);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
        std::string s;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) {
                s.push_back(a[p[i]][p[j]] ? '1' : '0');
            }
        }
        if (best.empty() || s < best) {
            best = s;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return std::to_string(n) + ":" + best;
}

inline bool brute_isomorphic(const Graph& x, const Graph& y) {
    return x.order() == y.order() && x.size() == y.size() && brute_certificate(x) == brute_certificate(y);
}

// All labelled graphs on n vertices, by upper-triangle bitmask.
inline Graph from_code(int n, std::uint64_t code) {
    mforge::GraphBuilder b(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if ((code >> k) & 1U) {
                b.add_edge(i, j);
            }
        }
    }
    return std::move(b).build();
}

inline bool connected_without(const Graph& g, const std::vector<bool>& removed) {
    const int n = g.order();
    int start = -1;
    int alive = 0;
    for (int v = 0; v < n; ++v) {
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    }
    if (alive == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (!removed[w] && !seen[w] && g.has_edge(u, w)) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == alive;
}

// Smallest S leaving a disconnected graph; n-1 if none exists.
inline int brute_kappa(const Graph& g) {
    const int n = g.order();
    int best = std::max(0, n - 1);
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        const int k = __builtin_popcount(s);
        if (k >= best || n - k < 2) continue;
        std::vector<bool> removed(n);
        for (int v = 0; v < n; ++v) removed[v] = (s >> v) & 1U;
        if (!connected_without(g, removed)) best = k;
    }
    return best;
}

inline int brute_alpha(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        bool ok = true;
        for (auto [u, v] : g.edges()) {
            if (((s >> u) & 1U) && ((s >> v) & 1U)) ok = false;
        }
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

// Treewidth as the best elimination order over all n! orders.
inline int brute_treewidth(const Graph& g) {
    const int n = g.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    int best = n;
    do {
        auto a = matrix(g);
        std::vector<bool> gone(n, false);
        int width = 0;
        for (int v : p) {
            std::vector<int> nb;
            for (int u = 0; u < n; ++u) {
                if (!gone[u] && u != v && a[v][u]) nb.push_back(u);
            }
            width = std::max(width, static_cast<int>(nb.size()));
            for (int x : nb)
                for (int y : nb)
                    if (x != y) a[x][y] = true;
            gone[v] = true;
        }
        best = std::min(best, width);
    } while (std::next_permutation(p.begin(), p.end()));
    return n == 0 ? -1 : best;
}

// Pathwidth as the vertex separation number over all layouts.
inline int brute_pathwidth(const Graph& g) {
    const int n = g.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    int best = n;
    do {
        int width = 0;
        for (int i = 0; i < n; ++i) {
            int c = 0;
            for (int x = 0; x <= i; ++x) {
                for (int y = i + 1; y < n; ++y) {
                    if (g.has_edge(p[x], p[y])) {
                        ++c;
                        break;
                    }
                }
            }
            width = std::max(width, c);
        }
        best = std::min(best, width);
    } while (std::next_permutation(p.begin(), p.end()));
    return n == 0 ? -1 : best;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    mforge::GraphBuilder b(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng)) b.add_edge(i, j);
    return std::move(b).build();
}

} // namespace oracle

namespace oracle {

// Assignments of host vertices to h branch sets or "unused" (value h),
// filtered to connected sets realising every edge of the pattern.
inline bool brute_has_minor(const Graph& g, const Graph& h) {
    const int n = g.order();
    const int k = h.order();
    if (k == 0) return true;
    std::vector<int> label(n, 0);
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= (k + 1);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 0; i < n; ++i) {
            label[i] = static_cast<int>(c % (k + 1));
            c /= (k + 1);
        }
        bool ok = true;
        for (int part = 0; part < k && ok; ++part) {
            std::vector<bool> removed(n);
            bool any = false;
            for (int v = 0; v < n; ++v) {
                removed[v] = label[v] != part;
                any = any || !removed[v];
            }
            ok = any && connected_without(g, removed);
        }
        if (!ok) continue;
        for (auto [a, b] : h.edges()) {
            bool realised = false;
            for (auto [u, v] : g.edges()) {
                if ((label[u] == a && label[v] == b) || (label[u] == b && label[v] == a)) realised = true;
            }
            if (!realised) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Every set partition of 0..n-1 as a label vector (restricted growth strings).
inline void set_partitions(int n, std::vector<int>& cur, int blocks, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int b = 0; b <= blocks; ++b) {
        cur.push_back(b);
        set_partitions(n, cur, std::max(blocks, b + 1), out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> parts_of(const std::vector<int>& labels) {
    int blocks = 0;
    for (int l : labels) blocks = std::max(blocks, l + 1);
    std::vector<std::vector<int>> parts(blocks);
    for (int v = 0; v < static_cast<int>(labels.size()); ++v) parts[labels[v]].push_back(v);
    return parts;
}

inline bool parts_connected(const Graph& g, const std::vector<std::vector<int>>& parts) {
    for (const auto& p : parts) {
        std::vector<bool> removed(g.order(), true);
        for (int v : p) removed[v] = false;
        if (!connected_without(g, removed)) return false;
    }
    return true;
}

inline Graph naive_quotient(const Graph& g, const std::vector<int>& labels, int blocks) {
    mforge::GraphBuilder b(blocks);
    for (auto [u, v] : g.edges()) {
        if (labels[u] >= 0 && labels[v] >= 0 && labels[u] != labels[v]) b.add_edge(labels[u], labels[v]);
    }
    return std::move(b).build();
}

// Certificates of every proper contraction minor.
inline std::set<std::string> brute_contraction_minors(const Graph& g) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    set_partitions(g.order(), cur, 0, all);
    std::set<std::string> out;
    for (const auto& labels : all) {
        const auto parts = parts_of(labels);
        if (static_cast<int>(parts.size()) == g.order() || !parts_connected(g, parts)) continue;
        out.insert(brute_certificate(naive_quotient(g, labels, static_cast<int>(parts.size()))));
    }
    return out;
}

// Certificates of every minor (null graph excluded): choose a used subset,
// a connected partition of it, then any spanning subgraph of the quotient.
inline std::set<std::string> brute_all_minors(const Graph& g) {
    const int n = g.order();
    std::set<std::string> out;
    for (std::uint32_t used = 1; used < (1U << n); ++used) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((used >> v) & 1U) verts.push_back(v);
        std::vector<std::vector<int>> all;
        std::vector<int> cur;
        set_partitions(static_cast<int>(verts.size()), cur, 0, all);
        for (const auto& local : all) {
            std::vector<int> labels(n, -1);
            for (std::size_t i = 0; i < verts.size(); ++i) labels[verts[i]] = local[i];
            auto parts = parts_of(local);
            for (auto& p : parts)
                for (int& v : p) v = verts[v];
            if (!parts_connected(g, parts)) continue;
            const Graph q = naive_quotient(g, labels, static_cast<int>(parts.size()));
            const auto edges = q.edges();
            for (std::uint32_t keep = 0; keep < (1U << edges.size()); ++keep) {
                mforge::GraphBuilder b(q.order());
                for (std::size_t e = 0; e < edges.size(); ++e)
                    if ((keep >> e) & 1U) b.add_edge(edges[e].first, edges[e].second);
                out.insert(brute_certificate(std::move(b).build()));
            }
        }
    }
    return out;
}

inline Graph from_certificate(const std::string& cert) {
    const auto colon = cert.find(':');
    const int n = std::stoi(cert.substr(0, colon));
    mforge::GraphBuilder b(n);
    std::size_t at = colon + 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (cert[at++] == '1') b.add_edge(i, j);
    return std::move(b).build();
}

// Minimal obstruction straight from the definition: f(g) > k and every
// other minor has f <= k.
template <class F>
bool brute_minimal_obstruction(const Graph& g, F f, int k) {
    if (f(g) <= k) return false;
    const auto self = brute_certificate(g);
    for (const auto& cert : brute_all_minors(g)) {
        if (cert != self && f(from_certificate(cert)) > k) return false;
    }
    return true;
}

} // namespace oracle
