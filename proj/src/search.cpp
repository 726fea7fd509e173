#include "mforge/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "mforge/canonical.hpp"
#include "mforge/constructions.hpp"
#include "mforge/errors.hpp"
#include "mforge/graph_io.hpp"
#include "mforge/mask_graph.hpp"

namespace mforge {

namespace {

// Runs body(i) for i in [0, count) over `jobs` threads. The first exception
// thrown by any worker is rethrown here.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, jobs)), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_lock;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_lock);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

MaskGraph relabelled(const MaskGraph& g, const std::vector<int>& order) {
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
    MaskGraph out(g.n);
    for (int u = 0; u < g.n; ++u) {
        for_each_bit(g.adj[u] & low_bits(u), [&](int v) { out.add_edge(pos[u], pos[v]); });
    }
    return out;
}

// Degree bounds a graph with `remaining` vertices still to come must meet.
bool can_grow(const MaskGraph& g, int remaining, const GraphFilter& f) {
    const int need = std::max(f.min_degree, f.regular_degree);
    for (int v = 0; v < g.n; ++v) {
        const int d = g.degree(v);
        if (d + remaining < need) return false;
        if (f.regular_degree >= 0 && d > f.regular_degree) return false;
    }
    return true;
}

bool passes(const MaskGraph& g, const GraphFilter& f) {
    for (int v = 0; v < g.n; ++v) {
        const int d = g.degree(v);
        if (d < f.min_degree) return false;
        if (f.regular_degree >= 0 && d != f.regular_degree) return false;
    }
    return !f.connected_only || is_connected(g);
}

} // namespace

std::vector<Graph> enumerate_graphs(int n, const GraphFilter& filter, const Budget& budget) {
    if (n < 1) {
        throw PreconditionError("enumerate_graphs needs n >= 1");
    }
    if (n > budget.max_enumeration_order || n > kMaskLimit) {
        throw BudgetExceeded("enumeration limited to " + std::to_string(budget.max_enumeration_order) +
                             " vertices, asked for " + std::to_string(n));
    }
    std::vector<MaskGraph> level{MaskGraph(1)};
    if (!can_grow(level.front(), n - 1, filter)) level.clear();
    std::size_t states = 0;
    for (int m = 1; m < n; ++m) {
        const int remaining = n - m - 1;
        std::vector<std::vector<std::pair<CanonicalForm, MaskGraph>>> found(level.size());
        parallel_for(level.size(), budget.jobs, [&](std::size_t i) {
            const MaskGraph& parent = level[i];
            const CanonicalForm parent_form = canonical_form(parent);
            for (VertexMask s = 0; s <= low_bits(m); ++s) {
                MaskGraph child(m + 1);
                for (int u = 0; u < m; ++u) child.adj[u] = parent.adj[u];
                for_each_bit(s, [&](int u) { child.add_edge(u, m); });
                if (!can_grow(child, remaining, filter)) continue;
                const CanonicalLabelling lab = canonical_labelling(child);
                const int last = lab.order.back();
                if (last != m && canonical_form(remove_vertex(child, last)) != parent_form) continue;
                found[i].emplace_back(lab.form, relabelled(child, lab.order));
            }
        });
        std::map<CanonicalForm, MaskGraph> next;
        for (auto& batch : found) {
            for (auto& [form, g] : batch) next.emplace(std::move(form), std::move(g));
        }
        states += next.size();
        if (states > budget.max_states) {
            throw BudgetExceeded("enumeration exceeded " + std::to_string(budget.max_states) + " graphs at order " +
                                 std::to_string(m + 1));
        }
        level.clear();
        for (auto& [form, g] : next) level.push_back(std::move(g));
    }
    std::vector<Graph> out;
    for (const auto& g : level) {
        if (passes(g, filter)) out.push_back(g.to_graph());
    }
    return out;
}

nlohmann::json SearchSpec::to_json() const {
    nlohmann::json j{{"param", std::string(to_string(kind))}, {"k", k}, {"max_order", max_order}};
    j["filters"] = {{"connected_only", filter.connected_only},
                    {"regular_degree", filter.regular_degree},
                    {"min_degree", filter.min_degree}};
    return j;
}

nlohmann::json SearchResult::manifest() const {
    return {{"spec", spec.to_json()}, {"count", obstructions.size()}, {"complete_up_to", complete_up_to}};
}

std::string SearchResult::graph6_lines() const {
    std::string out;
    for (const auto& g : obstructions) out += to_graph6(g) + "\n";
    return out;
}

namespace {

// Cheap necessary conditions before the full check.
bool plausible(const Graph& g, ParamKind kind, int k) {
    if (kind != ParamKind::MinDegree) return true;
    if (g.min_degree() != k + 1) return false;
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) > k + 1 && g.degree(v) > k + 1) return false;
    }
    return true;
}

} // namespace

SearchResult obstruction_search(const SearchSpec& spec, const Budget& budget) {
    if (spec.max_order < 1) {
        throw PreconditionError("max_order must be at least 1");
    }
    if (spec.k < 0) {
        throw PreconditionError("k must be non-negative");
    }
    SearchResult result;
    result.spec = spec;
    GraphFilter filter = spec.filter;
    filter.connected_only = true;
    if (spec.kind == ParamKind::MinDegree || spec.kind == ParamKind::Connectivity) {
        filter.min_degree = std::max(filter.min_degree, spec.k + 1);
    }
    for (int n = 1; n <= spec.max_order; ++n) {
        const auto candidates = enumerate_graphs(n, filter, budget);
        result.candidates += candidates.size();
        std::vector<char> keep(candidates.size(), 0);
        parallel_for(candidates.size(), budget.jobs, [&](std::size_t i) {
            const Graph& g = candidates[i];
            keep[i] = plausible(g, spec.kind, spec.k) &&
                      is_minimal_obstruction(g, spec.kind, spec.k, budget).verdict;
        });
        std::vector<std::pair<std::string, Graph>> found;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (keep[i]) found.emplace_back(to_graph6(candidates[i]), candidates[i]);
        }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
            if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
            return a.first < b.first;
        });
        for (auto& [text, g] : found) result.obstructions.push_back(std::move(g));
        result.complete_up_to = n;
    }
    return result;
}

bool RegularSweepReport::all_members() const {
    for (const auto& level : levels) {
        if (std::find(level.member.begin(), level.member.end(), false) != level.member.end()) return false;
    }
    return true;
}

nlohmann::json RegularSweepReport::to_json() const {
    nlohmann::json j{{"k", k}, {"all_members", all_members()}};
    j["levels"] = nlohmann::json::array();
    for (const auto& level : levels) {
        nlohmann::json graphs = nlohmann::json::array();
        for (std::size_t i = 0; i < level.graphs.size(); ++i) {
            graphs.push_back({{"graph", to_graph6(level.graphs[i])}, {"member", static_cast<bool>(level.member[i])}});
        }
        j["levels"].push_back({{"n", level.n}, {"graphs", graphs}});
    }
    if (tight) {
        j["tight"] = {{"graph", to_graph6(tight->graph)},
                      {"clique_order", tight->clique.order()},
                      {"clique_minor", tight->clique_witness.has_value()},
                      {"member", tight->member}};
    }
    return j;
}

RegularSweepReport regular_family_sweep(int k, const Budget& budget) {
    if (k < 0) {
        throw PreconditionError("k must be non-negative");
    }
    RegularSweepReport report;
    report.k = k;
    GraphFilter filter;
    filter.regular_degree = k + 1;
    for (int n = k + 2; 3 * n < 4 * (k + 2); ++n) {
        RegularLevel level;
        level.n = n;
        level.graphs = enumerate_graphs(n, filter, budget);
        level.member.assign(level.graphs.size(), false);
        std::vector<char> verdicts(level.graphs.size(), 0);
        parallel_for(level.graphs.size(), budget.jobs, [&](std::size_t i) {
            verdicts[i] = is_minimal_obstruction(level.graphs[i], ParamKind::MinDegree, k, budget).verdict;
        });
        for (std::size_t i = 0; i < verdicts.size(); ++i) level.member[i] = verdicts[i] != 0;
        report.levels.push_back(std::move(level));
    }
    if (k % 3 == 1) {
        TightCheck t;
        t.graph = tight_regular_example(k);
        t.clique = complete_graph(k + 2);
        const auto m = has_minor(t.graph, t.clique, budget);
        if (m.found) t.clique_witness = m.witness;
        t.member = is_minimal_obstruction(t.graph, ParamKind::MinDegree, k, budget).verdict;
        report.tight = std::move(t);
    }
    return report;
}

} // namespace mforge
