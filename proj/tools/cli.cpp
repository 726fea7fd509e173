#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mforge/block_tree.hpp"
#include "mforge/characterizations.hpp"
#include "mforge/config.hpp"
#include "mforge/constructions.hpp"
#include "mforge/errors.hpp"
#include "mforge/graph_io.hpp"
#include "mforge/minor.hpp"
#include "mforge/params.hpp"
#include "mforge/search.hpp"

namespace mforge::cli {

namespace {

using nlohmann::json;

std::vector<Graph> read_graphs(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    if (out.empty()) {
        throw PreconditionError("no graph6 input on stdin");
    }
    return out;
}

json parts_json(const BranchPartition& w) {
    json j{{"witness_parts", w.parts}};
    if (!w.deleted_edges.empty()) j["witness_deleted_edges"] = w.deleted_edges;
    return j;
}

std::vector<Edge> pairs_from(const std::vector<int>& flat, std::size_t from) {
    if ((flat.size() - from) % 2 != 0) {
        throw PreconditionError("tree edges need an even number of endpoints");
    }
    std::vector<Edge> edges;
    for (std::size_t i = from; i + 1 < flat.size(); i += 2) edges.emplace_back(flat[i], flat[i + 1]);
    return edges;
}

int need(const std::vector<int>& args, std::size_t count, const std::string& family) {
    if (args.size() < count) {
        throw PreconditionError(family + " needs " + std::to_string(count) + " integer argument(s)");
    }
    return args[0];
}

std::vector<Graph> construct(const std::string& name, const std::vector<int>& args, std::istream& in) {
    if (name == "complete") return {complete_graph(need(args, 1, name))};
    if (name == "empty") return {empty_graph(need(args, 1, name))};
    if (name == "cycle") return {cycle_graph(need(args, 1, name))};
    if (name == "path") return {path_graph(need(args, 1, name))};
    if (name == "multipartite") {
        need(args, 1, name);
        return {complete_multipartite(args)};
    }
    if (name == "tight") return {tight_regular_example(need(args, 1, name))};
    if (name == "horned") return {single_horned(need(args, 1, name)).graph};
    if (name == "double-horned") {
        need(args, 3, name);
        return {double_horned(args[0], args[1], args[2]).graph};
    }
    if (name == "low-high-tree") {
        const int n = need(args, 1, name);
        return {graph_from_low_high_tree(LowHighTree(n, pairs_from(args, 1))).graph};
    }
    if (name == "block-tree") {
        const int n = need(args, 1, name);
        return {graph_from_block_tree(n, pairs_from(args, 1)).graph};
    }
    if (name == "figure-tree") return {graph_from_low_high_tree(figure_tree()).graph};
    if (name == "example-tree") return {graph_from_low_high_tree(figure_example_tree()).graph};
    if (name == "plus") {
        const int p = need(args, 1, name);
        std::vector<Graph> out;
        for (const auto& g : read_graphs(in)) out.push_back(plus_dominating(g, p));
        return out;
    }
    if (name == "plus-min") {
        std::vector<Graph> out;
        for (const auto& g : read_graphs(in)) out.push_back(plus_min_degree(g));
        return out;
    }
    return {named_graph(name)};
}

json block_tree_json(const Graph& g) {
    const BlockTree t = block_tree(g);
    json nodes = json::array();
    json edges = json::array();
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const bool block = t.nodes[i].kind == BlockTreeNode::Kind::Block;
        nodes.push_back({{"kind", block ? "block" : "cut_vertex"}, {"vertices", t.nodes[i].vertices}});
        for (int j : t.adj[i]) {
            if (static_cast<int>(i) < j) edges.push_back({i, j});
        }
    }
    return {{"graph", to_graph6(g)},
            {"blocks", t.block_count()},
            {"cut_vertices", t.cut_vertex_count()},
            {"nodes", nodes},
            {"edges", edges}};
}

json audit_json(const Graph& g, int k, const Budget& budget) {
    const AuditReport r = audit_obstruction_properties(g, k, budget);
    json j{{"graph", to_graph6(g)},
           {"k", k},
           {"low_count", r.low_count},
           {"many_lows", r.many_lows},
           {"common_neighbour", r.common_neighbour},
           {"sparse_subgraph", r.sparse_subgraph},
           {"sparse_subgraphs_checked", r.sparse_subgraphs_checked},
           {"clique_neighbour", r.clique_neighbour},
           {"cliques_checked", r.cliques_checked},
           {"all_pass", r.all_pass()}};
    if (!r.failure.empty()) j["failure"] = r.failure;
    return j;
}

json small_regular_json(const Graph& g, int k, const Budget& budget) {
    const auto r = small_regular_check(g, k, budget);
    json j{{"graph", to_graph6(g)},
           {"k", k},
           {"regular", r.regular},
           {"applies", r.applies},
           {"min_edge_triangles", r.min_edge_triangles},
           {"many_triangles_condition", r.many_triangles_condition}};
    if (r.member) j["member"] = *r.member;
    return j;
}

struct Options {
    std::string name;
    std::vector<int> ints;
    bool dot = false;
    bool json_out = false;
    bool delta = false, kappa = false, tw = false, pw = false, alpha = false;
    std::string param;
    int k = -1;
    bool obstruction = false;
    std::string target;
    int max_order = 0;
    std::string manifest;
    int regular = -1;
    int min_degree = 0;
    std::string mode = "obstruction";
    std::vector<int> set;
    int jobs = 0;
    long long budget_states = 0;
};

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact graph-minor toolkit", "mforge"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--jobs", o.jobs, "Worker threads (overrides MFORGE_JOBS)")->check(CLI::PositiveNumber);
    app.add_option("--budget-states", o.budget_states, "Search state limit (overrides MFORGE_BUDGET_STATES)")
        ->check(CLI::PositiveNumber);

    auto* construct_cmd = app.add_subcommand("construct", "Print a named graph or a family member as graph6");
    construct_cmd->add_option("name", o.name, "Named graph or family")->required();
    construct_cmd->add_option("params", o.ints, "Integer parameters");
    construct_cmd->add_flag("--dot", o.dot, "Print DOT instead of graph6");

    auto* param_cmd = app.add_subcommand("param", "Evaluate a parameter on each input graph");
    auto* which = param_cmd->add_option_group("parameter");
    which->add_flag("--delta", o.delta);
    which->add_flag("--kappa", o.kappa);
    which->add_flag("--tw", o.tw);
    which->add_flag("--pw", o.pw);
    which->add_flag("--alpha", o.alpha);
    which->require_option(1);
    param_cmd->add_flag("--json", o.json_out, "JSON with the decomposition for tw and pw");

    auto* check_cmd = app.add_subcommand("check", "Membership or minimal-obstruction verdicts as JSON");
    check_cmd->add_option("--param", o.param)->required();
    check_cmd->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
    check_cmd->add_flag("--obstruction", o.obstruction, "Test minimal obstruction instead of membership");

    auto* minor_cmd = app.add_subcommand("minor", "Minor containment with a branch-set witness");
    minor_cmd->add_option("--target", o.target, "Pattern graph in graph6")->required();

    app.add_subcommand("blocktree", "Block decomposition tree as JSON");

    auto* search_cmd = app.add_subcommand("search", "Minimal obstructions up to a vertex bound");
    search_cmd->add_option("--param", o.param)->required();
    search_cmd->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--max-order", o.max_order)->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--manifest", o.manifest, "Write the JSON manifest here");
    search_cmd->add_option("--regular", o.regular, "Only r-regular candidates");
    search_cmd->add_option("--min-degree", o.min_degree, "Only candidates with this minimum degree");

    auto* audit_cmd = app.add_subcommand("audit", "Structural checks and characterisations as JSON");
    audit_cmd->add_option("--k", o.k)->check(CLI::NonNegativeNumber);
    audit_cmd->add_option("--mode", o.mode)
        ->check(CLI::IsMember({"obstruction", "small-regular", "add-vertex", "low-set", "cmg", "four-connected",
                               "k5-k222", "regular-sweep"}));
    audit_cmd->add_option("--param", o.param, "Parameter for --mode cmg");
    audit_cmd->add_option("--set", o.set, "Attachment set for --mode add-vertex")->delimiter(',');

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Budget budget = Budget::from_env();
    if (o.jobs > 0) budget.jobs = o.jobs;
    if (o.budget_states > 0) budget.max_states = static_cast<std::size_t>(o.budget_states);

    try {
        const auto need_k = [&] {
            if (o.k < 0) throw PreconditionError("--k is required for this mode");
        };
        if (*construct_cmd) {
            for (const auto& g : construct(o.name, o.ints, in)) out << (o.dot ? to_dot(g) : to_graph6(g) + "\n");
            return kOk;
        }
        if (*param_cmd) {
            const ParamKind kinds[] = {ParamKind::MinDegree, ParamKind::Connectivity, ParamKind::Treewidth,
                                       ParamKind::Pathwidth};
            const bool picked[] = {o.delta, o.kappa, o.tw, o.pw};
            for (const auto& g : read_graphs(in)) {
                if (g.order() == 0) throw PreconditionError("parameters are undefined on the null graph");
                json j{{"graph", to_graph6(g)}};
                int value = 0;
                if (o.alpha) {
                    value = independence_number(g, budget);
                    j["param"] = "alpha";
                } else {
                    for (int i = 0; i < 4; ++i) {
                        if (!picked[i]) continue;
                        j["param"] = std::string(to_string(kinds[i]));
                        if (kinds[i] == ParamKind::Treewidth || kinds[i] == ParamKind::Pathwidth) {
                            const auto w = kinds[i] == ParamKind::Treewidth ? treewidth(g, budget) : pathwidth(g, budget);
                            value = w.value;
                            j["bags"] = w.witness.bags;
                            j["tree_edges"] = w.witness.tree_edges;
                        } else {
                            value = evaluate(g, kinds[i], budget);
                        }
                    }
                }
                j["value"] = value;
                if (o.json_out) {
                    out << j.dump() << "\n";
                } else {
                    out << value << "\n";
                }
            }
            return kOk;
        }
        if (*check_cmd) {
            const ParamKind kind = param_from_string(o.param);
            bool all = true;
            for (const auto& g : read_graphs(in)) {
                const auto r = o.obstruction ? is_minimal_obstruction(g, kind, o.k, budget) : is_member(g, kind, o.k, budget);
                all = all && r.verdict;
                out << r.to_json().dump() << "\n";
            }
            return all ? kOk : kNegative;
        }
        if (*minor_cmd) {
            const Graph h = from_graph6(o.target);
            bool all = true;
            for (const auto& g : read_graphs(in)) {
                const auto r = has_minor(g, h, budget);
                json j{{"graph", to_graph6(g)}, {"target", to_graph6(h)}, {"found", r.found}};
                if (r.found) j.update(parts_json(r.witness));
                all = all && r.found;
                out << j.dump() << "\n";
            }
            return all ? kOk : kNegative;
        }
        if (app.got_subcommand("blocktree")) {
            for (const auto& g : read_graphs(in)) out << block_tree_json(g).dump() << "\n";
            return kOk;
        }
        if (*search_cmd) {
            SearchSpec spec;
            spec.kind = param_from_string(o.param);
            spec.k = o.k;
            spec.max_order = o.max_order;
            spec.filter.regular_degree = o.regular;
            spec.filter.min_degree = o.min_degree;
            const auto r = obstruction_search(spec, budget);
            out << r.graph6_lines();
            if (!o.manifest.empty()) {
                std::ofstream file(o.manifest);
                if (!file) throw PreconditionError("cannot write manifest to " + o.manifest);
                file << r.manifest().dump(2) << "\n";
            }
            return kOk;
        }
        // audit
        if (o.mode == "regular-sweep") {
            need_k();
            const auto r = regular_family_sweep(o.k, budget);
            out << r.to_json().dump() << "\n";
            const bool ok = r.all_members() && (!r.tight || (!r.tight->member && r.tight->clique_witness));
            return ok ? kOk : kNegative;
        }
        bool all = true;
        for (const auto& g : read_graphs(in)) {
            json j;
            bool ok = true;
            if (o.mode == "obstruction") {
                need_k();
                j = audit_json(g, o.k, budget);
                ok = j["all_pass"];
            } else if (o.mode == "small-regular") {
                need_k();
                j = small_regular_json(g, o.k, budget);
                ok = j.value("member", false);
            } else if (o.mode == "add-vertex") {
                need_k();
                const bool verdict = add_vertex_characterisation(g, o.set, o.k, budget);
                auto s = o.set;
                std::sort(s.begin(), s.end());
                j = {{"graph", to_graph6(g)}, {"k", o.k}, {"set", s}, {"obstruction", verdict},
                     {"set_is_low_degree", s == low_degree_vertices(g)}};
                ok = verdict;
            } else if (o.mode == "low-set") {
                need_k();
                ok = low_set_conditions(g, o.k);
                j = {{"graph", to_graph6(g)}, {"k", o.k}, {"conditions_hold", ok}};
                if (ok) j["member"] = is_minimal_obstruction(g, ParamKind::MinDegree, o.k, budget).verdict;
            } else if (o.mode == "cmg") {
                need_k();
                const auto shape = multipartite_shape(g);
                if (shape.empty()) throw PreconditionError("input is not complete multipartite");
                const ParamKind kind = param_from_string(o.param);
                ok = cmg_obstruction_predicate(shape, kind, o.k);
                j = {{"graph", to_graph6(g)}, {"shape", shape}, {"param", std::string(to_string(kind))},
                     {"k", o.k}, {"predicate", ok}};
            } else if (o.mode == "four-connected") {
                const auto r = find_4_connected_minor(g);
                j = {{"graph", to_graph6(g)}, {"minor", to_graph6(r.minor)}, {"steps", r.steps}};
                j.update(parts_json(r.witness));
            } else {
                const auto r = find_k5_or_k222(g, budget);
                j = {{"graph", to_graph6(g)}, {"target", r.target}};
                j.update(parts_json(r.witness));
            }
            all = all && ok;
            out << j.dump() << "\n";
        }
        return all ? kOk : kNegative;
    } catch (const BudgetExceeded& e) {
        err << "mforge: budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        err << "mforge: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace mforge::cli
