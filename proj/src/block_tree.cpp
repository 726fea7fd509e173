#include "mforge/block_tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mforge/errors.hpp"

namespace mforge {

std::size_t BlockTree::block_count() const {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const auto& x) {
        return x.kind == BlockTreeNode::Kind::Block;
    }));
}

std::size_t BlockTree::cut_vertex_count() const {
    return nodes.size() - block_count();
}

BlockTree block_tree(const Graph& g) {
    if (!is_connected(g)) {
        throw PreconditionError("block_tree: graph is not connected; the decomposition is undefined");
    }
    const int n = g.order();
    BlockTree out;
    if (n == 1) {
        out.nodes.push_back({BlockTreeNode::Kind::Block, {0}});
        out.adj.resize(1);
        return out;
    }

    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        nbrs[static_cast<std::size_t>(v)] = g.neighbours(v);
    }
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t next;
    };
    std::vector<Frame> stack{{0, -1, 0}};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        auto& f = stack.back();
        const auto& nv = nbrs[static_cast<std::size_t>(f.v)];
        if (f.next < nv.size()) {
            const int w = nv[f.next++];
            if (disc[static_cast<std::size_t>(w)] == -1) {
                edge_stack.emplace_back(f.v, w);
                disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                stack.push_back({w, f.v, 0});
            } else if (w != f.parent && disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
                edge_stack.emplace_back(f.v, w);
                low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
            }
            continue;
        }
        const int v = f.v;
        const int p = f.parent;
        stack.pop_back();
        if (p < 0) {
            continue;
        }
        low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
            std::set<int> members;
            while (true) {
                auto e = edge_stack.back();
                edge_stack.pop_back();
                members.insert(e.first);
                members.insert(e.second);
                if (e == Edge{p, v}) {
                    break;
                }
            }
            blocks.emplace_back(members.begin(), members.end());
        }
    }

    std::vector<int> block_count_of(static_cast<std::size_t>(n), 0);
    for (const auto& b : blocks) {
        for (int v : b) {
            ++block_count_of[static_cast<std::size_t>(v)];
        }
    }
    std::sort(blocks.begin(), blocks.end());
    std::vector<int> cut_node(static_cast<std::size_t>(n), -1);
    for (const auto& b : blocks) {
        out.nodes.push_back({BlockTreeNode::Kind::Block, b});
    }
    for (int v = 0; v < n; ++v) {
        if (block_count_of[static_cast<std::size_t>(v)] >= 2) {
            cut_node[static_cast<std::size_t>(v)] = static_cast<int>(out.nodes.size());
            out.nodes.push_back({BlockTreeNode::Kind::CutVertex, {v}});
        }
    }
    out.adj.resize(out.nodes.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (int v : blocks[i]) {
            const int c = cut_node[static_cast<std::size_t>(v)];
            if (c >= 0) {
                out.adj[i].push_back(c);
                out.adj[static_cast<std::size_t>(c)].push_back(static_cast<int>(i));
            }
        }
    }
    return out;
}

bool is_tree(const std::vector<std::vector<int>>& adj) {
    if (adj.empty()) {
        return false;
    }
    std::size_t degree_sum = 0;
    for (const auto& a : adj) {
        degree_sum += a.size();
    }
    if (degree_sum != 2 * (adj.size() - 1)) {
        return false;
    }
    std::vector<int> seen(adj.size(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (int w : adj[static_cast<std::size_t>(queue[i])]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    return queue.size() == adj.size();
}

bool satisfies_block_tree_invariants(const BlockTree& t) {
    if (t.nodes.size() != t.adj.size() || !is_tree(t.adj)) {
        return false;
    }
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const bool is_cut = t.nodes[i].kind == BlockTreeNode::Kind::CutVertex;
        for (int j : t.adj[i]) {
            if ((t.nodes[static_cast<std::size_t>(j)].kind == BlockTreeNode::Kind::CutVertex) == is_cut) {
                return false;
            }
        }
        if (is_cut && t.adj[i].size() < 2) {
            return false;
        }
    }
    return true;
}

TaggedTree as_tagged_tree(const BlockTree& t) {
    TaggedTree out;
    out.adj = t.adj;
    for (const auto& node : t.nodes) {
        out.tag.push_back(node.kind == BlockTreeNode::Kind::Block ? 0 : 1);
    }
    return out;
}

namespace {

std::vector<int> tree_centres(const std::vector<std::vector<int>>& adj) {
    const std::size_t n = adj.size();
    if (n <= 2) {
        std::vector<int> all(n);
        for (std::size_t i = 0; i < n; ++i) {
            all[i] = static_cast<int>(i);
        }
        return all;
    }
    std::vector<int> deg(n);
    std::vector<int> layer;
    for (std::size_t i = 0; i < n; ++i) {
        deg[i] = static_cast<int>(adj[i].size());
        if (deg[i] <= 1) {
            layer.push_back(static_cast<int>(i));
        }
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<int> next;
        for (int v : layer) {
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (--deg[static_cast<std::size_t>(w)] == 1) {
                    next.push_back(w);
                }
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

} // namespace

std::string tree_canonical_string(const TaggedTree& t) {
    if (!is_tree(t.adj)) {
        throw PreconditionError("tree_canonical_string: input is not a tree");
    }
    std::function<std::string(int, int)> encode = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (int w : t.adj[static_cast<std::size_t>(v)]) {
            if (w != parent) {
                kids.push_back(encode(w, v));
            }
        }
        std::sort(kids.begin(), kids.end());
        std::string s = "(" + std::to_string(t.tag[static_cast<std::size_t>(v)]);
        for (auto& k : kids) {
            s += k;
        }
        return s + ")";
    };
    std::string best;
    for (int c : tree_centres(t.adj)) {
        auto s = encode(c, -1);
        if (best.empty() || s < best) {
            best = std::move(s);
        }
    }
    return best;
}

bool tagged_trees_isomorphic(const TaggedTree& a, const TaggedTree& b) {
    return a.adj.size() == b.adj.size() && tree_canonical_string(a) == tree_canonical_string(b);
}

} // namespace mforge
