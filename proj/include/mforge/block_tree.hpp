#pragma once

#include <string>
#include <vector>

#include "mforge/graph.hpp"

namespace mforge {

struct BlockTreeNode {
    enum class Kind { Block, CutVertex };
    Kind kind = Kind::Block;
    /// Block: sorted member vertices. CutVertex: the single vertex.
    std::vector<int> vertices;
};

/// Block decomposition tree of a connected graph: one node per block (cut
/// edges and maximal 2-connected pieces) and per cut-vertex, with a block
/// joined to each cut-vertex it contains.
struct BlockTree {
    std::vector<BlockTreeNode> nodes;
    std::vector<std::vector<int>> adj;

    std::size_t block_count() const;
    std::size_t cut_vertex_count() const;
};

/// Throws PreconditionError on a disconnected (or empty) graph.
BlockTree block_tree(const Graph& g);

/// Bipartite Block/CutVertex, leaves are blocks, each cut-vertex has >= 2
/// neighbours, and the node adjacency is a tree.
bool satisfies_block_tree_invariants(const BlockTree& t);

/// Unrooted tree whose vertices carry small integer tags.
struct TaggedTree {
    std::vector<std::vector<int>> adj;
    std::vector<int> tag;
};

TaggedTree as_tagged_tree(const BlockTree& t);

/// AHU-style canonical string, minimised over the tree's centres.
std::string tree_canonical_string(const TaggedTree& t);
bool tagged_trees_isomorphic(const TaggedTree& a, const TaggedTree& b);

/// True when adj describes a tree (connected, |E| = |V| - 1).
bool is_tree(const std::vector<std::vector<int>>& adj);

} // namespace mforge
