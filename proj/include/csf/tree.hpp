#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "csf/errors.hpp"

namespace csf {

// Unrooted tree on vertices 0..d-1. Immutable after construction; edges are
// stored as (min,max) pairs sorted ascending.
class Tree {
public:
    // Validates edge count, label range, duplicates, connectivity.
    static Tree from_edges(int order, std::vector<std::pair<int, int>> edges);
    static Tree single_vertex();

    int order() const { return order_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    const std::vector<int>& neighbors(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const {
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }
    int leaf_count() const;
    bool has_edge(int u, int v) const;

private:
    Tree() = default;
    int order_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

struct RootedTree {
    Tree tree;
    int root = 0;
};

// Balanced-parenthesis AHU form; equal codes <=> isomorphic.
using CanonicalCode = std::string;

// Line-oriented "u v" edge list; '#' starts a comment; blank lines ignored.
// d is inferred as (max label)+1. Empty input (no edges) is a FormatError.
Tree parse_tree(std::istream& in);
Tree parse_tree_text(const std::string& text);

// Edges as "u v" lines sorted by (min,max); empty string for a single vertex.
std::string serialize_tree(const Tree& t);

// Leaf = "()"; internal = "(" + children codes in ascending byte order + ")".
CanonicalCode rooted_canonical_code(const Tree& t, int root);
inline CanonicalCode rooted_canonical_code(const RootedTree& r) {
    return rooted_canonical_code(r.tree, r.root);
}

// One or two vertices minimizing the largest component left by their removal.
std::vector<int> centroids(const Tree& t);

// Byte-wise smallest rooted code over centroid roots.
CanonicalCode canonical_code(const Tree& t);

// Components after deleting edge {u,v}: (side of u rooted at u, side of v
// rooted at v). Each side is relabeled by BFS from its root, so root = 0.
std::pair<RootedTree, RootedTree> split_at_edge(const Tree& t, int u, int v);

// Inverse of the code maps: vertices labeled in DFS preorder, root = 0.
RootedTree rooted_tree_from_code(const CanonicalCode& code);
Tree tree_from_code(const CanonicalCode& code);

// New tree with vertex v renamed perm[v]; perm must be a permutation of 0..d-1.
Tree relabel(const Tree& t, const std::vector<int>& perm);

}  // namespace csf
