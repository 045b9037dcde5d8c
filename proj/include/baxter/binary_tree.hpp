#pragma once

#include <vector>

#include "baxter/errors.hpp"

namespace baxter {

// Binary tree in which each node has an optional left and an optional right
// child ("incomplete" binary tree). Nodes are stored in preorder, so two
// equal trees have equal node vectors; node 0 is the root.
struct BinaryTree {
    struct Node {
        int left = -1;
        int right = -1;
        auto operator<=>(const Node&) const = default;
    };
    std::vector<Node> nodes;

    bool empty() const { return nodes.empty(); }
    int size() const { return static_cast<int>(nodes.size()); }

    auto operator<=>(const BinaryTree&) const = default;
};

// Grafts `sub` under a fresh root; either subtree may be empty.
BinaryTree make_tree(const BinaryTree& left, const BinaryTree& right);

// Subtree rooted at node `v`, re-indexed to preorder.
BinaryTree subtree(const BinaryTree& t, int v);

// All binary trees with n nodes, in a deterministic order (Catalan many).
std::vector<BinaryTree> enumerate_binary_trees(int n);

// True when every node has zero or two children.
bool is_complete_tree(const BinaryTree& t);

// Attaches a fresh leaf at the end of the leftmost (resp. rightmost) path.
BinaryTree attach_left_spine_leaf(const BinaryTree& t);
BinaryTree attach_right_spine_leaf(const BinaryTree& t);

// A complete binary tree with n nodes (n odd); deterministic shape.
BinaryTree sample_complete_tree(int n);

} // namespace baxter
