#include "baxter/binary_tree.hpp"

namespace baxter {

namespace {

// Appends `src` rooted at src-node v into `dst` in preorder; returns the new
// index.
int append_subtree(BinaryTree& dst, const BinaryTree& src, int v) {
    int idx = dst.size();
    dst.nodes.push_back({});
    int l = src.nodes[v].left;
    int r = src.nodes[v].right;
    if (l >= 0) dst.nodes[idx].left = append_subtree(dst, src, l);
    if (r >= 0) dst.nodes[idx].right = append_subtree(dst, src, r);
    return idx;
}

} // namespace

BinaryTree make_tree(const BinaryTree& left, const BinaryTree& right) {
    BinaryTree t;
    t.nodes.push_back({});
    if (!left.empty()) t.nodes[0].left = append_subtree(t, left, 0);
    if (!right.empty()) t.nodes[0].right = append_subtree(t, right, 0);
    return t;
}

BinaryTree subtree(const BinaryTree& t, int v) {
    BinaryTree s;
    if (v >= 0) append_subtree(s, t, v);
    return s;
}

std::vector<BinaryTree> enumerate_binary_trees(int n) {
    require(n >= 0, Err::PreconditionViolated, "tree size must be nonnegative");
    if (n == 0) return {BinaryTree{}};
    std::vector<BinaryTree> out;
    for (int l = 0; l <= n - 1; ++l) {
        for (const BinaryTree& left : enumerate_binary_trees(l))
            for (const BinaryTree& right : enumerate_binary_trees(n - 1 - l))
                out.push_back(make_tree(left, right));
    }
    return out;
}

bool is_complete_tree(const BinaryTree& t) {
    for (const auto& node : t.nodes)
        if ((node.left >= 0) != (node.right >= 0)) return false;
    return true;
}

BinaryTree attach_left_spine_leaf(const BinaryTree& t) {
    if (t.empty()) {
        BinaryTree s;
        s.nodes.push_back({});
        return s;
    }
    BinaryTree s = t;
    int v = 0;
    while (s.nodes[v].left >= 0) v = s.nodes[v].left;
    // Insert the new node right after v in preorder; shift indices >= v+1.
    int pos = v + 1;
    for (auto& node : s.nodes) {
        if (node.left >= pos) ++node.left;
        if (node.right >= pos) ++node.right;
    }
    s.nodes.insert(s.nodes.begin() + pos, BinaryTree::Node{});
    s.nodes[v].left = pos;
    return s;
}

BinaryTree attach_right_spine_leaf(const BinaryTree& t) {
    if (t.empty()) {
        BinaryTree s;
        s.nodes.push_back({});
        return s;
    }
    BinaryTree s = t;
    int v = 0;
    while (s.nodes[v].right >= 0) v = s.nodes[v].right;
    // In preorder the right spine's last node is followed only by its own
    // (new) right subtree, which goes at the end of the vector.
    int pos = s.size();
    s.nodes.push_back({});
    s.nodes[v].right = pos;
    return s;
}

BinaryTree sample_complete_tree(int n) {
    require(n >= 1 && n % 2 == 1, Err::PreconditionViolated,
            "complete binary trees have an odd number of nodes");
    if (n == 1) {
        BinaryTree t;
        t.nodes.push_back({});
        return t;
    }
    int rest = n - 1;              // split among the two subtrees, both odd
    int left = rest / 2;
    if (left % 2 == 0) ++left;
    return make_tree(sample_complete_tree(left), sample_complete_tree(rest - left));
}

} // namespace baxter
