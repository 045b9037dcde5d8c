#pragma once

#include <map>
#include <optional>
#include <vector>

#include "baxter/binary_tree.hpp"
#include "baxter/ferrers.hpp"

namespace baxter {

// Tree-like tableau: a Ferrers diagram whose cells are empty or pointed, with
// a pointed root at (1,1), a unique parent (above or left, never both) for
// every other point, and no point-free row or column. Construct through
// validate_tlt; all operations assume a valid tableau.
class TreeLikeTableau {
public:
    const FerrersShape& shape() const { return shape_; }
    const std::vector<Cell>& points() const { return points_; }  // sorted
    int size() const { return static_cast<int>(points_.size()); }

    bool is_pointed(Cell c) const;

    auto operator<=>(const TreeLikeTableau&) const = default;

private:
    friend TreeLikeTableau validate_tlt(const FerrersShape&, const std::vector<Cell>&);
    TreeLikeTableau(FerrersShape shape, std::vector<Cell> points)
        : shape_(std::move(shape)), points_(std::move(points)) {}

    FerrersShape shape_;
    std::vector<Cell> points_;
};

TreeLikeTableau validate_tlt(const FerrersShape& shape, const std::vector<Cell>& points);

TreeLikeTableau size_one_tlt();

// The point at the bottom of its column that is rightmost among such points;
// it carries the largest label.
Cell special_point(const TreeLikeTableau& t);

struct RemovalStep {
    enum class Mode { Row, Column };
    Cell special;
    Mode mode = Mode::Row;
    std::vector<Cell> ribbon;   // coordinates of the tableau the step removed from
    FerrersShape resulting;
};

// Removes the special point together with its empty row or column and its
// ribbon, re-indexing the remaining cells to a fresh Ferrers shape.
std::pair<TreeLikeTableau, RemovalStep> remove_point(const TreeLikeTableau& t);

struct RemovalTrace {
    std::vector<RemovalStep> steps;       // first step removes point n, last removes point 2
    std::map<Cell, int> point_labels;     // every point of the original tableau -> 1..n
    std::map<Cell, int> ins_labels;       // exactly the crossings carry one
};

RemovalTrace removal_trace(const TreeLikeTableau& t);

// Empty cells with a point above them in their column and one to their left
// in their row.
std::vector<Cell> crossings(const TreeLikeTableau& t);

// True when the tableau avoids the two 2x3 / 3x2 point patterns.
bool is_baxter(const TreeLikeTableau& t);

// Parent relations between points: a point below its parent is a left child,
// a point right of its parent is a right child.
BinaryTree underlying_tree(const TreeLikeTableau& t);

// The unique Baxter tableau of rectangular shape with the given underlying
// tree, placed by the recursive left-below / right-beside construction.
TreeLikeTableau rectangular_baxter(const BinaryTree& tree);

struct Decomposition {
    std::optional<TreeLikeTableau> left;    // SW block
    std::optional<TreeLikeTableau> right;   // NE block
    std::vector<int> crossing_block;        // SE block row lengths (may be empty)
};

// Splits a Baxter tableau along the unique vertical and horizontal lines
// separating the left subtree's points from the right subtree's.
Decomposition decompose(const TreeLikeTableau& t);

// Rebuilds the tableau decompose() split; inverse of decompose.
TreeLikeTableau reassemble(const Decomposition& d);

bool is_complete(const TreeLikeTableau& t);        // underlying tree complete
bool is_almost_complete(const TreeLikeTableau& t); // complete after re-attaching spine leaves

// All tableaux of size n, lexicographic by (shape, point list); n! of them.
std::vector<TreeLikeTableau> enumerate_tlts(int n);

// All Baxter tableaux of size n, generated constructively from (tree, bottom
// border) pairs; same canonical order.
std::vector<TreeLikeTableau> enumerate_baxter_tlts(int n);

// All valid single-point insertions into t, i.e. every tableau u of size
// size(t)+1 with remove_point(u) == t. Used by enumerate_tlts and by the
// permutation bijection inverse.
std::vector<TreeLikeTableau> expand_tlt(const TreeLikeTableau& t);

} // namespace baxter
