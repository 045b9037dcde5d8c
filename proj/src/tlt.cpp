#include "baxter/tlt.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "baxter/lattice.hpp"

namespace baxter {

namespace {

std::string cell_str(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// Boolean grid of pointed cells, 1-indexed.
struct PointGrid {
    int rows, cols;
    std::vector<char> pointed;
    PointGrid(const TreeLikeTableau& t)
        : rows(t.shape().row_count()), cols(t.shape().width()),
          pointed(static_cast<size_t>(rows) * cols, 0) {
        for (Cell p : t.points()) pointed[static_cast<size_t>(p.row - 1) * cols + (p.col - 1)] = 1;
    }
    bool at(int r, int c) const {
        return r >= 1 && r <= rows && c >= 1 && c <= cols &&
               pointed[static_cast<size_t>(r - 1) * cols + (c - 1)];
    }
};

} // namespace

bool TreeLikeTableau::is_pointed(Cell c) const {
    return std::binary_search(points_.begin(), points_.end(), c);
}

TreeLikeTableau validate_tlt(const FerrersShape& shape, const std::vector<Cell>& points) {
    std::vector<Cell> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), Err::InvalidObject,
            "duplicate pointed cell");
    for (Cell c : sorted)
        require(shape.contains(c), Err::CellOutsideShape, "point " + cell_str(c));

    TreeLikeTableau t(shape, sorted);
    require(t.is_pointed({1, 1}), Err::RootMissing, "cell (1,1) must be pointed");

    for (Cell c : sorted) {
        if (c == Cell{1, 1}) continue;
        bool above = false, left = false;
        for (int r = 1; r < c.row && !above; ++r) above = t.is_pointed({r, c.col});
        for (int j = 1; j < c.col && !left; ++j) left = t.is_pointed({c.row, j});
        if (above && left) fail(Err::ParentAmbiguous, "point " + cell_str(c));
        if (!above && !left) fail(Err::ParentMissing, "point " + cell_str(c));
    }

    std::vector<char> row_has(shape.row_count() + 1, 0), col_has(shape.width() + 1, 0);
    for (Cell c : sorted) {
        row_has[c.row] = 1;
        col_has[c.col] = 1;
    }
    for (int r = 1; r <= shape.row_count(); ++r)
        require(row_has[r], Err::EmptyRowOrColumn, "row " + std::to_string(r));
    for (int c = 1; c <= shape.width(); ++c)
        require(col_has[c], Err::EmptyRowOrColumn, "column " + std::to_string(c));

    require(t.size() == shape.semi_perimeter() - 1, Err::InvalidObject,
            "size must equal semi-perimeter minus 1");
    return t;
}

TreeLikeTableau size_one_tlt() {
    return validate_tlt(FerrersShape({1}), {{1, 1}});
}

Cell special_point(const TreeLikeTableau& t) {
    Cell best{0, 0};
    for (Cell p : t.points()) {
        if (t.shape().contains({p.row + 1, p.col})) continue; // cell below exists
        if (p.col > best.col) best = p;
    }
    return best;
}

std::pair<TreeLikeTableau, RemovalStep> remove_point(const TreeLikeTableau& t) {
    require(t.size() >= 2, Err::SizeOne, "cannot remove the root point");
    const FerrersShape& sh = t.shape();
    Cell s = special_point(t);

    bool above = false;
    for (int r = 1; r < s.row && !above; ++r) above = t.is_pointed({r, s.col});

    RemovalStep step;
    step.special = s;
    step.mode = above ? RemovalStep::Mode::Row : RemovalStep::Mode::Column;

    std::set<Cell> removed;
    removed.insert(s);
    if (above) {
        for (int j = 1; j < s.col; ++j) removed.insert({s.row, j}); // empty row of s
    } else {
        for (int r = 1; r < s.row; ++r) removed.insert({r, s.col}); // empty column of s
    }

    // Ribbon: walk the SE border from the cell right of s until a point.
    if (sh.contains({s.row, s.col + 1})) {
        Cell c{s.row, s.col + 1};
        while (true) {
            require(sh.contains(c), Err::InvalidObject, "ribbon walk left the shape");
            if (t.is_pointed(c)) break;
            step.ribbon.push_back(c);
            removed.insert(c);
            if (sh.contains({c.row, c.col + 1}))
                c.col += 1;
            else
                c.row -= 1;
        }
    }

    // Excise removed cells; surviving cells shift by the step's pivot only.
    std::vector<int> new_len;
    std::vector<Cell> new_points;
    std::vector<int> row_map(sh.row_count() + 1, 0);
    int next_row = 0;
    for (int r = 1; r <= sh.row_count(); ++r) {
        int len = 0;
        for (int c = 1; c <= sh.row_length(r); ++c)
            if (!removed.count({r, c})) ++len;
        if (len > 0) row_map[r] = ++next_row, new_len.push_back(len);
    }
    for (Cell p : t.points()) {
        if (p == s) continue;
        int nr = row_map[p.row];
        int nc = p.col;
        if (!above && p.col > s.col) nc -= 1; // column mode shifts right part left
        require(nr > 0, Err::InvalidObject, "surviving point lost its row");
        new_points.push_back({nr, nc});
    }
    TreeLikeTableau result = validate_tlt(FerrersShape(new_len), new_points);
    step.resulting = result.shape();
    return {result, step};
}

RemovalTrace removal_trace(const TreeLikeTableau& t) {
    RemovalTrace trace;
    // orig[...] maps each live cell of the working tableau to the cell of t
    // it came from; removals only shift one row or column index.
    std::map<Cell, Cell> orig;
    for (int r = 1; r <= t.shape().row_count(); ++r)
        for (int c = 1; c <= t.shape().row_length(r); ++c) orig[{r, c}] = {r, c};

    TreeLikeTableau cur = t;
    while (cur.size() >= 2) {
        int n = cur.size();
        auto [next, step] = remove_point(cur);
        trace.point_labels[orig.at(step.special)] = n;
        for (Cell rc : step.ribbon) trace.ins_labels[orig.at(rc)] = n;

        std::map<Cell, Cell> next_orig;
        bool row_mode = step.mode == RemovalStep::Mode::Row;
        for (int r = 1; r <= cur.shape().row_count(); ++r) {
            for (int c = 1; c <= cur.shape().row_length(r); ++c) {
                Cell cell{r, c};
                bool removed = cell == step.special;
                if (row_mode && r == step.special.row) removed = true;
                if (!row_mode && c == step.special.col && r <= step.special.row) removed = true;
                for (Cell rc : step.ribbon) removed = removed || cell == rc;
                if (removed) continue;
                Cell mapped{row_mode && r > step.special.row ? r - 1 : r,
                            !row_mode && c > step.special.col ? c - 1 : c};
                next_orig[mapped] = orig.at(cell);
            }
        }
        // Translate the recorded step into original coordinates.
        RemovalStep orig_step = step;
        orig_step.special = orig.at(step.special);
        for (Cell& rc : orig_step.ribbon) rc = orig.at(rc);
        trace.steps.push_back(orig_step);

        orig = std::move(next_orig);
        cur = next;
    }
    trace.point_labels[orig.at({1, 1})] = 1;
    return trace;
}

std::vector<Cell> crossings(const TreeLikeTableau& t) {
    PointGrid g(t);
    std::vector<Cell> out;
    for (int r = 1; r <= t.shape().row_count(); ++r) {
        for (int c = 1; c <= t.shape().row_length(r); ++c) {
            if (g.at(r, c)) continue;
            bool above = false, left = false;
            for (int i = 1; i < r && !above; ++i) above = g.at(i, c);
            for (int j = 1; j < c && !left; ++j) left = g.at(r, j);
            if (above && left) out.push_back({r, c});
        }
    }
    return out;
}

bool is_baxter(const TreeLikeTableau& t) {
    PointGrid g(t);
    const FerrersShape& sh = t.shape();
    // Horizontal pattern: rows i1<i2, columns j1<j2<j3 with points at
    // (i2,j1), (i1,j2), (i2,j3) and empty cells at (i2,j2), (i1,j3). The
    // corner (i1,j1) may be anything, which merges the two drawn variants.
    for (int i2 = 2; i2 <= sh.row_count(); ++i2) {
        for (int j2 = 2; j2 < sh.row_length(i2); ++j2) {
            if (g.at(i2, j2)) continue;
            bool left = false;
            for (int j1 = 1; j1 < j2 && !left; ++j1) left = g.at(i2, j1);
            if (!left) continue;
            for (int i1 = 1; i1 < i2; ++i1) {
                if (!g.at(i1, j2)) continue;
                for (int j3 = j2 + 1; j3 <= sh.row_length(i2); ++j3)
                    if (g.at(i2, j3) && !g.at(i1, j3)) return false;
            }
        }
    }
    // Vertical pattern: transpose of the above.
    for (int j2 = 2; j2 <= sh.width(); ++j2) {
        for (int i2 = 2; i2 <= sh.row_count(); ++i2) {
            if (!sh.contains({i2, j2}) || g.at(i2, j2)) continue;
            bool above = false;
            for (int i1 = 1; i1 < i2 && !above; ++i1) above = g.at(i1, j2);
            if (!above) continue;
            for (int j1 = 1; j1 < j2; ++j1) {
                if (!g.at(i2, j1)) continue;
                for (int i3 = i2 + 1; i3 <= sh.row_count(); ++i3)
                    if (sh.contains({i3, j2}) && g.at(i3, j2) && !g.at(i3, j1)) return false;
            }
        }
    }
    return true;
}

BinaryTree underlying_tree(const TreeLikeTableau& t) {
    PointGrid g(t);
    // left child of a point: nearest point below in its column; right child:
    // nearest point to its right in its row.
    std::map<Cell, Cell> lchild, rchild;
    for (Cell p : t.points()) {
        for (int r = p.row + 1; r <= t.shape().row_count() && t.shape().contains({r, p.col}); ++r)
            if (g.at(r, p.col)) {
                lchild[p] = {r, p.col};
                break;
            }
        for (int c = p.col + 1; c <= t.shape().row_length(p.row); ++c)
            if (g.at(p.row, c)) {
                rchild[p] = {p.row, c};
                break;
            }
    }
    BinaryTree tree;
    // Preorder construction from the root point.
    struct Builder {
        const std::map<Cell, Cell>& l;
        const std::map<Cell, Cell>& r;
        BinaryTree& out;
        int build(Cell p) {
            int idx = out.size();
            out.nodes.push_back({});
            auto li = l.find(p);
            if (li != l.end()) out.nodes[idx].left = build(li->second);
            auto ri = r.find(p);
            if (ri != r.end()) out.nodes[idx].right = build(ri->second);
            return idx;
        }
    } builder{lchild, rchild, tree};
    builder.build({1, 1});
    require(tree.size() == t.size(), Err::InvalidObject, "tree size mismatch");
    return tree;
}

TreeLikeTableau rectangular_baxter(const BinaryTree& tree) {
    require(!tree.empty(), Err::PreconditionViolated, "tree must be nonempty");
    if (tree.size() == 1) return size_one_tlt();

    BinaryTree bl = subtree(tree, tree.nodes[0].left);
    BinaryTree br = subtree(tree, tree.nodes[0].right);

    if (bl.empty()) {
        TreeLikeTableau tr = rectangular_baxter(br);
        int kr = tr.shape().row_count(), lr = tr.shape().width();
        std::vector<Cell> pts{{1, 1}};
        for (Cell p : tr.points()) pts.push_back({p.row, p.col + 1});
        return validate_tlt(FerrersShape(std::vector<int>(kr, lr + 1)), pts);
    }
    if (br.empty()) {
        TreeLikeTableau tl = rectangular_baxter(bl);
        int kl = tl.shape().row_count(), ll = tl.shape().width();
        std::vector<Cell> pts{{1, 1}};
        for (Cell p : tl.points()) pts.push_back({p.row + 1, p.col});
        return validate_tlt(FerrersShape(std::vector<int>(kl + 1, ll)), pts);
    }
    TreeLikeTableau tl = rectangular_baxter(bl);
    TreeLikeTableau tr = rectangular_baxter(br);
    int kl = tl.shape().row_count(), ll = tl.shape().width();
    int kr = tr.shape().row_count(), lr = tr.shape().width();
    std::vector<Cell> pts{{1, 1}};
    for (Cell p : tr.points()) pts.push_back({p.row, p.col + ll});
    for (Cell p : tl.points()) pts.push_back({p.row + kr, p.col});
    return validate_tlt(FerrersShape(std::vector<int>(kl + kr, ll + lr)), pts);
}

Decomposition decompose(const TreeLikeTableau& t) {
    require(is_baxter(t), Err::NotBaxter, "decompose needs a Baxter tableau");
    Decomposition d;
    if (t.size() == 1) return d;

    // Points of the left/right subtree, via the parent relations.
    PointGrid g(t);
    std::vector<Cell> lpts, rpts;
    {
        // Recompute child links as in underlying_tree and walk both subtrees.
        std::map<Cell, std::vector<Cell>> children;
        for (Cell p : t.points()) {
            for (int r = p.row + 1; r <= t.shape().row_count() && t.shape().contains({r, p.col}); ++r)
                if (g.at(r, p.col)) {
                    children[p].push_back({r, p.col});
                    break;
                }
            for (int c = p.col + 1; c <= t.shape().row_length(p.row); ++c)
                if (g.at(p.row, c)) {
                    children[p].push_back({p.row, c});
                    break;
                }
        }
        auto collect = [&](Cell start, std::vector<Cell>& out) {
            std::vector<Cell> stack{start};
            while (!stack.empty()) {
                Cell c = stack.back();
                stack.pop_back();
                out.push_back(c);
                for (Cell ch : children[c]) stack.push_back(ch);
            }
        };
        // Left child of the root sits below it in column 1; right child sits
        // right of it in row 1.
        for (int r = 2; r <= t.shape().row_count(); ++r)
            if (g.at(r, 1)) {
                collect({r, 1}, lpts);
                break;
            }
        for (int c = 2; c <= t.shape().row_length(1); ++c)
            if (g.at(1, c)) {
                collect({1, c}, rpts);
                break;
            }
    }

    int k = t.shape().row_count();
    int wl = 0;     // columns left of the vertical line
    int ht = 0;     // rows above the horizontal line
    if (!rpts.empty()) {
        for (Cell p : rpts) ht = std::max(ht, p.row);
    } else {
        ht = 1;
    }
    if (!lpts.empty()) {
        for (Cell p : lpts) wl = std::max(wl, p.col);
    } else {
        wl = 1;
    }
    // The split lines are unique: no point-free rows or columns exist.
    for (Cell p : lpts) {
        require(p.row > ht && p.col <= wl, Err::InvalidObject, "left block leaked");
    }
    for (Cell p : rpts) {
        require(p.row <= ht && p.col > wl, Err::InvalidObject, "right block leaked");
    }
    // NW block: rows 1..ht x cols 1..wl is a full rectangle holding only the root.
    for (int r = 1; r <= ht; ++r)
        for (int c = 1; c <= wl; ++c) {
            require(t.shape().contains({r, c}), Err::InvalidObject, "NW block not rectangular");
            require((r == 1 && c == 1) == g.at(r, c), Err::InvalidObject,
                    "NW block must hold only the root");
        }

    if (!lpts.empty()) {
        std::vector<int> rows;
        for (int r = ht + 1; r <= k; ++r) rows.push_back(std::min(t.shape().row_length(r), wl));
        std::vector<Cell> pts;
        for (Cell p : lpts) pts.push_back({p.row - ht, p.col});
        d.left = validate_tlt(FerrersShape(rows), pts);
    }
    if (!rpts.empty()) {
        std::vector<int> rows;
        for (int r = 1; r <= ht; ++r) rows.push_back(t.shape().row_length(r) - wl);
        std::vector<Cell> pts;
        for (Cell p : rpts) pts.push_back({p.row, p.col - wl});
        d.right = validate_tlt(FerrersShape(rows), pts);
    }
    // SE block: only crossings (checked), stored as row lengths.
    for (int r = ht + 1; r <= k; ++r) {
        int extra = t.shape().row_length(r) - wl;
        if (extra > 0) d.crossing_block.push_back(extra);
    }
    auto cross = crossings(t);
    std::set<Cell> cross_set(cross.begin(), cross.end());
    for (int r = ht + 1; r <= k; ++r)
        for (int c = wl + 1; c <= t.shape().row_length(r); ++c)
            require(cross_set.count({r, c}) > 0, Err::InvalidObject,
                    "SE block must contain only crossings");
    return d;
}

TreeLikeTableau reassemble(const Decomposition& d) {
    if (!d.left && !d.right) return size_one_tlt();
    if (!d.right) {
        const TreeLikeTableau& tl = *d.left;
        std::vector<int> rows{tl.shape().width()};
        for (int len : tl.shape().rows()) rows.push_back(len);
        std::vector<Cell> pts{{1, 1}};
        for (Cell p : tl.points()) pts.push_back({p.row + 1, p.col});
        return validate_tlt(FerrersShape(rows), pts);
    }
    if (!d.left) {
        const TreeLikeTableau& tr = *d.right;
        std::vector<int> rows;
        for (int len : tr.shape().rows()) rows.push_back(len + 1);
        std::vector<Cell> pts{{1, 1}};
        for (Cell p : tr.points()) pts.push_back({p.row, p.col + 1});
        return validate_tlt(FerrersShape(rows), pts);
    }
    const TreeLikeTableau& tl = *d.left;
    const TreeLikeTableau& tr = *d.right;
    int wl = tl.shape().width(), ht = tr.shape().row_count();
    std::vector<int> rows;
    for (int len : tr.shape().rows()) rows.push_back(len + wl);
    for (int i = 0; i < tl.shape().row_count(); ++i) {
        int se = i < static_cast<int>(d.crossing_block.size()) ? d.crossing_block[i] : 0;
        rows.push_back(se > 0 ? wl + se : tl.shape().rows()[i]);
    }
    std::vector<Cell> pts{{1, 1}};
    for (Cell p : tr.points()) pts.push_back({p.row, p.col + wl});
    for (Cell p : tl.points()) pts.push_back({p.row + ht, p.col});
    return validate_tlt(FerrersShape(rows), pts);
}

bool is_complete(const TreeLikeTableau& t) {
    require(is_baxter(t), Err::NotBaxter, "is_complete needs a Baxter tableau");
    return is_complete_tree(underlying_tree(t));
}

bool is_almost_complete(const TreeLikeTableau& t) {
    require(is_baxter(t), Err::NotBaxter, "is_almost_complete needs a Baxter tableau");
    BinaryTree b = underlying_tree(t);
    b = attach_left_spine_leaf(b);
    if (t.size() % 2 == 1) b = attach_right_spine_leaf(b);
    return is_complete_tree(b);
}

namespace {

// Border-strip candidates appended NE-wards from `start`, used as ribbon
// paddings by expand_tlt. `cells` holds the cells of the base diagram.
void collect_strips(const std::set<Cell>& cells, Cell start, std::vector<Cell>& strip,
                    std::vector<std::vector<Cell>>& out, int cap) {
    out.push_back(strip);
    if (static_cast<int>(strip.size()) >= cap) return;
    Cell cur = strip.empty() ? start : strip.back();
    if (!strip.empty()) {
        // next walk cell: right if free, and up is also allowed when right
        // is outside both the diagram and the strip
        Cell right{cur.row, cur.col + 1};
        Cell up{cur.row - 1, cur.col};
        if (!cells.count(right)) {
            strip.push_back(right);
            collect_strips(cells, start, strip, out, cap);
            strip.pop_back();
            if (up.row >= 1 && !cells.count(up)) {
                strip.push_back(up);
                collect_strips(cells, start, strip, out, cap);
                strip.pop_back();
            }
        }
    } else {
        if (!cells.count(start)) {
            strip.push_back(start);
            collect_strips(cells, start, strip, out, cap);
            strip.pop_back();
        }
    }
}

// Tries to build a tableau from explicit cells and points; nullopt when the
// cell set is not a left-justified Ferrers diagram or the tableau is invalid.
std::optional<TreeLikeTableau> try_build(const std::set<Cell>& cells,
                                         const std::vector<Cell>& points) {
    int max_row = 0;
    for (Cell c : cells) max_row = std::max(max_row, c.row);
    std::vector<int> rows(max_row, 0);
    for (Cell c : cells) rows[c.row - 1] += 1;
    for (int r = 1; r <= max_row; ++r)
        for (int c = 1; c <= rows[r - 1]; ++c)
            if (!cells.count({r, c})) return std::nullopt;
    for (int r = 1; r < max_row; ++r)
        if (rows[r - 1] < rows[r]) return std::nullopt;
    for (int len : rows)
        if (len == 0) return std::nullopt;
    try {
        return validate_tlt(FerrersShape(rows), points);
    } catch (const BaxterError&) {
        return std::nullopt;
    }
}

} // namespace

std::vector<TreeLikeTableau> expand_tlt(const TreeLikeTableau& t) {
    std::set<TreeLikeTableau> out;
    const FerrersShape& sh = t.shape();
    int k = sh.row_count(), w = sh.width();
    int cap = sh.semi_perimeter() + 1;

    auto consider = [&](const std::set<Cell>& cells, const std::vector<Cell>& points,
                        Cell inserted) {
        auto cand = try_build(cells, points);
        if (!cand) return;
        if (cand->size() != t.size() + 1) return;
        try {
            auto [back, step] = remove_point(*cand);
            if (back == t && step.special == inserted) out.insert(*cand);
        } catch (const BaxterError&) {
        }
    };

    // Column insertion at column position c with the new point in row rr.
    for (int c = 1; c <= w + 1; ++c) {
        for (int rr = 1; rr <= k; ++rr) {
            if (sh.row_length(rr) < c - 1) break; // deeper rows are even shorter
            bool ok = true;
            for (int below = rr + 1; below <= k && ok; ++below)
                if (sh.row_length(below) >= c) ok = false;
            if (!ok) continue;
            std::set<Cell> cells;
            std::vector<Cell> points;
            for (int r = 1; r <= k; ++r)
                for (int j = 1; j <= sh.row_length(r); ++j)
                    cells.insert({r, j >= c ? j + 1 : j});
            for (Cell p : t.points()) points.push_back({p.row, p.col >= c ? p.col + 1 : p.col});
            for (int r = 1; r <= rr; ++r) cells.insert({r, c});
            Cell np{rr, c};
            points.push_back(np);
            std::vector<std::vector<Cell>> strips;
            std::vector<Cell> strip;
            collect_strips(cells, {rr, c + 1}, strip, strips, cap);
            for (const auto& extra : strips) {
                std::set<Cell> cells2 = cells;
                for (Cell e : extra) cells2.insert(e);
                consider(cells2, points, np);
            }
        }
    }
    // Row insertion at row position rr with the new point in column c.
    for (int rr = 1; rr <= k + 1; ++rr) {
        int upper = rr == 1 ? w + 1 : sh.row_length(rr - 1);
        int lower = rr <= k ? sh.row_length(rr) : 1;
        for (int c = lower; c <= upper; ++c) {
            std::set<Cell> cells;
            std::vector<Cell> points;
            for (int r = 1; r <= k; ++r)
                for (int j = 1; j <= sh.row_length(r); ++j) cells.insert({r >= rr ? r + 1 : r, j});
            for (Cell p : t.points()) points.push_back({p.row >= rr ? p.row + 1 : p.row, p.col});
            for (int j = 1; j <= c; ++j) cells.insert({rr, j});
            Cell np{rr, c};
            points.push_back(np);
            std::vector<std::vector<Cell>> strips;
            std::vector<Cell> strip;
            collect_strips(cells, {rr, c + 1}, strip, strips, cap);
            for (const auto& extra : strips) {
                std::set<Cell> cells2 = cells;
                for (Cell e : extra) cells2.insert(e);
                consider(cells2, points, np);
            }
        }
    }
    return std::vector<TreeLikeTableau>(out.begin(), out.end());
}

std::vector<TreeLikeTableau> enumerate_tlts(int n) {
    require(n >= 1, Err::PreconditionViolated, "size must be at least 1");
    std::vector<TreeLikeTableau> cur{size_one_tlt()};
    for (int m = 2; m <= n; ++m) {
        std::vector<TreeLikeTableau> next;
        for (const TreeLikeTableau& t : cur) {
            auto kids = expand_tlt(t);
            next.insert(next.end(), kids.begin(), kids.end());
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

std::vector<TreeLikeTableau> enumerate_baxter_tlts(int n) {
    require(n >= 1, Err::PreconditionViolated, "size must be at least 1");
    std::vector<TreeLikeTableau> out;
    for (const BinaryTree& tree : enumerate_binary_trees(n)) {
        TreeLikeTableau rect = rectangular_baxter(tree);
        int k = rect.shape().row_count();
        // Thinnest Ferrers shape containing the tree's point placement.
        std::vector<int> thin(k, 0);
        for (Cell p : rect.points()) thin[p.row - 1] = std::max(thin[p.row - 1], p.col);
        for (int r = k - 1; r >= 1; --r) thin[r - 1] = std::max(thin[r - 1], thin[r]);
        // Re-embed the points in every shape with k rows that contains them.
        for (const std::string& bottom : step_words(n - 1, k - 1)) {
            FerrersShape shape = shape_from_border("E" + bottom + "N");
            bool fits = true;
            for (int r = 1; r <= k && fits; ++r)
                if (shape.row_length(r) < thin[r - 1]) fits = false;
            if (fits) out.push_back(validate_tlt(shape, rect.points()));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace baxter
