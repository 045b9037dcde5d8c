// Independent oracles used by the tests only. These re-derive quantities the
// library computes along a different route, so the two can be compared.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "baxter/permutation.hpp"
#include "baxter/tlt.hpp"

namespace baxter::oracles {

// Point-order labeling via the dead-cell procedure: label n..1, each step
// picking the rightmost point with no live cell below it, then killing its
// ribbon (live empty cells NE along the border up to a point) and its empty
// row or column. Independent of remove_point's renormalization.
inline std::map<Cell, int> point_order_labels(const TreeLikeTableau& t) {
    const FerrersShape& sh = t.shape();
    std::set<Cell> alive;
    for (int r = 1; r <= sh.row_count(); ++r)
        for (int c = 1; c <= sh.row_length(r); ++c) alive.insert({r, c});
    std::set<Cell> unlabeled(t.points().begin(), t.points().end());

    auto next_alive_right = [&](Cell c) -> Cell {
        for (int j = c.col + 1; j <= sh.row_length(c.row); ++j)
            if (alive.count({c.row, j})) return {c.row, j};
        return {0, 0};
    };
    auto next_alive_up = [&](Cell c) -> Cell {
        for (int r = c.row - 1; r >= 1; --r)
            if (alive.count({r, c.col})) return {r, c.col};
        return {0, 0};
    };

    std::map<Cell, int> labels;
    for (int label = t.size(); label >= 1; --label) {
        Cell pick{0, 0};
        for (Cell p : unlabeled) {
            bool below = false;
            for (int r = p.row + 1; r <= sh.row_count() && sh.contains({r, p.col}); ++r)
                below = below || alive.count({r, p.col});
            if (!below && p.col > pick.col) pick = p;
        }
        labels[pick] = label;
        unlabeled.erase(pick);
        // kill the ribbon right of the pick
        Cell cur = next_alive_right(pick);
        while (cur.row != 0 && !t.is_pointed(cur)) {
            alive.erase(cur);
            Cell right = next_alive_right(cur);
            cur = right.row != 0 ? right : next_alive_up(cur);
        }
        // kill the pick and its empty row or column
        bool above = false;
        for (int r = 1; r < pick.row && !above; ++r) above = t.is_pointed({r, pick.col});
        if (above) {
            for (int j = 1; j < pick.col; ++j) alive.erase({pick.row, j});
        } else {
            for (int r = 1; r < pick.row; ++r) alive.erase({r, pick.col});
        }
        alive.erase(pick);
    }
    return labels;
}

// Occurrences of a classical pattern by scanning every index subset.
inline long long naive_classical_count(const Permutation& host, const Permutation& base) {
    int n = host.size(), m = base.size();
    if (m > n) return 0;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i + 1;
    long long count = 0;
    while (true) {
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
            for (int b = a + 1; b < m && ok; ++b)
                if ((base(a + 1) < base(b + 1)) != (host(idx[a]) < host(idx[b]))) ok = false;
        if (ok) ++count;
        int i = m - 1;
        while (i >= 0 && idx[i] == n - m + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return count;
}

} // namespace baxter::oracles
