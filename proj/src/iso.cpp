#include "baxter/iso.hpp"

#include <algorithm>

namespace baxter {

IsoLabeling iso_labeling(const TreeLikeTableau& t) {
    const FerrersShape& sh = t.shape();
    int k = sh.row_count(), w = sh.width();
    RemovalTrace trace = removal_trace(t);

    std::vector<std::vector<int>> lab(k + 1, std::vector<int>(w + 1, 0));
    std::vector<std::vector<char>> pointed(k + 1, std::vector<char>(w + 1, 0));
    for (auto& [cell, label] : trace.point_labels) {
        lab[cell.row][cell.col] = label;
        pointed[cell.row][cell.col] = 1;
    }
    // prefix flags: point above in the column / left in the row
    std::vector<std::vector<char>> above(k + 2, std::vector<char>(w + 2, 0));
    std::vector<std::vector<char>> left(k + 2, std::vector<char>(w + 2, 0));
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= sh.row_length(r); ++c) {
            above[r][c] = (r > 1) && (above[r - 1][c] || pointed[r - 1][c]);
            left[r][c] = (c > 1) && (left[r][c - 1] || pointed[r][c - 1]);
        }

    for (int r = 2; r <= k; ++r)
        if (!pointed[r][1]) lab[r][1] = lab[r - 1][1];
    for (int c = 2; c <= sh.row_length(1); ++c)
        if (!pointed[1][c]) lab[1][c] = lab[1][c - 1];
    for (int r = 2; r <= k; ++r) {
        for (int c = 2; c <= sh.row_length(r); ++c) {
            if (pointed[r][c]) continue;
            int x = lab[r - 1][c - 1], y = lab[r - 1][c], z = lab[r][c - 1];
            if (above[r][c] && left[r][c])
                lab[r][c] = x;  // crossing
            else if (above[r][c])
                lab[r][c] = y;
            else if (left[r][c])
                lab[r][c] = z;
            else {
                require(x == y && y == z, Err::InvalidObject, "iso propagation mismatch");
                lab[r][c] = x;
            }
        }
    }
    IsoLabeling iso;
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= sh.row_length(r); ++c) iso.labels[{r, c}] = lab[r][c];
    return iso;
}

Permutation phi(const TreeLikeTableau& t) {
    IsoLabeling iso = iso_labeling(t);
    std::vector<int> vals;
    for (Cell c : t.shape().border_cells()) vals.push_back(iso.labels.at(c));
    return Permutation(vals);
}

TreeLikeTableau phi_inverse(const Permutation& p) {
    int n = p.size();
    if (n == 1) return size_one_tlt();

    std::vector<int> shorter;
    for (int v : p.values())
        if (v != n) shorter.push_back(v);
    TreeLikeTableau prev = phi_inverse(Permutation(shorter));

    int target = p.position_of(n);
    std::vector<TreeLikeTableau> hits;
    for (const TreeLikeTableau& cand : expand_tlt(prev)) {
        Cell s = special_point(cand);
        auto border = cand.shape().border_cells();
        auto it = std::find(border.begin(), border.end(), s);
        require(it != border.end(), Err::BijectionViolation, "special point off the border");
        if (static_cast<int>(it - border.begin()) + 1 == target) hits.push_back(cand);
    }
    require(hits.size() == 1, Err::BijectionViolation,
            "expected exactly one expansion at border position " + std::to_string(target) +
                ", found " + std::to_string(hits.size()));
    return hits.front();
}

std::vector<CrossingMatch> crossing_pattern_correspondence(const TreeLikeTableau& t) {
    RemovalTrace trace = removal_trace(t);
    IsoLabeling iso = iso_labeling(t);
    Permutation sigma = phi(t);

    std::vector<CrossingMatch> out;
    for (Cell c : crossings(t)) {
        CrossingMatch m;
        m.crossing = c;
        m.iso_value = iso.labels.at(c);
        m.ins_value = trace.ins_labels.at(c);
        int p_two_plus = sigma.position_of(m.ins_value);
        int p_one = sigma.position_of(m.iso_value);
        int p_two = sigma.position_of(m.ins_value - 1);
        require(p_two_plus < p_one && p_one < p_two, Err::InvalidObject,
                "crossing does not map to a 2+-1-2 occurrence");
        m.occurrence = Occurrence{{p_two_plus, p_one, p_two}};
        out.push_back(m);
    }
    std::sort(out.begin(), out.end(), [](const CrossingMatch& a, const CrossingMatch& b) {
        return a.occurrence.indices < b.occurrence.indices;
    });
    return out;
}

} // namespace baxter
