#pragma once

#include <map>

#include "baxter/patterns.hpp"
#include "baxter/tlt.hpp"

namespace baxter {

// Extension of the point labels to every cell: first column/row empties
// inherit from the nearest point above/left, interior empties propagate from
// their NW, N or W neighbor depending on which of the column/row holds a
// point.
struct IsoLabeling {
    std::map<Cell, int> labels;
};

IsoLabeling iso_labeling(const TreeLikeTableau& t);

// Reads the iso labels along the SE border, bottom of column 1 to the end of
// row 1; a bijection onto permutations of the same size.
Permutation phi(const TreeLikeTableau& t);

// Inverse of phi, by recursive inverse point removal; the insertion point is
// pinned by the border position of the largest value.
TreeLikeTableau phi_inverse(const Permutation& p);

struct CrossingMatch {
    Cell crossing;
    Occurrence occurrence;  // of 2+-1-2 in phi(t)
    int iso_value;          // value the "1" is mapped to
    int ins_value;          // value the "2+" is mapped to
};

// Pairs each crossing with its occurrence of the bivincular pattern 2+-1-2.
std::vector<CrossingMatch> crossing_pattern_correspondence(const TreeLikeTableau& t);

} // namespace baxter
