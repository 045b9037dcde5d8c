#pragma once

#include <compare>
#include <string>
#include <vector>

#include "baxter/errors.hpp"

namespace baxter {

// 1-indexed cell of a Ferrers diagram in English notation: row counts from
// the top, column from the left.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Ferrers diagram as weakly decreasing positive row lengths, top to bottom.
class FerrersShape {
public:
    FerrersShape() = default;
    explicit FerrersShape(std::vector<int> row_lengths);

    int row_count() const { return static_cast<int>(rows_.size()); }
    int width() const { return rows_.empty() ? 0 : rows_.front(); }
    int row_length(int row) const { return rows_[row - 1]; }
    const std::vector<int>& rows() const { return rows_; }

    bool contains(Cell c) const {
        return c.row >= 1 && c.row <= row_count() && c.col >= 1 && c.col <= rows_[c.row - 1];
    }
    int semi_perimeter() const { return row_count() + width(); }

    // SE border as a step word over {E,N}, read from the SW corner to the NE
    // corner.
    std::string border_word() const;

    // Cells met when walking the SE border from the bottom cell of column 1
    // to the last cell of row 1 (step right when the right cell exists, up
    // otherwise). The walk has row_count()+width()-1 cells.
    std::vector<Cell> border_cells() const;

    auto operator<=>(const FerrersShape&) const = default;

private:
    std::vector<int> rows_;
};

// Rebuilds the shape whose SE border word is exactly `word`; the word must
// start with E and end with N.
FerrersShape shape_from_border(const std::string& word);

} // namespace baxter
