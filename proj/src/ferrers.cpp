#include "baxter/ferrers.hpp"

namespace baxter {

FerrersShape::FerrersShape(std::vector<int> row_lengths) : rows_(std::move(row_lengths)) {
    require(!rows_.empty(), Err::InvalidObject, "Ferrers shape needs at least one row");
    for (size_t i = 0; i < rows_.size(); ++i) {
        require(rows_[i] >= 1, Err::InvalidObject, "Ferrers row lengths must be positive");
        if (i > 0)
            require(rows_[i - 1] >= rows_[i], Err::InvalidObject,
                    "Ferrers row lengths must be weakly decreasing");
    }
}

std::string FerrersShape::border_word() const {
    std::string w;
    int k = row_count();
    for (int i = k; i >= 1; --i) {
        int below = (i == k) ? 0 : rows_[i];
        w.append(static_cast<size_t>(rows_[i - 1] - below), 'E');
        w.push_back('N');
    }
    return w;
}

std::vector<Cell> FerrersShape::border_cells() const {
    std::vector<Cell> cells;
    Cell c{row_count(), 1};
    cells.push_back(c);
    while (!(c.row == 1 && c.col == width())) {
        if (contains({c.row, c.col + 1}))
            c.col += 1;
        else
            c.row -= 1;
        cells.push_back(c);
    }
    return cells;
}

FerrersShape shape_from_border(const std::string& word) {
    require(!word.empty() && word.front() == 'E' && word.back() == 'N', Err::InvalidObject,
            "border word must start with E and end with N");
    std::vector<int> bottom_up;
    int x = 0;
    for (char s : word) {
        if (s == 'E') {
            ++x;
        } else if (s == 'N') {
            require(x >= 1, Err::InvalidObject, "border word row of length zero");
            bottom_up.push_back(x);
        } else {
            fail(Err::InvalidObject, "border word may only contain E and N");
        }
    }
    return FerrersShape(std::vector<int>(bottom_up.rbegin(), bottom_up.rend()));
}

} // namespace baxter
