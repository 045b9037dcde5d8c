#include "baxter/floorplan.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <string>

#include "baxter/iso.hpp"

namespace baxter {

namespace {

// Grid of tile indices covering a height x width rectangle; -1 = uncovered.
struct Cover {
    int height, width;
    std::vector<int> owner;
    Cover(int h, int w) : height(h), width(w), owner(static_cast<size_t>(h) * w, -1) {}
    int& at(int x, int y) { return owner[static_cast<size_t>(y) * width + x]; }
    int at(int x, int y) const { return owner[static_cast<size_t>(y) * width + x]; }
};

Cover build_cover(int height, int width, const std::vector<Tile>& tiles) {
    require(height >= 1 && width >= 1, Err::InvalidObject, "degenerate bounding rectangle");
    Cover cover(height, width);
    for (size_t i = 0; i < tiles.size(); ++i) {
        const Tile& t = tiles[i];
        require(t.w >= 1 && t.h >= 1, Err::InvalidObject, "tile with nonpositive side");
        require(t.x >= 0 && t.y >= 0 && t.x + t.w <= width && t.y + t.h <= height,
                Err::InvalidObject, "tile outside the bounding rectangle");
        for (int y = t.y; y < t.y + t.h; ++y)
            for (int x = t.x; x < t.x + t.w; ++x) {
                require(cover.at(x, y) < 0, Err::Overlap,
                        "cell (" + std::to_string(x) + "," + std::to_string(y) + ")");
                cover.at(x, y) = static_cast<int>(i);
            }
    }
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            require(cover.at(x, y) >= 0, Err::Gap,
                    "cell (" + std::to_string(x) + "," + std::to_string(y) + ")");
    return cover;
}

std::vector<Tile> sorted_tiles(std::vector<Tile> tiles) {
    std::sort(tiles.begin(), tiles.end(), [](const Tile& a, const Tile& b) {
        return std::tie(a.y, a.x, a.w, a.h) < std::tie(b.y, b.x, b.w, b.h);
    });
    return tiles;
}

// Interior vertices where four distinct tiles meet are cross junctions; a
// diagonal corner-to-corner contact without a crossing would be a flush
// junction (impossible in an exact cover, kept as a defensive check).
void check_junctions(const Cover& cover) {
    for (int y = 1; y < cover.height; ++y) {
        for (int x = 1; x < cover.width; ++x) {
            int nw = cover.at(x - 1, y - 1), ne = cover.at(x, y - 1);
            int sw = cover.at(x - 1, y), se = cover.at(x, y);
            std::set<int> distinct{nw, ne, sw, se};
            if (distinct.size() == 4)
                fail(Err::CrossJunction,
                     "four tiles meet at (" + std::to_string(x) + "," + std::to_string(y) + ")");
            if ((nw == se && nw != ne && nw != sw) || (ne == sw && ne != nw && ne != se))
                fail(Err::FlushJunction,
                     "diagonal contact at (" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    }
}

} // namespace

bool forbidden_pair(const Tile& t1, const Tile& t2) {
    // Cartesian condition "x1 <= x2 and y1 >= y2" on t1's bottom-right vs
    // t2's top-left corner; with y measured downward both inequalities point
    // the same way.
    return t1.x + t1.w <= t2.x && t1.y + t1.h <= t2.y;
}

PackedFloorplan validate_pfp(int height, int width, const std::vector<Tile>& tiles) {
    build_cover(height, width, tiles);
    require(static_cast<int>(tiles.size()) == height + width - 1, Err::WrongTileCount,
            "need height+width-1 tiles, got " + std::to_string(tiles.size()));
    for (size_t i = 0; i < tiles.size(); ++i)
        for (size_t j = 0; j < tiles.size(); ++j)
            if (i != j && forbidden_pair(tiles[i], tiles[j]))
                fail(Err::ForbiddenPattern, "tiles " + std::to_string(i) + " and " +
                                                std::to_string(j) + " form the pattern");
    PackedFloorplan f;
    f.height = height;
    f.width = width;
    f.tiles = sorted_tiles(tiles);
    return f;
}

Floorplan validate_floorplan(int height, int width, const std::vector<Tile>& tiles) {
    Cover cover = build_cover(height, width, tiles);
    check_junctions(cover);
    Floorplan f;
    f.height = height;
    f.width = width;
    f.tiles = sorted_tiles(tiles);
    return f;
}

namespace {

std::vector<Segment> segments_impl(int height, int width, const std::vector<Tile>& tiles) {
    Cover cover = build_cover(height, width, tiles);
    std::vector<Segment> out;
    // horizontal: unit edge (x..x+1) at line y is a boundary when the cells
    // above and below belong to different tiles (or it lies on the border)
    for (int y = 0; y <= height; ++y) {
        int run_start = -1;
        for (int x = 0; x <= width; ++x) {
            bool edge = x < width && (y == 0 || y == height ||
                                      cover.at(x, y - 1) != cover.at(x, y));
            if (edge && run_start < 0) run_start = x;
            if (!edge && run_start >= 0) {
                out.push_back({Segment::Orientation::Horizontal, y, run_start, x,
                               y != 0 && y != height});
                run_start = -1;
            }
        }
    }
    for (int x = 0; x <= width; ++x) {
        int run_start = -1;
        for (int y = 0; y <= height; ++y) {
            bool edge = y < height && (x == 0 || x == width ||
                                       cover.at(x - 1, y) != cover.at(x, y));
            if (edge && run_start < 0) run_start = y;
            if (!edge && run_start >= 0) {
                out.push_back({Segment::Orientation::Vertical, x, run_start, y,
                               x != 0 && x != width});
                run_start = -1;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Segment> segments(const Floorplan& f) {
    return segments_impl(f.height, f.width, f.tiles);
}
std::vector<Segment> segments(const PackedFloorplan& f) {
    return segments_impl(f.height, f.width, f.tiles);
}

PackedFloorplan phi_F(const TreeLikeTableau& t) {
    require(is_baxter(t), Err::NotBaxter, "phi_F needs a Baxter tableau");
    int k = t.shape().row_count(), w = t.shape().width();
    RemovalTrace trace = removal_trace(t);
    std::vector<Cell> cell_of_label(t.size() + 1);
    for (auto& [cell, label] : trace.point_labels) cell_of_label[label] = cell;

    Cover cover(k, w);
    std::vector<Tile> tiles;
    for (int label = t.size(); label >= 1; --label) {
        Cell c = cell_of_label[label];
        int x0 = c.col - 1, y0 = c.row - 1;
        require(cover.at(x0, y0) < 0, Err::NonRectangularTile, "corner cell already covered");
        int tw = 0;
        while (x0 + tw < w && cover.at(x0 + tw, y0) < 0) ++tw;
        int th = 0;
        while (y0 + th < k && cover.at(x0, y0 + th) < 0) ++th;
        // the east and south free runs must span a free rectangle
        for (int y = y0; y < y0 + th; ++y)
            for (int x = x0; x < x0 + tw; ++x)
                require(cover.at(x, y) < 0, Err::NonRectangularTile,
                        "tile for label " + std::to_string(label) + " is not rectangular");
        Tile tile{x0, y0, tw, th};
        for (int y = y0; y < y0 + th; ++y)
            for (int x = x0; x < x0 + tw; ++x) cover.at(x, y) = label;
        tiles.push_back(tile);
    }
    return validate_pfp(k, w, tiles);
}

std::map<Tile, int> tile_order(const PackedFloorplan& f) {
    std::map<Tile, int> labels;
    std::vector<char> labeled(f.tiles.size(), 0);
    Cover cover = build_cover(f.height, f.width, f.tiles);
    for (int label = f.size(); label >= 1; --label) {
        int best = -1;
        for (size_t i = 0; i < f.tiles.size(); ++i) {
            if (labeled[i]) continue;
            const Tile& t = f.tiles[i];
            bool clear = true;
            if (t.y + t.h < f.height)  // otherwise it rests on the boundary
                for (int x = t.x; x < t.x + t.w && clear; ++x)
                    if (!labeled[cover.at(x, t.y + t.h)]) clear = false;
            if (!clear) continue;
            if (best >= 0)
                require(t.x != f.tiles[best].x, Err::InvalidObject,
                        "ambiguous rightmost tile in tile-order");
            if (best < 0 || t.x > f.tiles[best].x) best = static_cast<int>(i);
        }
        require(best >= 0, Err::InvalidObject, "no eligible tile in tile-order");
        labeled[best] = 1;
        labels[f.tiles[best]] = label;
    }
    return labels;
}

TreeLikeTableau psi_F(const PackedFloorplan& f) {
    std::map<Tile, int> order = tile_order(f);
    int n = f.size();
    std::vector<Cell> corner_of_label(n + 1);
    for (auto& [tile, label] : order) corner_of_label[label] = {tile.y + 1, tile.x + 1};
    require(corner_of_label[1] == Cell{1, 1}, Err::InvalidObject,
            "tile labeled 1 must hold the top-left corner");

    // Insert point k of the tableau at the border position its corner has in
    // the partial tableau on the corners labeled 1..k. Rows and columns of
    // that partial tableau are the distinct corner rows and columns, so the
    // border position is rank arithmetic on the corners; the permutation
    // assembled from those positions determines the tableau.
    std::vector<int> word{1};
    for (int k = 2; k <= n; ++k) {
        std::set<int> rows_seen, cols_seen;
        for (int j = 1; j <= k; ++j) {
            rows_seen.insert(corner_of_label[j].row);
            cols_seen.insert(corner_of_label[j].col);
        }
        Cell c = corner_of_label[k];
        int own_row = static_cast<int>(
            std::distance(rows_seen.begin(), rows_seen.find(c.row))) + 1;
        int own_col = static_cast<int>(
            std::distance(cols_seen.begin(), cols_seen.find(c.col))) + 1;
        int pos = static_cast<int>(rows_seen.size()) - own_row + own_col;
        word.insert(word.begin() + (pos - 1), k);
    }
    return phi_inverse(Permutation(word));
}

bool is_alternating(const PackedFloorplan& f) {
    int n = f.size();
    if (f.width != (n + 2) / 2 || f.height != (n + 1) / 2) return false;
    Cover cover = build_cover(f.height, f.width, f.tiles);
    // staircase from the SW corner, alternating E and N starting with E;
    // every unit step must lie on a tile boundary
    int x = 0, y = f.height;
    for (int step = 0; step < f.width + f.height; ++step) {
        if (step % 2 == 0) {
            // east step along line y from x to x+1
            bool boundary = y == 0 || y == f.height || cover.at(x, y - 1) != cover.at(x, y);
            if (!boundary) return false;
            ++x;
        } else {
            // north step along line x from y to y-1
            bool boundary = x == 0 || x == f.width || cover.at(x - 1, y - 1) != cover.at(x, y - 1);
            if (!boundary) return false;
            --y;
        }
    }
    return x == f.width && y == 0;
}

namespace {

struct PatternHit {
    size_t i, j;
    long long dist2;
    std::array<int, 4> tiebreak;
};

std::vector<PatternHit> pattern_hits(const std::vector<Tile>& tiles) {
    std::vector<PatternHit> hits;
    for (size_t i = 0; i < tiles.size(); ++i)
        for (size_t j = 0; j < tiles.size(); ++j) {
            if (i == j || !forbidden_pair(tiles[i], tiles[j])) continue;
            long long dx = tiles[j].x - (tiles[i].x + tiles[i].w);
            long long dy = tiles[j].y - (tiles[i].y + tiles[i].h);
            hits.push_back({i, j, dx * dx + dy * dy,
                            {tiles[i].x + tiles[i].w, tiles[i].y + tiles[i].h, tiles[j].x,
                             tiles[j].y}});
        }
    return hits;
}

std::vector<Tile> transpose_tiles(const std::vector<Tile>& tiles) {
    std::vector<Tile> out;
    for (const Tile& t : tiles) out.push_back({t.y, t.x, t.h, t.w});
    return out;
}

// One sliding step in the orientation where the junction at t1's bottom-right
// corner has a through horizontal line (the tile below spans the corner).
// Returns false when the junction is of the reflected type.
bool slide_once(int height, int width, std::vector<Tile>& tiles, size_t i1, size_t i2) {
    Cover cover = build_cover(height, width, tiles);
    const Tile t1 = tiles[i1];
    const Tile t2 = tiles[i2];
    int qx = t1.x + t1.w, qy = t1.y + t1.h;
    int sw = cover.at(qx - 1, qy), se = cover.at(qx, qy), ne = cover.at(qx, qy - 1);
    if (sw != se) {
        require(ne == se, Err::NotAFloorplan, "cross junction at a pattern corner");
        return false;  // reflected case; caller transposes
    }
    int xc = t2.x;
    // Stack of tiles over the one right of t1's corner, following the cell
    // column just right of line xc while left sides weakly increase.
    std::vector<int> stack{ne};
    require(tiles[ne].x <= xc && tiles[ne].x + tiles[ne].w > xc, Err::NotAFloorplan,
            "stack base does not straddle the pattern corner");
    while (true) {
        int top_y = tiles[stack.back()].y;
        if (top_y == 0) break;
        int next = cover.at(xc, top_y - 1);
        if (tiles[next].x < tiles[stack.back()].x || tiles[next].x > xc) break;
        stack.push_back(next);
    }
    int xe = 0;
    for (int idx : stack) xe = std::max(xe, tiles[idx].x);
    // tiles of the stack whose left side lies on line xe form the segment E
    int y_top = height, y_bot = 0;
    for (int idx : stack)
        if (tiles[idx].x == xe) {
            y_top = std::min(y_top, tiles[idx].y);
            y_bot = std::max(y_bot, tiles[idx].y + tiles[idx].h);
        }
    int delta = xc + 1 - xe;
    require(delta >= 1, Err::NotAFloorplan, "segment already right of the corner");
    for (Tile& t : tiles) {
        bool left_on_e = t.x == xe && t.y >= y_top && t.y + t.h <= y_bot;
        bool right_on_e = t.x + t.w == xe && t.y >= y_top && t.y + t.h <= y_bot;
        if (left_on_e) {
            t.x += delta;
            t.w -= delta;
            require(t.w >= 1, Err::NotAFloorplan, "slide annihilates a tile");
        } else if (right_on_e) {
            t.w += delta;
        }
    }
    return true;
}

} // namespace

namespace {

// Renumbers the grid lines supporting a tile side to consecutive integers.
void compress(int& height, int& width, std::vector<Tile>& tiles) {
    std::set<int> xs{0, width}, ys{0, height};
    for (const Tile& t : tiles) {
        xs.insert(t.x);
        xs.insert(t.x + t.w);
        ys.insert(t.y);
        ys.insert(t.y + t.h);
    }
    std::map<int, int> xmap, ymap;
    int v = 0;
    for (int x : xs) xmap[x] = v++;
    v = 0;
    for (int y : ys) ymap[y] = v++;
    for (Tile& t : tiles) {
        int x2 = xmap[t.x + t.w], y2 = ymap[t.y + t.h];
        t.x = xmap[t.x];
        t.y = ymap[t.y];
        t.w = x2 - t.x;
        t.h = y2 - t.y;
    }
    width = static_cast<int>(xs.size()) - 1;
    height = static_cast<int>(ys.size()) - 1;
}

} // namespace

PackedFloorplan pack(const Floorplan& f, std::vector<int>* pattern_counts) {
    validate_floorplan(f.height, f.width, f.tiles);  // NotAFloorplan on bad input
    int height = f.height, width = f.width;
    std::vector<Tile> tiles = f.tiles;

    while (true) {
        auto hits = pattern_hits(tiles);
        if (pattern_counts) pattern_counts->push_back(static_cast<int>(hits.size()));
        if (hits.empty()) break;
        auto best = std::min_element(hits.begin(), hits.end(),
                                     [](const PatternHit& a, const PatternHit& b) {
                                         return std::tie(a.dist2, a.tiebreak) <
                                                std::tie(b.dist2, b.tiebreak);
                                     });
        // Slides live in real coordinates: the segment stops just past the
        // blocking corner, between grid lines. Doubling the grid first makes
        // that an integer position and keeps every tile side positive.
        height *= 2;
        width *= 2;
        for (Tile& t : tiles) {
            t.x *= 2;
            t.y *= 2;
            t.w *= 2;
            t.h *= 2;
        }
        if (!slide_once(height, width, tiles, best->i, best->j)) {
            // reflected junction: transpose, slide, transpose back
            std::vector<Tile> tr = transpose_tiles(tiles);
            bool ok = slide_once(width, height, tr, best->i, best->j);
            require(ok, Err::NotAFloorplan, "junction covered by neither sliding case");
            tiles = transpose_tiles(tr);
        }
        compress(height, width, tiles);
        validate_floorplan(height, width, tiles);
    }

    compress(height, width, tiles);
    return validate_pfp(height, width, sorted_tiles(tiles));
}

namespace {

void tilings(int height, int width, int max_tiles, Cover& cover, std::vector<Tile>& acc,
             const std::function<void(const std::vector<Tile>&)>& emit) {
    int fx = -1, fy = -1;
    for (int y = 0; y < height && fx < 0; ++y)
        for (int x = 0; x < width; ++x)
            if (cover.at(x, y) < 0) {
                fx = x;
                fy = y;
                break;
            }
    if (fx < 0) {
        emit(acc);
        return;
    }
    if (static_cast<int>(acc.size()) >= max_tiles) return;
    int max_w = 0;
    while (fx + max_w < width && cover.at(fx + max_w, fy) < 0) ++max_w;
    for (int w = 1; w <= max_w; ++w) {
        for (int h = 1; fy + h <= height; ++h) {
            bool free_row = true;
            for (int x = fx; x < fx + w && free_row; ++x)
                if (cover.at(x, fy + h - 1) >= 0) free_row = false;
            if (!free_row) break;
            Tile t{fx, fy, w, h};
            for (int y = fy; y < fy + h; ++y)
                for (int x = fx; x < fx + w; ++x) cover.at(x, y) = 1;
            acc.push_back(t);
            tilings(height, width, max_tiles, cover, acc, emit);
            acc.pop_back();
            for (int y = fy; y < fy + h; ++y)
                for (int x = fx; x < fx + w; ++x) cover.at(x, y) = -1;
        }
    }
}

} // namespace

namespace {

// Like tilings, but prunes any branch whose newest tile completes the
// forbidden pattern. Tiles are placed at raster-order corners, so the new
// tile can only play the SE role of a pattern.
void pfp_tilings(int height, int width, int max_tiles, Cover& cover, std::vector<Tile>& acc,
                 const std::function<void(const std::vector<Tile>&)>& emit) {
    int fx = -1, fy = -1;
    for (int y = 0; y < height && fx < 0; ++y)
        for (int x = 0; x < width; ++x)
            if (cover.at(x, y) < 0) {
                fx = x;
                fy = y;
                break;
            }
    if (fx < 0) {
        emit(acc);
        return;
    }
    if (static_cast<int>(acc.size()) >= max_tiles) return;
    int max_w = 0;
    while (fx + max_w < width && cover.at(fx + max_w, fy) < 0) ++max_w;
    bool blocked = false;
    for (const Tile& old : acc)
        if (old.x + old.w <= fx && old.y + old.h <= fy) blocked = true;
    if (blocked) return;  // any tile placed here forms the pattern
    for (int w = 1; w <= max_w; ++w) {
        for (int h = 1; fy + h <= height; ++h) {
            bool free_row = true;
            for (int x = fx; x < fx + w && free_row; ++x)
                if (cover.at(x, fy + h - 1) >= 0) free_row = false;
            if (!free_row) break;
            Tile t{fx, fy, w, h};
            for (int y = fy; y < fy + h; ++y)
                for (int x = fx; x < fx + w; ++x) cover.at(x, y) = 1;
            acc.push_back(t);
            pfp_tilings(height, width, max_tiles, cover, acc, emit);
            acc.pop_back();
            for (int y = fy; y < fy + h; ++y)
                for (int x = fx; x < fx + w; ++x) cover.at(x, y) = -1;
        }
    }
}

} // namespace

std::vector<PackedFloorplan> enumerate_pfps(int n) {
    require(n >= 1, Err::PreconditionViolated, "size must be at least 1");
    std::vector<PackedFloorplan> out;
    for (int k = 1; k <= n; ++k) {
        int l = n + 1 - k;
        Cover cover(k, l);
        std::vector<Tile> acc;
        pfp_tilings(k, l, n, cover, acc, [&](const std::vector<Tile>& tiles) {
            if (static_cast<int>(tiles.size()) != n) return;
            out.push_back(validate_pfp(k, l, tiles));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Floorplan> enumerate_floorplans(int height, int width, int max_tiles) {
    std::vector<Floorplan> out;
    Cover cover(height, width);
    std::vector<Tile> acc;
    tilings(height, width, max_tiles, cover, acc, [&](const std::vector<Tile>& tiles) {
        try {
            out.push_back(validate_floorplan(height, width, tiles));
        } catch (const BaxterError&) {
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace baxter
