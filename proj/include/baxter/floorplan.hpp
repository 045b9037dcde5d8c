#pragma once

#include <map>
#include <vector>

#include "baxter/tlt.hpp"

namespace baxter {

// Axis-aligned tile in the top-left frame: x counts columns from the left,
// y rows from the top; (x,y) is the top-left corner.
struct Tile {
    int x = 0, y = 0;
    int w = 1, h = 1;
    auto operator<=>(const Tile&) const = default;
};

// Partition of a height x width rectangle into height+width-1 tiles, no pair
// of which has one tile's bottom-right corner weakly above-left of another's
// top-left corner.
struct PackedFloorplan {
    int height = 0, width = 0;
    std::vector<Tile> tiles;  // sorted by (y, x)

    int size() const { return static_cast<int>(tiles.size()); }
    auto operator<=>(const PackedFloorplan&) const = default;
};

// Rectangle partition whose internal segments only meet in T-junctions; the
// packed-floorplan pattern is allowed here.
struct Floorplan {
    int height = 0, width = 0;
    std::vector<Tile> tiles;  // sorted by (y, x)

    int size() const { return static_cast<int>(tiles.size()); }
    auto operator<=>(const Floorplan&) const = default;
};

struct Segment {
    enum class Orientation { Horizontal, Vertical };
    Orientation orientation = Orientation::Horizontal;
    int line = 0;   // y for horizontal, x for vertical (top-left frame)
    int from = 0;   // inclusive start along the segment
    int to = 0;     // exclusive end
    bool internal = false;
    auto operator<=>(const Segment&) const = default;
};

PackedFloorplan validate_pfp(int height, int width, const std::vector<Tile>& tiles);
Floorplan validate_floorplan(int height, int width, const std::vector<Tile>& tiles);

// True when the two tiles form the forbidden packed-floorplan pattern with
// t1 northwest of t2.
bool forbidden_pair(const Tile& t1, const Tile& t2);

// All maximal segments, boundary sides included; k+l+2 of them for a packed
// floorplan of size (k,l).
std::vector<Segment> segments(const Floorplan& f);
std::vector<Segment> segments(const PackedFloorplan& f);

// Tile placement guided by point labels: for labels n down to 1 the tile's
// top-left corner is the labeled cell and it grows east, then south, as far
// as the free cells allow.
PackedFloorplan phi_F(const TreeLikeTableau& t);

// Labels n down to 1; each step labels the tile with the rightmost top-left
// corner among those whose bottom edge touches only labeled tiles or the
// boundary.
std::map<Tile, int> tile_order(const PackedFloorplan& f);

// Rebuilds the tableau whose points sit at the tile corners, inserting a
// ribbon between consecutively labeled points when the later one lies
// strictly to the left.
TreeLikeTableau psi_F(const PackedFloorplan& f);

// True when the unit staircase path from the SW corner (starting east) lies
// on tile boundaries; requires the almost-square bounding box.
bool is_alternating(const PackedFloorplan& f);

// Canonical representative of the floorplan's sliding class: repeatedly
// slides the segment blocking the closest forbidden pair, then compresses
// coordinates. `pattern_counts`, when given, receives the number of
// forbidden pairs before each iteration and after the last one.
PackedFloorplan pack(const Floorplan& f, std::vector<int>* pattern_counts = nullptr);

// All packed floorplans of size n by direct recursive tiling.
std::vector<PackedFloorplan> enumerate_pfps(int n);

// All T-junction floorplans with the given tile count on an exact
// height x width grid (brute force; desk scale).
std::vector<Floorplan> enumerate_floorplans(int height, int width, int max_tiles);

} // namespace baxter
