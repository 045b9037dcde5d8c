#include "baxter/render.hpp"

#include <algorithm>
#include <sstream>

namespace baxter {

namespace {

constexpr int kCellSize = 20;  // SVG unit cell

std::string svg_open(int width_px, int height_px) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\""
       << height_px << "\" viewBox=\"0 0 " << width_px << " " << height_px << "\">\n";
    return os.str();
}

} // namespace

std::string render_tlt_ascii(const TreeLikeTableau& t) {
    std::ostringstream os;
    for (int r = 1; r <= t.shape().row_count(); ++r) {
        for (int c = 1; c <= t.shape().row_length(r); ++c)
            os << (t.is_pointed({r, c}) ? "●" : "·") << (c < t.shape().row_length(r) ? " " : "");
        os << "\n";
    }
    return os.str();
}

std::string render_tlt_svg(const TreeLikeTableau& t) {
    int k = t.shape().row_count(), w = t.shape().width();
    std::ostringstream os;
    os << svg_open(w * kCellSize + 2, k * kCellSize + 2);
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= t.shape().row_length(r); ++c)
            os << "<rect x=\"" << (c - 1) * kCellSize + 1 << "\" y=\"" << (r - 1) * kCellSize + 1
               << "\" width=\"" << kCellSize << "\" height=\"" << kCellSize
               << "\" fill=\"white\" stroke=\"black\"/>\n";
    for (Cell p : t.points())
        os << "<circle cx=\"" << (p.col - 1) * kCellSize + kCellSize / 2 + 1 << "\" cy=\""
           << (p.row - 1) * kCellSize + kCellSize / 2 + 1 << "\" r=\"" << kCellSize / 4
           << "\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string render_floorplan_ascii(int height, int width, const std::vector<Tile>& tiles) {
    // character grid: (2w+1) x (2h+1), corners at even coordinates
    std::vector<std::string> grid(2 * height + 1, std::string(2 * width + 1, ' '));
    auto hline = [&](int y, int x0, int x1) {
        for (int x = 2 * x0; x <= 2 * x1; ++x)
            grid[2 * y][x] = (x % 2 == 0 && grid[2 * y][x] != '-') ? '+' : '-';
    };
    auto vline = [&](int x, int y0, int y1) {
        for (int y = 2 * y0; y <= 2 * y1; ++y) {
            char& ch = grid[y][2 * x];
            ch = (y % 2 == 0) ? '+' : (ch == '-' ? '+' : '|');
        }
    };
    for (const Tile& t : tiles) {
        hline(t.y, t.x, t.x + t.w);
        hline(t.y + t.h, t.x, t.x + t.w);
        vline(t.x, t.y, t.y + t.h);
        vline(t.x + t.w, t.y, t.y + t.h);
    }
    std::ostringstream os;
    for (const std::string& row : grid) os << row << "\n";
    return os.str();
}

std::string render_floorplan_svg(int height, int width, const std::vector<Tile>& tiles) {
    std::ostringstream os;
    os << svg_open(width * kCellSize + 2, height * kCellSize + 2);
    for (const Tile& t : tiles)
        os << "<rect x=\"" << t.x * kCellSize + 1 << "\" y=\"" << t.y * kCellSize + 1
           << "\" width=\"" << t.w * kCellSize << "\" height=\"" << t.h * kCellSize
           << "\" fill=\"white\" stroke=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

namespace {

// Decorated paths of a triple: the middle and bottom get an E before and an
// N after.
std::vector<LatticePath> decorated(const NilpTriple& t) {
    return {t.top,
            {{t.middle.start.x - 1, t.middle.start.y}, "E" + t.middle.steps + "N"},
            {{t.bottom.start.x - 1, t.bottom.start.y}, "E" + t.bottom.steps + "N"}};
}

} // namespace

std::string render_triple_ascii(const NilpTriple& t) {
    auto paths = decorated(t);
    int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const auto& p : paths)
        for (GridPoint g : p.visited()) {
            min_x = std::min(min_x, g.x);
            max_x = std::max(max_x, g.x);
            min_y = std::min(min_y, g.y);
            max_y = std::max(max_y, g.y);
        }
    std::vector<std::string> grid(max_y - min_y + 1, std::string(max_x - min_x + 1, '.'));
    const char* marks = "123";
    for (int i = 0; i < 3; ++i)
        for (GridPoint g : paths[i].visited()) {
            // y grows upward: flip for display
            char& ch = grid[max_y - g.y][g.x - min_x];
            ch = (ch == '.') ? marks[i] : '*';
        }
    // circles at the true extremities
    for (const LatticePath* p : {&t.top, &t.middle, &t.bottom}) {
        for (GridPoint g : {p->start, p->end()}) grid[max_y - g.y][g.x - min_x] = 'o';
    }
    std::ostringstream os;
    for (const std::string& row : grid) os << row << "\n";
    return os.str();
}

std::string render_triple_svg(const NilpTriple& t) {
    auto paths = decorated(t);
    int min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    for (const auto& p : paths)
        for (GridPoint g : p.visited()) {
            min_x = std::min(min_x, g.x);
            max_x = std::max(max_x, g.x);
            min_y = std::min(min_y, g.y);
            max_y = std::max(max_y, g.y);
        }
    int w_px = (max_x - min_x) * kCellSize + 2 * kCellSize;
    int h_px = (max_y - min_y) * kCellSize + 2 * kCellSize;
    auto px = [&](GridPoint g) {
        std::ostringstream os;
        os << (g.x - min_x) * kCellSize + kCellSize << "," << (max_y - g.y) * kCellSize + kCellSize;
        return os.str();
    };
    std::ostringstream os;
    os << svg_open(w_px, h_px);
    const char* colors[] = {"blue", "green", "black"};
    for (int i = 0; i < 3; ++i) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[i] << "\" points=\"";
        for (GridPoint g : paths[i].visited()) os << px(g) << " ";
        os << "\"/>\n";
    }
    for (const LatticePath* p : {&t.top, &t.middle, &t.bottom})
        for (GridPoint g : {p->start, p->end()}) {
            std::string pt = px(g);
            auto comma = pt.find(',');
            os << "<circle cx=\"" << pt.substr(0, comma) << "\" cy=\"" << pt.substr(comma + 1)
               << "\" r=\"" << kCellSize / 5 << "\" fill=\"white\" stroke=\"black\"/>\n";
        }
    os << "</svg>\n";
    return os.str();
}

std::string render_dyck_pair_ascii(const DyckPair& d) {
    std::ostringstream os;
    os << "upper: " << d.upper.steps << "\n";
    os << "lower: " << d.lower.steps << "\n";
    return os.str();
}

std::string render_dyck_pair_svg(const DyckPair& d) {
    int max_len = std::max(d.upper.length(), d.lower.length());
    int h = max_len / 2 + 2;
    std::ostringstream os;
    os << svg_open(max_len * kCellSize + 2 * kCellSize, (h + 1) * kCellSize);
    const char* colors[] = {"blue", "black"};
    const LatticePath* paths[] = {&d.upper, &d.lower};
    for (int i = 0; i < 2; ++i) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[i] << "\" points=\"";
        // draw as height profile: N = up, E = down for the upper path and
        // mirrored for the lower one
        int x = kCellSize, y = h * kCellSize;
        os << x << "," << y << " ";
        for (char s : paths[i]->steps) {
            bool up = (i == 0) ? s == 'N' : s == 'E';
            x += kCellSize / 2;
            y += up ? -kCellSize / 2 : kCellSize / 2;
            os << x << "," << y << " ";
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_permutation_ascii(const Permutation& p) {
    std::vector<std::string> grid(p.size(), std::string(p.size(), '.'));
    for (int i = 1; i <= p.size(); ++i) grid[p.size() - p(i)][i - 1] = '*';
    std::ostringstream os;
    os << p.text() << "\n";
    for (const std::string& row : grid) os << row << "\n";
    return os.str();
}

std::string render_permutation_svg(const Permutation& p) {
    int n = p.size();
    std::ostringstream os;
    os << svg_open(n * kCellSize + 2, n * kCellSize + 2);
    for (int i = 1; i <= n; ++i)
        os << "<circle cx=\"" << (i - 1) * kCellSize + kCellSize / 2 + 1 << "\" cy=\""
           << (n - p(i)) * kCellSize + kCellSize / 2 + 1 << "\" r=\"" << kCellSize / 5
           << "\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace baxter
