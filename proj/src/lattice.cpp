#include "baxter/lattice.hpp"

#include <algorithm>

namespace baxter {

std::vector<GridPoint> LatticePath::visited() const {
    std::vector<GridPoint> pts{start};
    GridPoint cur = start;
    for (char s : steps) {
        if (s == 'E')
            cur.x += 1;
        else
            cur.y += 1;
        pts.push_back(cur);
    }
    return pts;
}

void require_steps(const std::string& steps) {
    for (char s : steps)
        require(s == 'N' || s == 'E', Err::InvalidObject, "steps must be N or E");
}

bool paths_intersect(const LatticePath& a, const LatticePath& b) {
    auto pa = a.visited();
    std::set<GridPoint> sa(pa.begin(), pa.end());
    for (GridPoint p : b.visited())
        if (sa.count(p)) return true;
    return false;
}

bool is_dyck(const std::string& steps, char dominant) {
    int bal = 0;
    for (char s : steps) {
        bal += (s == dominant) ? 1 : -1;
        if (bal < 0) return false;
    }
    return bal == 0;
}

int leading_run(const std::string& steps, char step) {
    int n = 0;
    for (char s : steps) {
        if (s != step) break;
        ++n;
    }
    return n;
}

int trailing_run(const std::string& steps, char step) {
    int n = 0;
    for (auto it = steps.rbegin(); it != steps.rend() && *it == step; ++it) ++n;
    return n;
}

std::vector<std::string> step_words(int length, int n_steps) {
    std::vector<std::string> out;
    if (n_steps < 0 || n_steps > length) return out;
    std::string word(static_cast<size_t>(length), 'E');
    for (int i = 0; i < n_steps; ++i) word[length - n_steps + i] = 'N';
    std::sort(word.begin(), word.end());
    // iterate all rearrangements in lexicographic order
    std::vector<int> pos(n_steps);
    for (int i = 0; i < n_steps; ++i) pos[i] = i;
    if (n_steps == 0) {
        out.push_back(std::string(static_cast<size_t>(length), 'E'));
        return out;
    }
    while (true) {
        std::string w(static_cast<size_t>(length), 'E');
        for (int i = 0; i < n_steps; ++i) w[pos[i]] = 'N';
        out.push_back(w);
        int i = n_steps - 1;
        while (i >= 0 && pos[i] == length - n_steps + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j < n_steps; ++j) pos[j] = pos[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace baxter
