#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "baxter/errors.hpp"

namespace baxter {

struct GridPoint {
    int x = 0;
    int y = 0;
    auto operator<=>(const GridPoint&) const = default;
};

// Lattice path with unit N=(0,1) and E=(1,0) steps.
struct LatticePath {
    GridPoint start;
    std::string steps;  // over {'N','E'}

    int length() const { return static_cast<int>(steps.size()); }
    int count(char step) const {
        return static_cast<int>(std::count(steps.begin(), steps.end(), step));
    }
    GridPoint end() const { return {start.x + count('E'), start.y + count('N')}; }
    std::vector<GridPoint> visited() const;  // start included

    auto operator<=>(const LatticePath&) const = default;
};

void require_steps(const std::string& steps);

bool paths_intersect(const LatticePath& a, const LatticePath& b);

// Dyck condition: balanced N/E counts and every prefix has at least as many
// `dominant` steps as the other kind.
bool is_dyck(const std::string& steps, char dominant);

// Longest run of `step` at the front / back of the word.
int leading_run(const std::string& steps, char step);
int trailing_run(const std::string& steps, char step);

// All step words of the given length with the given number of N steps, in
// lexicographic order (E < N).
std::vector<std::string> step_words(int length, int n_steps);

} // namespace baxter
