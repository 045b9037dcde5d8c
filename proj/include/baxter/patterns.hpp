#pragma once

#include <string>
#include <utility>
#include <vector>

#include "baxter/permutation.hpp"

namespace baxter {

// Permutation pattern with optional adjacency constraints on positions
// (vincular) and on values (bivincular).
struct BivincularPattern {
    Permutation base;
    std::vector<std::pair<int, int>> position_adjacent;  // pairs (j, j+1) of pattern positions
    std::vector<std::pair<int, int>> value_adjacent;     // pairs (v, v+1) of pattern values
};

// Grammar: entries are single digits 1..9, optionally suffixed '+' (the
// value-adjacency upper element); '-' separates non-adjacent entries,
// juxtaposition marks position-adjacent ones. An entry "k+" stands for base
// value k+1, literal digits above k shift up by one, and the pair (k, k+1)
// becomes value-adjacent.
BivincularPattern parse_pattern(const std::string& text);

struct Occurrence {
    std::vector<int> indices;  // strictly increasing 1-based positions in the host
    auto operator<=>(const Occurrence&) const = default;
};

// All occurrences of the pattern in the host, lexicographic by index list.
std::vector<Occurrence> occurrences(const Permutation& host, const BivincularPattern& p);

bool avoids(const Permutation& host, const BivincularPattern& p);
bool avoids(const Permutation& host, const std::string& pattern_text);

// Membership in B_n: permutations avoiding 3-14-2 and 3-41-2, i.e. the
// inverses of twisted Baxter permutations.
bool in_B(const Permutation& p);

} // namespace baxter
