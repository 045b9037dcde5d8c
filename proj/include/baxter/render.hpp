#pragma once

#include <string>

#include "baxter/floorplan.hpp"
#include "baxter/nilp.hpp"
#include "baxter/permutation.hpp"
#include "baxter/tlt.hpp"

namespace baxter {

std::string render_tlt_ascii(const TreeLikeTableau& t);
std::string render_tlt_svg(const TreeLikeTableau& t);

std::string render_floorplan_ascii(int height, int width, const std::vector<Tile>& tiles);
std::string render_floorplan_svg(int height, int width, const std::vector<Tile>& tiles);

// Triples are drawn with circles at the path extremities, plus a decorative
// E before and N after the middle and bottom paths.
std::string render_triple_ascii(const NilpTriple& t);
std::string render_triple_svg(const NilpTriple& t);

std::string render_dyck_pair_ascii(const DyckPair& d);
std::string render_dyck_pair_svg(const DyckPair& d);

std::string render_permutation_ascii(const Permutation& p);
std::string render_permutation_svg(const Permutation& p);

} // namespace baxter
