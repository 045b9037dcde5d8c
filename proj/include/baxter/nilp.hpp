#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "baxter/lattice.hpp"
#include "baxter/tlt.hpp"

namespace baxter {

using BigInt = boost::multiprecision::cpp_int;

// Triple of pairwise non-intersecting N/E paths anchored at (-1,2), (0,1)
// and (1,0), each with n-1 steps and a common number of N steps.
struct NilpTriple {
    LatticePath top, middle, bottom;

    int size() const { return top.length() + 1; }
    auto operator<=>(const NilpTriple&) const = default;
};

NilpTriple validate_triple(const std::string& top, const std::string& middle,
                           const std::string& bottom);

// Tree encoding: depth-first traversal of the leaf-completed tree records
// internal edges in the upper path (left -> N, right -> E) and leaves other
// than the first and last in the lower path (left -> E, right -> N). The
// upper path is anchored at (0,1), the lower at (1,0).
std::pair<LatticePath, LatticePath> tree_to_pair(const BinaryTree& tree);
BinaryTree pair_to_tree(const LatticePath& upper, const LatticePath& lower);

NilpTriple phi_P(const TreeLikeTableau& t);
TreeLikeTableau phi_P_inverse(const NilpTriple& triple);

// Brute-force generation of every valid triple of size n.
std::vector<NilpTriple> enumerate_triples(int n);

struct LgvParams {
    int n = 0, k = 0, r = 0, p = 0, s = 0, q = 0;
    auto operator<=>(const LgvParams&) const = default;
};

// Number of triples of size n in which every path has k E steps, the top
// path has leading N-run r-1 and trailing E-run p-1, and the bottom path has
// leading E-run s-1 and trailing N-run q-1 (runs taken maximal). Evaluated
// as the 3x3 binomial determinant, falling back to its central minors for
// the run-only path classes the full determinant cannot see.
BigInt lgv(const LgvParams& params);

// Statistics of a Baxter tableau as LGV parameters.
LgvParams tlt_lgv_params(const TreeLikeTableau& t);

// Pair of Dyck paths: the upper is N-dominant, the lower E-dominant; sizes
// (n,n) for even n and (n+1,n-1) for odd n.
struct DyckPair {
    LatticePath upper, lower;
    auto operator<=>(const DyckPair&) const = default;
};

DyckPair to_dyck_pair(const TreeLikeTableau& t);       // t almost complete
TreeLikeTableau from_dyck_pair(const DyckPair& pair);

std::vector<DyckPair> enumerate_dyck_pairs(int n);

BigInt binomial(long long a, long long b);

} // namespace baxter
