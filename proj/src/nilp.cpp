#include "baxter/nilp.hpp"

#include <algorithm>

namespace baxter {

NilpTriple validate_triple(const std::string& top, const std::string& middle,
                           const std::string& bottom) {
    require_steps(top);
    require_steps(middle);
    require_steps(bottom);
    NilpTriple t;
    t.top = {{-1, 2}, top};
    t.middle = {{0, 1}, middle};
    t.bottom = {{1, 0}, bottom};
    require(top.size() == middle.size() && middle.size() == bottom.size(), Err::InvalidObject,
            "the three paths must have the same length");
    int i = t.top.count('N');
    require(t.middle.count('N') == i && t.bottom.count('N') == i, Err::InvalidObject,
            "the three paths must have the same number of N steps");
    require(!paths_intersect(t.top, t.middle) && !paths_intersect(t.middle, t.bottom) &&
                !paths_intersect(t.top, t.bottom),
            Err::InvalidObject, "paths must not meet");
    return t;
}

std::pair<LatticePath, LatticePath> tree_to_pair(const BinaryTree& tree) {
    require(!tree.empty(), Err::PreconditionViolated, "tree must be nonempty");
    std::string upper, lower;
    int leaf_count = tree.size() + 1;
    int leaf_seen = 0;
    // Depth-first walk of the leaf-completed tree.
    struct Walk {
        const BinaryTree& t;
        std::string& upper;
        std::string& lower;
        int& leaf_seen;
        int leaf_count;
        void visit(int v) {
            int l = t.nodes[v].left, r = t.nodes[v].right;
            if (l >= 0) {
                upper += 'N';  // left internal edge
                visit(l);
            } else {
                leaf(true);
            }
            if (r >= 0) {
                upper += 'E';  // right internal edge
                visit(r);
            } else {
                leaf(false);
            }
        }
        void leaf(bool left_leaf) {
            int idx = leaf_seen++;
            if (idx == 0 || idx == leaf_count - 1) return;  // skip first and last leaves
            lower += left_leaf ? 'E' : 'N';
        }
    } walk{tree, upper, lower, leaf_seen, leaf_count};
    walk.visit(0);
    return {LatticePath{{0, 1}, upper}, LatticePath{{1, 0}, lower}};
}

BinaryTree pair_to_tree(const LatticePath& upper, const LatticePath& lower) {
    require(upper.start == GridPoint{0, 1} && lower.start == GridPoint{1, 0}, Err::NotAPair,
            "pair anchors must be (0,1) and (1,0)");
    require(upper.length() == lower.length(), Err::NotAPair, "paths must have equal length");
    require(upper.count('N') == lower.count('N'), Err::NotAPair,
            "paths must have equal N counts");
    require(!paths_intersect(upper, lower), Err::NotAPair, "paths must not meet");

    // Parse the merged traversal word back. The upper word holds the internal
    // edges, the lower word (with the skipped first and last leaves restored)
    // holds the leaves. At a left-child slot the next letter is an internal
    // left edge exactly when the upper stream says so; at a right-child slot
    // the next letter is a right leaf exactly when the lower stream says so.
    const std::string& edges = upper.steps;            // 'N' = left edge, 'E' = right edge
    std::string leaves = "E" + lower.steps + "N";      // 'E' = left leaf, 'N' = right leaf
    size_t ei = 0, li = 0;

    BinaryTree tree;
    struct Parser {
        const std::string& edges;
        const std::string& leaves;
        size_t& ei;
        size_t& li;
        BinaryTree& tree;
        int parse_node() {
            int idx = tree.size();
            tree.nodes.push_back({});
            if (ei < edges.size() && edges[ei] == 'N') {
                ++ei;
                int child = parse_node();
                tree.nodes[idx].left = child;
            } else {
                require(li < leaves.size() && leaves[li] == 'E', Err::NotAPair,
                        "expected a left leaf");
                ++li;
            }
            if (li < leaves.size() && leaves[li] == 'N') {
                ++li;
            } else {
                require(ei < edges.size() && edges[ei] == 'E', Err::NotAPair,
                        "expected a right edge");
                ++ei;
                int child = parse_node();
                tree.nodes[idx].right = child;
            }
            return idx;
        }
    } parser{edges, leaves, ei, li, tree};
    parser.parse_node();
    require(ei == edges.size() && li == leaves.size(), Err::NotAPair, "unconsumed steps");
    return tree;
}

NilpTriple phi_P(const TreeLikeTableau& t) {
    require(is_baxter(t), Err::NotBaxter, "phi_P needs a Baxter tableau");
    auto [w1, w2] = tree_to_pair(underlying_tree(t));
    std::string border = t.shape().border_word();
    std::string bottom = border.substr(1, border.size() - 2);
    return validate_triple(w1.steps, w2.steps, bottom);
}

TreeLikeTableau phi_P_inverse(const NilpTriple& triple) {
    BinaryTree tree =
        pair_to_tree(LatticePath{{0, 1}, triple.top.steps}, LatticePath{{1, 0}, triple.middle.steps});
    TreeLikeTableau rect = rectangular_baxter(tree);
    FerrersShape shape = shape_from_border("E" + triple.bottom.steps + "N");
    for (Cell p : rect.points())
        require(shape.contains(p), Err::PointsOutsideShape,
                "bottom path too thin for the tree's points");
    return validate_tlt(shape, rect.points());
}

std::vector<NilpTriple> enumerate_triples(int n) {
    require(n >= 1, Err::PreconditionViolated, "size must be at least 1");
    std::vector<NilpTriple> out;
    for (int i = 0; i <= n - 1; ++i) {
        auto words = step_words(n - 1, i);
        for (const std::string& top : words) {
            LatticePath tp{{-1, 2}, top};
            for (const std::string& mid : words) {
                LatticePath mp{{0, 1}, mid};
                if (paths_intersect(tp, mp)) continue;
                for (const std::string& bot : words) {
                    LatticePath bp{{1, 0}, bot};
                    if (paths_intersect(mp, bp) || paths_intersect(tp, bp)) continue;
                    out.push_back(NilpTriple{tp, mp, bp});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    BigInt num = 1, den = 1;
    b = std::min(b, a - b);
    for (long long i = 0; i < b; ++i) {
        num *= a - i;
        den *= i + 1;
    }
    return num / den;
}

BigInt lgv(const LgvParams& g) {
    auto [n, k, r, p, s, q] = g;
    require(n >= 1 && k >= 0 && r >= 1 && p >= 1 && s >= 1 && q >= 1, Err::PreconditionViolated,
            "parameters out of range");
    // Entries of the path matrix; row = end, column = start.
    BigInt a11 = binomial(n - 1 - r - p, k - p), a12 = binomial(n - 1 - p, k - p),
           a13 = binomial(n - 1 - s - p, k - s - p);
    BigInt a21 = binomial(n - 1 - r, k), a22 = binomial(n - 1, k),
           a23 = binomial(n - 1 - s, k - s);
    BigInt a31 = binomial(n - 1 - r - q, k), a32 = binomial(n - 1 - q, k),
           a33 = binomial(n - 1 - s - q, k - s);

    // A top path of the form N^(r-1) E^(p-1) (no interior bend) is fully
    // pinned; it exists only for (r,p) = (n-k, k+1) and the determinant row
    // for it degenerates, so the top path drops out of the matrix. Same for
    // the bottom path with (s,q) = (k+1, n-k).
    bool top_pinned = (r == n - k) && (p == k + 1);
    bool bottom_pinned = (s == k + 1) && (q == n - k);
    if (top_pinned && bottom_pinned) return a22;
    if (top_pinned) return a22 * a33 - a23 * a32;
    if (bottom_pinned) return a11 * a22 - a12 * a21;
    return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
           a13 * (a21 * a32 - a22 * a31);
}

LgvParams tlt_lgv_params(const TreeLikeTableau& t) {
    require(is_baxter(t), Err::NotBaxter, "tlt_lgv_params needs a Baxter tableau");
    NilpTriple triple = phi_P(t);
    LgvParams g;
    g.n = t.size();
    g.k = triple.top.count('E');
    g.r = leading_run(triple.top.steps, 'N') + 1;
    g.p = trailing_run(triple.top.steps, 'E') + 1;
    // The SE border is E.bottom.N, so its leading E-run and trailing N-run
    // are one longer than the bottom path's.
    g.s = leading_run(triple.bottom.steps, 'E') + 1;
    g.q = trailing_run(triple.bottom.steps, 'N') + 1;
    return g;
}

DyckPair to_dyck_pair(const TreeLikeTableau& t) {
    require(is_almost_complete(t), Err::NotAlmostComplete,
            "to_dyck_pair needs an almost complete Baxter tableau");
    NilpTriple triple = phi_P(t);
    DyckPair d;
    if (t.size() % 2 == 0) {
        d.upper = {{0, 0}, "N" + triple.top.steps};
        d.lower = {{0, 0}, triple.bottom.steps + "N"};
    } else {
        d.upper = {{0, 0}, "N" + triple.top.steps + "E"};
        d.lower = {{0, 0}, triple.bottom.steps};
    }
    require(is_dyck(d.upper.steps, 'N') && is_dyck(d.lower.steps, 'E'), Err::NotDyck,
            "image is not a pair of Dyck paths");
    return d;
}

TreeLikeTableau from_dyck_pair(const DyckPair& d) {
    require_steps(d.upper.steps);
    require_steps(d.lower.steps);
    require(is_dyck(d.upper.steps, 'N'), Err::NotDyck, "upper path must be N-dominant Dyck");
    require(is_dyck(d.lower.steps, 'E'), Err::NotDyck, "lower path must be E-dominant Dyck");
    int up = d.upper.length(), lo = d.lower.length();
    int n;
    std::string top, bottom;
    if (up == lo) {
        n = up;
        require(n >= 2 && n % 2 == 0, Err::NotDyck, "even-size pair has equal even lengths");
        require(d.upper.steps.front() == 'N' && d.lower.steps.back() == 'N', Err::NotDyck,
                "even-size pair must start N / end N");
        top = d.upper.steps.substr(1);
        bottom = d.lower.steps.substr(0, lo - 1);
    } else if (up == lo + 2) {
        n = up - 1;
        require(d.upper.steps.front() == 'N' && d.upper.steps.back() == 'E', Err::NotDyck,
                "odd-size pair's upper path must start N and end E");
        top = d.upper.steps.substr(1, up - 2);
        bottom = d.lower.steps;
    } else {
        fail(Err::NotDyck, "lengths must be (n,n) or (n+1,n-1)");
    }
    // The middle path of an almost complete tableau is the strict E/N
    // alternation starting with E.
    std::string middle;
    for (int i = 0; i < n - 1; ++i) middle += (i % 2 == 0) ? 'E' : 'N';
    NilpTriple triple;
    try {
        triple = validate_triple(top, middle, bottom);
    } catch (const BaxterError&) {
        fail(Err::NotDyck, "pair does not assemble into a valid triple");
    }
    TreeLikeTableau t = phi_P_inverse(triple);
    require(is_almost_complete(t), Err::NotDyck, "pair does not map to an almost complete tableau");
    return t;
}

std::vector<DyckPair> enumerate_dyck_pairs(int n) {
    require(n >= 1, Err::PreconditionViolated, "size must be at least 1");
    int up = (n % 2 == 0) ? n : n + 1;
    int lo = (n % 2 == 0) ? n : n - 1;
    std::vector<std::string> uppers, lowers;
    for (const std::string& w : step_words(up, up / 2))
        if (is_dyck(w, 'N')) uppers.push_back(w);
    for (const std::string& w : step_words(lo, lo / 2))
        if (is_dyck(w, 'E')) lowers.push_back(w);
    std::vector<DyckPair> out;
    for (const auto& u : uppers)
        for (const auto& l : lowers)
            out.push_back(DyckPair{LatticePath{{0, 0}, u}, LatticePath{{0, 0}, l}});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace baxter
