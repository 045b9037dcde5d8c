#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "baxter/census.hpp"
#include "baxter/nilp.hpp"

using namespace baxter;

namespace {

TreeLikeTableau tlt(std::vector<int> rows, std::vector<Cell> pts) {
    return validate_tlt(FerrersShape(std::move(rows)), pts);
}

const TreeLikeTableau kThree = tlt({2, 2}, {{1, 1}, {1, 2}, {2, 1}});

BinaryTree single_node() {
    BinaryTree t;
    t.nodes.push_back({});
    return t;
}

LgvParams brute_params(const NilpTriple& tr) {
    LgvParams g;
    g.n = tr.size();
    g.k = tr.top.count('E');
    g.r = leading_run(tr.top.steps, 'N') + 1;
    g.p = trailing_run(tr.top.steps, 'E') + 1;
    g.s = leading_run(tr.bottom.steps, 'E') + 1;
    g.q = trailing_run(tr.bottom.steps, 'N') + 1;
    return g;
}

} // namespace

TEST_CASE("tree_to_pair on the documented examples") {
    auto [e1, e2] = tree_to_pair(single_node());
    CHECK(e1.steps.empty());
    CHECK(e2.steps.empty());
    CHECK(e1.start == GridPoint{0, 1});
    CHECK(e2.start == GridPoint{1, 0});

    auto [w1, w2] = tree_to_pair(make_tree(single_node(), single_node()));
    CHECK(w1.steps == "NE");
    CHECK(w2.steps == "NE");
}

TEST_CASE("the ten-node traversal example round-trips through its words") {
    LatticePath upper{{0, 1}, "NNENEEENN"};
    LatticePath lower{{1, 0}, "NENEENENN"};
    BinaryTree b = pair_to_tree(upper, lower);
    CHECK(b.size() == 10);
    auto [w1, w2] = tree_to_pair(b);
    CHECK(w1.steps == "NNENEEENN");
    CHECK(w2.steps == "NENEENENN");
}

TEST_CASE("tree pairs have equal N counts and never meet") {
    for (int n = 1; n <= 8; ++n)
        for (const BinaryTree& b : enumerate_binary_trees(n)) {
            auto [w1, w2] = tree_to_pair(b);
            CHECK(w1.length() == n - 1);
            CHECK(w2.length() == n - 1);
            CHECK(w1.count('N') == w2.count('N'));
            CHECK_FALSE(paths_intersect(w1, w2));
        }
}

TEST_CASE("pair_to_tree inverts tree_to_pair and validates") {
    CHECK(pair_to_tree(LatticePath{{0, 1}, ""}, LatticePath{{1, 0}, ""}) == single_node());
    CHECK(pair_to_tree(LatticePath{{0, 1}, "NE"}, LatticePath{{1, 0}, "NE"}) ==
          make_tree(single_node(), single_node()));
    for (int n = 1; n <= 7; ++n)
        for (const BinaryTree& b : enumerate_binary_trees(n)) {
            auto [w1, w2] = tree_to_pair(b);
            CHECK(pair_to_tree(w1, w2) == b);
        }
    CHECK_THROWS_AS(pair_to_tree(LatticePath{{0, 1}, "NE"}, LatticePath{{1, 0}, "N"}),
                    BaxterError);
    // mismatched N counts
    CHECK_THROWS_AS(pair_to_tree(LatticePath{{0, 1}, "EN"}, LatticePath{{1, 0}, "NN"}),
                    BaxterError);
    // equal counts but crossing paths: both visit (1,1)
    CHECK_THROWS_AS(pair_to_tree(LatticePath{{0, 1}, "ENE"}, LatticePath{{1, 0}, "NEE"}),
                    BaxterError);
}

TEST_CASE("phi_P on the documented examples") {
    NilpTriple one = phi_P(size_one_tlt());
    CHECK(one.top.steps.empty());
    CHECK(one.middle.steps.empty());
    CHECK(one.bottom.steps.empty());
    CHECK(one.top.start == GridPoint{-1, 2});

    NilpTriple three = phi_P(kThree);
    CHECK(three.top.steps == "NE");
    CHECK(three.middle.steps == "NE");
    CHECK(three.bottom.steps == "EN");
    CHECK(three.top.count('N') == 1);  // common i = 1

    CHECK_THROWS_AS(phi_P(tlt({2, 2, 2}, {{1, 1}, {1, 2}, {2, 1}, {3, 2}})), BaxterError);
}

TEST_CASE("phi_P_inverse on the documented examples") {
    NilpTriple empty = validate_triple("", "", "");
    CHECK(phi_P_inverse(empty) == size_one_tlt());
    CHECK(phi_P_inverse(validate_triple("NE", "NE", "EN")) == kThree);
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_baxter_tlts(n)) CHECK(phi_P_inverse(phi_P(t)) == t);
}

TEST_CASE("enumerate_triples counts by Baxter numbers and carries the image of phi_P") {
    CHECK(enumerate_triples(1).size() == 1);
    CHECK(enumerate_triples(2).size() == 2);
    CHECK(enumerate_triples(4).size() == 22);
    CHECK(enumerate_triples(5).size() == 92);
    for (int n = 1; n <= 6; ++n) {
        std::set<NilpTriple> image;
        for (const auto& t : enumerate_baxter_tlts(n)) image.insert(phi_P(t));
        auto all = enumerate_triples(n);
        CHECK(image == std::set<NilpTriple>(all.begin(), all.end()));
    }
}

TEST_CASE("the middle path draws the thinnest shape around the points") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : enumerate_baxter_tlts(n)) {
            NilpTriple tr = phi_P(t);
            FerrersShape thin = shape_from_border("E" + tr.middle.steps + "N");
            // thinnest Ferrers diagram containing the points
            std::vector<int> min_rows(t.shape().row_count(), 0);
            for (Cell p : t.points())
                min_rows[p.row - 1] = std::max(min_rows[p.row - 1], p.col);
            for (int r = t.shape().row_count() - 1; r >= 1; --r)
                min_rows[r - 1] = std::max(min_rows[r - 1], min_rows[r]);
            CHECK(thin.rows() == min_rows);
        }
}

TEST_CASE("lgv on the documented cases") {
    CHECK(lgv({1, 0, 1, 1, 1, 1}) == 1);
    CHECK(lgv({18, 10, 3, 2, 5, 2}) > 0);
    // any prefix or suffix constraint longer than the path kills the count
    CHECK(lgv({4, 2, 5, 1, 1, 1}) == 0);
    CHECK(lgv({4, 2, 1, 4, 1, 1}) == 0);
}

TEST_CASE("lgv equals the brute-force constrained count tuple-wise") {
    for (int n = 1; n <= 5; ++n) {
        std::map<LgvParams, long long> brute;
        for (const NilpTriple& tr : enumerate_triples(n)) brute[brute_params(tr)] += 1;
        for (int k = 0; k <= n - 1; ++k)
            for (int r = 1; r <= n; ++r)
                for (int p = 1; p <= n; ++p)
                    for (int s = 1; s <= n; ++s)
                        for (int q = 1; q <= n; ++q) {
                            LgvParams g{n, k, r, p, s, q};
                            long long expect = brute.count(g) ? brute[g] : 0;
                            CHECK(lgv(g) == expect);
                        }
    }
}

TEST_CASE("lgv sums to the Baxter numbers and never goes negative") {
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (int k = 0; k <= n - 1; ++k)
            for (int r = 1; r <= n; ++r)
                for (int p = 1; p <= n; ++p)
                    for (int s = 1; s <= n; ++s)
                        for (int q = 1; q <= n; ++q) {
                            BigInt v = lgv({n, k, r, p, s, q});
                            CHECK(v >= 0);
                            total += v;
                        }
        CHECK(total == baxter_number(n));
    }
    for (int n = 9; n <= 12; ++n)
        for (int k = 0; k <= n - 1; ++k)
            for (int r = 1; r <= n; ++r)
                for (int p = 1; p <= n; ++p)
                    for (int s = 1; s <= n; ++s)
                        for (int q = 1; q <= n; ++q) CHECK(lgv({n, k, r, p, s, q}) >= 0);
}

TEST_CASE("tlt_lgv_params on the documented examples") {
    CHECK(tlt_lgv_params(size_one_tlt()) == LgvParams{1, 0, 1, 1, 1, 1});

    // a size-18 tableau with the documented parameter tuple, built from an
    // explicit triple in that parameter class
    NilpTriple big = validate_triple("NNEENENENENEEEENE", "EEENENENENENENENE",
                                     "EEEENNENENENENEEN");
    TreeLikeTableau t18 = phi_P_inverse(big);
    CHECK(t18.size() == 18);
    CHECK(tlt_lgv_params(t18) == LgvParams{18, 10, 3, 2, 5, 2});
}

TEST_CASE("tlt_lgv_params agrees with the column and border readings") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_baxter_tlts(n)) {
            LgvParams g = tlt_lgv_params(t);
            CHECK(g.k + 1 == t.shape().width());
            int r_col = 0;
            for (Cell p : t.points())
                if (p.col == 1) ++r_col;
            CHECK(g.r == r_col);
            // p-1 = columns right of the rightmost column holding two points
            std::map<int, int> per_col;
            for (Cell p : t.points()) per_col[p.col] += 1;
            int cstar = 1;
            for (auto& [col, cnt] : per_col)
                if (cnt >= 2) cstar = std::max(cstar, col);
            CHECK(g.p - 1 == t.shape().width() - cstar);
            // s and q read off the border word
            std::string border = t.shape().border_word();
            CHECK(g.s == leading_run(border, 'E'));
            CHECK(g.q == trailing_run(border, 'N'));
        }
}

TEST_CASE("params histogram matches lgv tuple-wise over the tableaux") {
    for (int n = 1; n <= 7; ++n) {
        std::map<LgvParams, long long> hist;
        for (const auto& t : enumerate_baxter_tlts(n)) hist[tlt_lgv_params(t)] += 1;
        for (auto& [g, count] : hist) CHECK(lgv(g) == count);
        BigInt reachable = 0;
        for (auto& [g, count] : hist) reachable += count;
        CHECK(reachable == baxter_number(n));
    }
}

TEST_CASE("dyck pairs of the documented examples") {
    DyckPair one = to_dyck_pair(size_one_tlt());
    CHECK(one.upper.steps == "NE");
    CHECK(one.lower.steps == "");
    CHECK(from_dyck_pair(one) == size_one_tlt());

    CHECK_THROWS_AS(to_dyck_pair(kThree), BaxterError);  // complete, not almost complete
    CHECK_THROWS_AS(from_dyck_pair(DyckPair{{{0, 0}, "EN"}, {{0, 0}, ""}}), BaxterError);
    CHECK_THROWS_AS(from_dyck_pair(DyckPair{{{0, 0}, "NE"}, {{0, 0}, "N"}}), BaxterError);
}

TEST_CASE("dyck pairs count by Catalan products and round-trip") {
    std::vector<long long> expected{1, 1, 2, 4, 10, 25, 70};
    for (int n = 1; n <= 7; ++n) {
        auto pairs = enumerate_dyck_pairs(n);
        CHECK(static_cast<long long>(pairs.size()) == expected[n - 1]);
    }
    for (int n = 1; n <= 6; ++n) {
        for (const auto& d : enumerate_dyck_pairs(n)) {
            TreeLikeTableau t = from_dyck_pair(d);
            CHECK(is_almost_complete(t));
            CHECK(to_dyck_pair(t) == d);
        }
        for (const auto& t : enumerate_baxter_tlts(n))
            if (is_almost_complete(t)) CHECK(from_dyck_pair(to_dyck_pair(t)) == t);
    }
}
