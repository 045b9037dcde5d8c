#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "baxter/census.hpp"
#include "baxter/iso.hpp"
#include "baxter/patterns.hpp"
#include "oracles.hpp"

using namespace baxter;

namespace {

const Permutation kSigma12 = Permutation::parse("6 3 2 10 4 5 1 7 9 8 11 12");

TreeLikeTableau tlt(std::vector<int> rows, std::vector<Cell> pts) {
    return validate_tlt(FerrersShape(std::move(rows)), pts);
}

const TreeLikeTableau kThree = tlt({2, 2}, {{1, 1}, {1, 2}, {2, 1}});

std::set<std::vector<int>> value_sets(const Permutation& host, const std::string& pattern) {
    std::set<std::vector<int>> out;
    for (const Occurrence& occ : occurrences(host, parse_pattern(pattern))) {
        std::vector<int> vals;
        for (int idx : occ.indices) vals.push_back(host(idx));
        out.insert(vals);
    }
    return out;
}

} // namespace

TEST_CASE("permutation basics") {
    Permutation p = Permutation::parse("3 1 2");
    CHECK(p.size() == 3);
    CHECK(p(1) == 3);
    CHECK(p.inverse() == Permutation::parse("2 3 1"));
    CHECK(p.text() == "3 1 2");
    CHECK(p.position_of(3) == 1);
    CHECK_THROWS_AS(Permutation::parse("1 1 2"), BaxterError);
    CHECK_THROWS_AS(Permutation::parse("1 3"), BaxterError);
}

TEST_CASE("parse_pattern covers the documented grammar") {
    BivincularPattern classical = parse_pattern("3-1-2");
    CHECK(classical.base == Permutation({3, 1, 2}));
    CHECK(classical.position_adjacent.empty());
    CHECK(classical.value_adjacent.empty());

    BivincularPattern biv = parse_pattern("2+-1-2");
    CHECK(biv.base == Permutation({3, 1, 2}));
    CHECK(biv.position_adjacent.empty());
    CHECK(biv.value_adjacent == std::vector<std::pair<int, int>>{{2, 3}});

    BivincularPattern vinc = parse_pattern("3-41-2");
    CHECK(vinc.base == Permutation({3, 4, 1, 2}));
    CHECK(vinc.position_adjacent == std::vector<std::pair<int, int>>{{2, 3}});

    BivincularPattern vinc2 = parse_pattern("2-41-3");
    CHECK(vinc2.base == Permutation({2, 4, 1, 3}));
    CHECK(vinc2.position_adjacent == std::vector<std::pair<int, int>>{{2, 3}});

    BivincularPattern both = parse_pattern("2+-12");
    CHECK(both.base == Permutation({3, 1, 2}));
    CHECK(both.position_adjacent == std::vector<std::pair<int, int>>{{2, 3}});
    CHECK(both.value_adjacent == std::vector<std::pair<int, int>>{{2, 3}});

    // literal digits above the plus entry shift up by one
    BivincularPattern shifted = parse_pattern("2+-1-3-2");
    CHECK(shifted.base == Permutation({3, 1, 4, 2}));
    CHECK(shifted.value_adjacent == std::vector<std::pair<int, int>>{{2, 3}});

    CHECK_THROWS_AS(parse_pattern(""), BaxterError);
    CHECK_THROWS_AS(parse_pattern("3-1-"), BaxterError);
    CHECK_THROWS_AS(parse_pattern("3-x-1"), BaxterError);
    CHECK_THROWS_AS(parse_pattern("1+-2+"), BaxterError);
    CHECK_THROWS_AS(parse_pattern("3-1"), BaxterError);    // not a permutation
    CHECK_THROWS_AS(parse_pattern("2+-1-3"), BaxterError); // resolves to {3,1,4}
}

TEST_CASE("occurrence table of the running example") {
    CHECK(occurrences(kSigma12, parse_pattern("3-1-2")).size() == 17);
    CHECK(occurrences(kSigma12, parse_pattern("3-12")).size() == 4);
    CHECK(occurrences(kSigma12, parse_pattern("2+-1-2")).size() == 7);
    CHECK(occurrences(kSigma12, parse_pattern("2+-12")).size() == 2);
    CHECK(value_sets(kSigma12, "3-12") ==
          std::set<std::vector<int>>{{6, 4, 5}, {10, 4, 5}, {10, 1, 7}, {10, 7, 9}});
    CHECK(value_sets(kSigma12, "2+-12") == std::set<std::vector<int>>{{6, 4, 5}, {10, 7, 9}});
    // occurrences come back sorted by position tuple
    auto occs = occurrences(kSigma12, parse_pattern("3-1-2"));
    CHECK(std::is_sorted(occs.begin(), occs.end()));
}

TEST_CASE("classical occurrence counts match the naive subsequence scan") {
    std::vector<Permutation> hosts;
    for (int n = 1; n <= 6; ++n)
        for (const Permutation& p : enumerate_permutations(n)) hosts.push_back(p);
    // deterministic samples of the larger sizes
    for (int n = 7; n <= 8; ++n) {
        auto all = enumerate_permutations(n);
        for (size_t i = 0; i < all.size(); i += 97) hosts.push_back(all[i]);
    }
    hosts.push_back(kSigma12);
    hosts.push_back(Permutation::parse("5 8 1 3 7 2 6 4"));
    std::vector<Permutation> bases;
    for (int m = 2; m <= 4; ++m)
        for (const Permutation& b : enumerate_permutations(m)) bases.push_back(b);
    for (const Permutation& host : hosts)
        for (const Permutation& base : bases) {
            BivincularPattern p{base, {}, {}};
            CHECK(static_cast<long long>(occurrences(host, p).size()) ==
                  oracles::naive_classical_count(host, base));
        }
}

TEST_CASE("avoids on the documented examples") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> vals(n);
        for (int i = 0; i < n; ++i) vals[i] = i + 1;
        CHECK(avoids(Permutation(vals), "3-41-2"));
    }
    CHECK_FALSE(avoids(Permutation::parse("3 1 4 2"), "3-14-2"));
    CHECK_FALSE(avoids(Permutation::parse("3 4 1 2"), "3-41-2"));

    std::set<Permutation> avoiders;
    for (const Permutation& p : enumerate_permutations(4))
        if (avoids(p, "3-14-2") && avoids(p, "3-41-2")) avoiders.insert(p);
    CHECK(avoiders.size() == 22);
    CHECK_FALSE(avoiders.count(Permutation::parse("3 1 4 2")));
    CHECK_FALSE(avoiders.count(Permutation::parse("3 4 1 2")));
}

TEST_CASE("in_B equals its inverse-based and bivincular characterizations") {
    for (const Permutation& p : enumerate_permutations(3)) CHECK(in_B(p));
    for (int n = 1; n <= 7; ++n) {
        long long members = 0;
        for (const Permutation& p : enumerate_permutations(n)) {
            bool direct = in_B(p);
            Permutation inv = p.inverse();
            bool via_inverse = avoids(inv, "2-41-3") && avoids(inv, "3-41-2");
            bool via_bivincular = avoids(p, "2+-1-3-2") && avoids(p, "2+-3-1-2");
            CHECK(direct == via_inverse);
            CHECK(direct == via_bivincular);
            if (direct) ++members;
        }
        CHECK(BigInt(members) == baxter_number(n));
    }
}

TEST_CASE("iso labeling of the documented examples") {
    IsoLabeling one = iso_labeling(size_one_tlt());
    CHECK(one.labels == std::map<Cell, int>{{{1, 1}, 1}});

    IsoLabeling three = iso_labeling(kThree);
    CHECK(three.labels.at({1, 1}) == 1);
    CHECK(three.labels.at({1, 2}) == 2);
    CHECK(three.labels.at({2, 1}) == 3);
    CHECK(three.labels.at({2, 2}) == 1);  // crossing inherits from the NW
}

TEST_CASE("phi on the documented examples") {
    CHECK(phi(size_one_tlt()) == Permutation({1}));
    CHECK(phi(kThree) == Permutation::parse("3 1 2"));
    CHECK(phi(phi_inverse(kSigma12)) == kSigma12);
}

TEST_CASE("phi is a bijection onto permutations") {
    for (int n = 1; n <= 6; ++n) {
        std::set<Permutation> image;
        for (const auto& t : enumerate_tlts(n)) image.insert(phi(t));
        CHECK(image.size() == enumerate_tlts(n).size());
        auto all = enumerate_permutations(n);
        CHECK(image == std::set<Permutation>(all.begin(), all.end()));
    }
}

TEST_CASE("phi_inverse on the documented examples") {
    CHECK(phi_inverse(Permutation({1})) == size_one_tlt());
    CHECK(phi_inverse(Permutation::parse("3 1 2")) == kThree);
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_tlts(n)) CHECK(phi_inverse(phi(t)) == t);
}

TEST_CASE("phi restricts to a bijection between Baxter tableaux and the family") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_tlts(n)) CHECK(is_baxter(t) == in_B(phi(t)));
}

TEST_CASE("permutation statistics") {
    Permutation id = Permutation::parse("1 2 3 4 5");
    CHECK(ascents(id) == std::set<int>{1, 2, 3, 4});
    CHECK(descents(id).empty());
    CHECK(left_to_right_minima(id) == std::set<int>{1});

    CHECK(is_alternating_up(Permutation::parse("2 9 1 4 3 8 6 7 5 10")));
    CHECK_FALSE(is_alternating_up(Permutation::parse("2 1")));

    std::set<Permutation> alt;
    for (const Permutation& p : enumerate_permutations(4))
        if (in_B(p) && is_alternating_up(p)) alt.insert(p);
    CHECK(alt == std::set<Permutation>{Permutation::parse("1 3 2 4"), Permutation::parse("1 4 2 3"),
                                       Permutation::parse("2 3 1 4"),
                                       Permutation::parse("2 4 1 3")});
}

TEST_CASE("crossings pair with 2+-1-2 occurrences carrying iso and ins values") {
    CHECK(crossing_pattern_correspondence(size_one_tlt()).empty());

    auto matches = crossing_pattern_correspondence(kThree);
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].crossing == Cell{2, 2});
    CHECK(matches[0].iso_value == 1);
    CHECK(matches[0].ins_value == 3);
    CHECK(matches[0].occurrence.indices == std::vector<int>{1, 2, 3});

    TreeLikeTableau t12 = phi_inverse(kSigma12);
    auto m12 = crossing_pattern_correspondence(t12);
    CHECK(m12.size() == 7);
    CHECK(crossings(t12).size() == 7);

    for (int n = 1; n <= 7; ++n)
        for (const auto& t : enumerate_tlts(n)) {
            auto ms = crossing_pattern_correspondence(t);
            auto occs = occurrences(phi(t), parse_pattern("2+-1-2"));
            std::set<Occurrence> from_crossings;
            for (const auto& m : ms) from_crossings.insert(m.occurrence);
            CHECK(from_crossings == std::set<Occurrence>(occs.begin(), occs.end()));
            CHECK(ms.size() == crossings(t).size());
        }
}

TEST_CASE("splitting phi around the value 1 mirrors both blocks at small sizes") {
    // Holds exhaustively for n <= 4 (and the left factor through n = 5);
    // counterexamples exist beyond that, pinned below.
    for (int n = 3; n <= 4; ++n)
        for (const auto& t : enumerate_baxter_tlts(n)) {
            Decomposition d = decompose(t);
            if (!d.left || !d.right) continue;
            Permutation sigma = phi(t);
            int pos1 = sigma.position_of(1);
            std::vector<int> left_pos, right_pos;
            for (int i = 1; i < pos1; ++i) left_pos.push_back(i);
            for (int i = pos1 + 1; i <= n; ++i) right_pos.push_back(i);
            CHECK(pattern_of_positions(sigma, left_pos) == phi(*d.left));
            CHECK(pattern_of_positions(sigma, right_pos) == phi(*d.right));
        }
}

TEST_CASE("the value-1 split factors can differ from the blocks' own images") {
    // A ribbon removed with a left-subtree point can run through the other
    // block, reordering its inherited labels relative to its own removal
    // order. Right factor: 213 vs the block's own 312.
    TreeLikeTableau t5 = tlt({3, 3, 3}, {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 1}});
    REQUIRE(is_baxter(t5));
    Permutation sigma5 = phi(t5);
    CHECK(sigma5 == Permutation::parse("5 1 3 2 4"));
    Decomposition d5 = decompose(t5);
    REQUIRE(d5.right.has_value());
    CHECK(phi(*d5.right) == Permutation::parse("3 1 2"));
    CHECK(pattern_of_positions(sigma5, {3, 4, 5}) == Permutation::parse("2 1 3"));

    // Left factor: 4312 vs the block's own 4213.
    TreeLikeTableau t6 =
        tlt({3, 3, 3, 3}, {{1, 1}, {1, 3}, {2, 1}, {2, 2}, {3, 1}, {4, 1}});
    REQUIRE(is_baxter(t6));
    Permutation sigma6 = phi(t6);
    CHECK(sigma6 == Permutation::parse("6 4 2 3 1 5"));
    Decomposition d6 = decompose(t6);
    REQUIRE(d6.left.has_value());
    CHECK(phi(*d6.left) == Permutation::parse("4 2 1 3"));
    CHECK(pattern_of_positions(sigma6, {1, 2, 3, 4}) == Permutation::parse("4 3 1 2"));

    // The left-to-right-minima identity survives on both counterexamples.
    RemovalTrace tr5 = removal_trace(t5), tr6 = removal_trace(t6);
    std::set<int> col1_5, col1_6;
    for (Cell p : t5.points())
        if (p.col == 1) col1_5.insert(tr5.point_labels.at(p));
    for (Cell p : t6.points())
        if (p.col == 1) col1_6.insert(tr6.point_labels.at(p));
    CHECK(left_to_right_minima(sigma5) == col1_5);
    CHECK(left_to_right_minima(sigma6) == col1_6);
}
