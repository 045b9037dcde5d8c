#pragma once

#include <set>
#include <string>
#include <vector>

#include "baxter/errors.hpp"

namespace baxter {

// One-line permutation of {1..n}.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);

    int size() const { return static_cast<int>(values_.size()); }
    int operator()(int pos) const { return values_[pos - 1]; }  // 1-indexed
    const std::vector<int>& values() const { return values_; }

    Permutation inverse() const;
    int position_of(int value) const;  // 1-indexed

    std::string text() const;                    // "6 3 2 10 ..."
    static Permutation parse(const std::string&);

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

std::set<int> ascents(const Permutation& p);   // positions i with p(i) < p(i+1)
std::set<int> descents(const Permutation& p);  // positions i with p(i) > p(i+1)
std::set<int> left_to_right_minima(const Permutation& p);  // values
bool is_alternating_up(const Permutation& p);  // p(1) < p(2) > p(3) < ...

std::vector<Permutation> enumerate_permutations(int n);

// Pattern of the entries at the given 1-based positions (order-isomorphic
// renormalization to {1..m}).
Permutation pattern_of_positions(const Permutation& p, const std::vector<int>& positions);

} // namespace baxter
