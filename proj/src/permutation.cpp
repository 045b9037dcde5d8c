#include "baxter/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace baxter {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<char> seen(values_.size() + 1, 0);
    for (int v : values_) {
        require(v >= 1 && v <= static_cast<int>(values_.size()), Err::NotAPermutation,
                "value out of range: " + std::to_string(v));
        require(!seen[v], Err::NotAPermutation, "repeated value: " + std::to_string(v));
        seen[v] = 1;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 1; i <= size(); ++i) inv[values_[i - 1] - 1] = i;
    return Permutation(inv);
}

int Permutation::position_of(int value) const {
    for (int i = 1; i <= size(); ++i)
        if (values_[i - 1] == value) return i;
    fail(Err::NotAPermutation, "value not present: " + std::to_string(value));
}

std::string Permutation::text() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

Permutation Permutation::parse(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> vals;
    int v;
    while (in >> v) vals.push_back(v);
    require(in.eof(), Err::SyntaxError, "permutation text must be whitespace-separated integers");
    require(!vals.empty(), Err::SyntaxError, "empty permutation text");
    return Permutation(vals);
}

std::set<int> ascents(const Permutation& p) {
    std::set<int> out;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) < p(i + 1)) out.insert(i);
    return out;
}

std::set<int> descents(const Permutation& p) {
    std::set<int> out;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) out.insert(i);
    return out;
}

std::set<int> left_to_right_minima(const Permutation& p) {
    std::set<int> out;
    int best = p.size() + 1;
    for (int i = 1; i <= p.size(); ++i) {
        if (p(i) < best) {
            best = p(i);
            out.insert(p(i));
        }
    }
    return out;
}

bool is_alternating_up(const Permutation& p) {
    for (int i = 1; i < p.size(); ++i) {
        if (i % 2 == 1 && p(i) >= p(i + 1)) return false;
        if (i % 2 == 0 && p(i) <= p(i + 1)) return false;
    }
    return true;
}

std::vector<Permutation> enumerate_permutations(int n) {
    require(n >= 1, Err::PreconditionViolated, "size must be at least 1");
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(vals));
    } while (std::next_permutation(vals.begin(), vals.end()));
    return out;
}

Permutation pattern_of_positions(const Permutation& p, const std::vector<int>& positions) {
    std::vector<int> picked;
    for (int pos : positions) picked.push_back(p(pos));
    std::vector<int> sorted = picked;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> out;
    for (int v : picked)
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                       sorted.begin()) +
                      1);
    return Permutation(out);
}

} // namespace baxter
