#include "baxter/patterns.hpp"

#include <algorithm>

namespace baxter {

BivincularPattern parse_pattern(const std::string& text) {
    struct Entry {
        int digit;
        bool plus;
    };
    std::vector<Entry> entries;
    std::vector<std::pair<int, int>> pos_adjacent;
    bool expecting_entry = true;
    for (size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch >= '1' && ch <= '9') {
            bool plus = i + 1 < text.size() && text[i + 1] == '+';
            if (plus) ++i;
            if (!expecting_entry) {
                // juxtaposed with the previous entry: position-adjacent
                int j = static_cast<int>(entries.size());
                pos_adjacent.emplace_back(j, j + 1);
            }
            entries.push_back({ch - '0', plus});
            expecting_entry = false;
        } else if (ch == '-') {
            require(!expecting_entry, Err::SyntaxError, "dash needs an entry before it");
            expecting_entry = true;
        } else {
            fail(Err::SyntaxError, std::string("unexpected character '") + ch + "'");
        }
    }
    require(!entries.empty() && !expecting_entry, Err::SyntaxError, "pattern ends mid-entry");

    int plus_count = 0, k = 0;
    for (const Entry& e : entries)
        if (e.plus) ++plus_count, k = e.digit;
    require(plus_count <= 1, Err::SyntaxError, "at most one '+' entry");

    std::vector<int> base_values;
    for (const Entry& e : entries) {
        if (e.plus)
            base_values.push_back(e.digit + 1);
        else if (plus_count && e.digit > k)
            base_values.push_back(e.digit + 1);
        else
            base_values.push_back(e.digit);
    }
    BivincularPattern p;
    try {
        p.base = Permutation(base_values);
    } catch (const BaxterError&) {
        fail(Err::NotAPermutation, "entries do not form a permutation: " + text);
    }
    p.position_adjacent = std::move(pos_adjacent);
    if (plus_count) p.value_adjacent.emplace_back(k, k + 1);
    return p;
}

namespace {

struct Matcher {
    const Permutation& host;
    const BivincularPattern& pat;
    std::vector<char> pos_adj;  // pos_adj[j]: pattern positions j, j+1 adjacent
    std::vector<Occurrence>& out;
    std::vector<int> chosen;

    Matcher(const Permutation& h, const BivincularPattern& p, std::vector<Occurrence>& o)
        : host(h), pat(p), out(o) {
        pos_adj.assign(pat.base.size() + 1, 0);
        for (auto [a, b] : pat.position_adjacent) {
            require(a >= 1 && b == a + 1 && b <= pat.base.size(), Err::InvalidObject,
                    "position adjacency out of range");
            pos_adj[a] = 1;
        }
    }

    bool order_ok(int slot, int host_value) const {
        for (int j = 1; j < slot; ++j) {
            bool pat_lt = pat.base(j) < pat.base(slot);
            bool host_lt = host(chosen[j - 1]) < host_value;
            if (pat_lt != host_lt) return false;
        }
        return true;
    }

    void search(int slot, int min_index) {
        int m = pat.base.size();
        if (slot > m) {
            for (auto [v, w] : pat.value_adjacent) {
                int hv = host(chosen[pat.base.position_of(v) - 1]);
                int hw = host(chosen[pat.base.position_of(w) - 1]);
                if (hw != hv + 1) return;
            }
            out.push_back({chosen});
            return;
        }
        int last = slot > 1 ? chosen[slot - 2] : 0;
        int lo = slot > 1 && pos_adj[slot - 1] ? last + 1 : min_index;
        int hi = slot > 1 && pos_adj[slot - 1] ? last + 1 : host.size() - (m - slot);
        for (int idx = lo; idx <= hi && idx <= host.size(); ++idx) {
            if (!order_ok(slot, host(idx))) continue;
            chosen.push_back(idx);
            search(slot + 1, idx + 1);
            chosen.pop_back();
        }
    }
};

} // namespace

std::vector<Occurrence> occurrences(const Permutation& host, const BivincularPattern& p) {
    std::vector<Occurrence> out;
    if (p.base.size() > host.size()) return out;
    Matcher m(host, p, out);
    m.search(1, 1);
    std::sort(out.begin(), out.end());
    return out;
}

bool avoids(const Permutation& host, const BivincularPattern& p) {
    return occurrences(host, p).empty();
}

bool avoids(const Permutation& host, const std::string& pattern_text) {
    return avoids(host, parse_pattern(pattern_text));
}

bool in_B(const Permutation& p) {
    static const BivincularPattern a = parse_pattern("3-14-2");
    static const BivincularPattern b = parse_pattern("3-41-2");
    return avoids(p, a) && avoids(p, b);
}

} // namespace baxter
