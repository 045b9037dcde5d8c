#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "baxter/nilp.hpp"
#include "baxter/permutation.hpp"

namespace baxter {

BigInt baxter_number(int n);  // Bax_n, exact
BigInt catalan(int n);        // C_n, exact

// Named integer sequence with computed values.
struct SequenceTable {
    std::string name;
    std::map<int, BigInt> values;
};

SequenceTable baxter_sequence(int max_n);
SequenceTable catalan_sequence(int max_n);

struct CheckResult {
    std::string check;
    int n = 0;
    bool pass = false;
    std::string witness;       // serialized counterexample or note, empty when passing
    bool experimental = false; // conjecture experiments are reported, never asserted
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

// Runs every cross-check of the acceptance suite up to the given size;
// deterministic and pure.
VerificationReport verify_all(int max_size);

// Patterns at the odd and even positions of an alternating member of B_n.
std::pair<Permutation, Permutation> conjecture_split(const Permutation& p);

// For each alternating-up member of B_n checks the split avoidances and
// reports whether the split map is injective/bijective into
// Av(312) x Av(231). Reported as an experiment, never asserted.
std::vector<CheckResult> conjecture_experiment(int n);

} // namespace baxter
