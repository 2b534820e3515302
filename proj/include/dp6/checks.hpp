#pragma once

// The verification registry behind `dp6 verify` and the acceptance suite:
// every module invariant as a named check with a pass/fail result.  Test
// oracles that must stay independent of the implementation path they check
// (the hyperdeterminant slice discriminant, brute-force tables) live here,
// not in the implementation modules.

#include <cstdint>
#include <string>
#include <vector>

#include "dp6/classify.hpp"
#include "dp6/surface.hpp"

namespace dp6::checks {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // empty on pass, first failure otherwise
};

struct Options {
    bool quick = false;             // divide random-sample counts by 10
    std::uint64_t seed = 20260809;  // DP6_SEED overrides
    bool corrupt_inventory = false; // fault injection for the negative path
};

std::vector<CheckResult> run_all(const Options& opts);
bool all_pass(const std::vector<CheckResult>& results);

// Independent oracle for the Cayley hyperdeterminant: the discriminant of
// det(x A0 + y A1) where A0, A1 are the two slices along `axis`.
Rat slice_discriminant(const classify::Tensor222& t, int axis);

// The deliberately corrupted type-4 inventory used by the fault-injection
// path (an extra bogus curve class that breaks the Ext pattern).
surface::CurveInventory corrupted_inventory();

}  // namespace dp6::checks
