#pragma once

#include <vector>

#include "rbfc/bigint.hpp"

namespace rbfc {

// One selectable component family, described by counting data only so the
// solver works far beyond materializable sizes.
struct FamilyOption {
    int k = 0;
    int e = 0;
    BigUint size;
    // Contribution to the max-|W| bound when selected, on the Walsh scale.
    BigUint walsh_penalty;
    bool forced = false;
};

struct SelectorResult {
    std::vector<int> selected_k; // ascending, forced included
    BigUint covered;             // total member count over selected families
    BigUint walsh_penalty;       // sum of selected penalties
};

// Chooses the selector vector covering `deficit` blocks while minimizing the
// added spectral penalty. Forced options are always taken; the optional ones
// must have strictly decreasing power-of-two penalties in ascending k order,
// for which the greedy lexicographic scan is exact. Throws infeasible_error
// when even the full selection cannot cover the deficit.
SelectorResult solve_selector(const BigUint& deficit, std::vector<FamilyOption> options);

} // namespace rbfc
