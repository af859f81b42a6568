#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rbfc/seeds.hpp"

namespace rbfc {

// Exhaustive scan over all 2^{2^n} truth tables, n <= 4. Returns records
// declaring the queried profile, suitable as seed-function input.
struct SearchQuery {
    int n = 4;
    int min_resiliency = 0;
    int64_t nonlinearity = 0;     // exact
    std::optional<int> degree;    // exact when given
    size_t limit = 1;
};

std::vector<SeedRecord> search_functions(const SearchQuery& q);

} // namespace rbfc
