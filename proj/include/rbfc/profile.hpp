#pragma once

#include <cstdint>

#include "rbfc/truth_table.hpp"

namespace rbfc {

// Exhaustively measured (n, m, d, N) profile of a function.
struct FunctionProfile {
    int n = 0;
    int resiliency = -1; // -1: neither balanced nor correlation-immune
    int degree = -1;
    int64_t nonlinearity = 0;
    bool balanced = false;
    bool almost_optimal = false;
};

FunctionProfile profile(const TruthTable& f);

// Definition check: n even, n >= 4, 2^{n-1}-2^{n/2} <= N < 2^{n-1}-2^{n/2-1}.
bool is_almost_optimal(int n, int64_t nl);

} // namespace rbfc
