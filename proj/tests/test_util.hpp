#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "rbfc/truth_table.hpp"

namespace rbfc::test {

inline TruthTable tt_from_bits(int n, std::initializer_list<int> bits) {
    TruthTable t(n);
    uint64_t i = 0;
    for (int b : bits) t.set(i++, b != 0);
    return t;
}

inline TruthTable random_table(int n, std::mt19937_64& rng) {
    TruthTable t(n);
    for (auto& w : t.words()) w = rng();
    if (n < 6) t.words()[0] &= (uint64_t(1) << (uint64_t(1) << n)) - 1;
    return t;
}

} // namespace rbfc::test
