#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rbfc/truth_table.hpp"

namespace rbfc {

// Walsh spectrum of an n-variable function: values[w] = W_f(w) with the
// point w encoded like a truth-table index.
struct WalshSpectrum {
    int n = 0;
    std::vector<int64_t> values;

    int64_t max_abs() const;
};

// In-place butterfly transform, O(n * 2^n). Bit-exact and deterministic.
WalshSpectrum fast_walsh(const TruthTable& f);

// Direct-summation oracle, O(4^n); refuses n > 14.
WalshSpectrum naive_walsh(const TruthTable& f);

// W_f at selected points only, each by direct summation.
std::map<uint64_t, int64_t> restricted_walsh(const TruthTable& f,
                                             const std::vector<uint64_t>& masks);

// 2^{n-1} - max|W|/2
int64_t nonlinearity(const WalshSpectrum& s);

// Largest m with W(w)=0 for all wt(w) <= m; -1 when W(0) != 0.
int resiliency_order(const WalshSpectrum& s);

// sum W^2 == 2^{2n}, accumulated in 128 bits.
bool parseval_check(const WalshSpectrum& s);

// Concatenation: 2^q blocks on p variables; output index (b*2^p + i) takes
// blocks[b] bit i, so the high-order index bits select the block.
TruthTable concatenate(const std::vector<TruthTable>& blocks);

} // namespace rbfc
