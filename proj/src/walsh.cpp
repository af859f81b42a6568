#include "rbfc/walsh.hpp"

#include <algorithm>
#include <cstdlib>

#include "rbfc/errors.hpp"

namespace rbfc {

using u128 = unsigned __int128;

int64_t WalshSpectrum::max_abs() const {
    int64_t best = 0;
    for (int64_t v : values) best = std::max(best, v < 0 ? -v : v);
    return best;
}

WalshSpectrum fast_walsh(const TruthTable& f) {
    if (f.n > transform_capacity())
        throw capacity_error("full spectrum needs n <= " + std::to_string(transform_capacity()) +
                             " (set RBFC_MAX_FULL_N to override)");
    WalshSpectrum s;
    s.n = f.n;
    uint64_t size = f.size();
    s.values.resize(size);
    for (uint64_t i = 0; i < size; ++i) s.values[i] = f.get(i) ? -1 : 1;
    for (uint64_t len = 1; len < size; len <<= 1) {
        for (uint64_t base = 0; base < size; base += len << 1) {
            for (uint64_t i = base; i < base + len; ++i) {
                int64_t a = s.values[i];
                int64_t b = s.values[i + len];
                s.values[i] = a + b;
                s.values[i + len] = a - b;
            }
        }
    }
    return s;
}

WalshSpectrum naive_walsh(const TruthTable& f) {
    if (f.n > 14) throw capacity_error("naive_walsh is O(4^n), refusing n > 14");
    WalshSpectrum s;
    s.n = f.n;
    uint64_t size = f.size();
    s.values.resize(size);
    std::vector<int8_t> sign(size);
    for (uint64_t x = 0; x < size; ++x) sign[x] = f.get(x) ? -1 : 1;
    for (uint64_t w = 0; w < size; ++w) {
        int64_t acc = 0;
        for (uint64_t x = 0; x < size; ++x)
            acc += parity64(w & x) ? -sign[x] : sign[x];
        s.values[w] = acc;
    }
    return s;
}

std::map<uint64_t, int64_t> restricted_walsh(const TruthTable& f,
                                             const std::vector<uint64_t>& masks) {
    std::map<uint64_t, int64_t> out;
    uint64_t size = f.size();
    for (uint64_t w : masks) {
        int64_t acc = 0;
        for (uint64_t x = 0; x < size; ++x) {
            bool bit = f.get(x) ^ parity64(w & x);
            acc += bit ? -1 : 1;
        }
        out[w] = acc;
    }
    return out;
}

int64_t nonlinearity(const WalshSpectrum& s) {
    return (int64_t(1) << (s.n - 1)) - s.max_abs() / 2;
}

int resiliency_order(const WalshSpectrum& s) {
    int min_weight = s.n + 1;
    for (uint64_t w = 0; w < s.values.size(); ++w) {
        if (s.values[w] != 0) min_weight = std::min(min_weight, popcount64(w));
    }
    return min_weight - 1;
}

bool parseval_check(const WalshSpectrum& s) {
    u128 acc = 0;
    for (int64_t v : s.values) {
        acc += u128(v < 0 ? -v : v) * u128(v < 0 ? -v : v);
    }
    return acc == u128(1) << (2 * s.n);
}

TruthTable concatenate(const std::vector<TruthTable>& blocks) {
    if (blocks.empty()) throw verification_error("concatenate: no blocks");
    int p = blocks[0].n;
    int q = 0;
    while ((uint64_t(1) << q) < blocks.size()) ++q;
    if ((uint64_t(1) << q) != blocks.size())
        throw verification_error("concatenate: block count must be a power of two");
    for (const auto& b : blocks)
        if (b.n != p) throw verification_error("concatenate: blocks differ in variable count");
    if (p + q > table_capacity())
        throw capacity_error("concatenate: p+q exceeds table capacity");
    TruthTable out(p + q);
    uint64_t words_per_block = (uint64_t(1) << p) / 64;
    for (uint64_t b = 0; b < blocks.size(); ++b) {
        if (words_per_block == 0) {
            for (uint64_t i = 0; i < blocks[b].size(); ++i)
                out.set((b << p) | i, blocks[b].get(i));
        } else {
            std::copy(blocks[b].words().begin(), blocks[b].words().end(),
                      out.words().begin() + b * words_per_block);
        }
    }
    return out;
}

} // namespace rbfc
