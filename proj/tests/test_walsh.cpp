#include <random>

#include "doctest.h"
#include "rbfc/errors.hpp"
#include "rbfc/profile.hpp"
#include "rbfc/walsh.hpp"
#include "test_util.hpp"

using namespace rbfc;
using test::random_table;
using test::tt_from_bits;

TEST_CASE("fast_walsh on fixed functions") {
    auto s0 = fast_walsh(TruthTable::constant(2, false));
    CHECK(s0.values == std::vector<int64_t>{4, 0, 0, 0});
    auto s1 = fast_walsh(TruthTable::linear(2, 1)); // x1
    CHECK(s1.values == std::vector<int64_t>{0, 4, 0, 0});
    auto s2 = fast_walsh(tt_from_bits(2, {0, 0, 0, 1})); // x1*x2
    CHECK(s2.values == std::vector<int64_t>{2, 2, 2, -2});
    auto s3 = fast_walsh(TruthTable::linear(2, 3)); // x1^x2
    CHECK(s3.values == std::vector<int64_t>{0, 0, 0, 4});
}

TEST_CASE("full transforms respect the capacity bound") {
    TruthTable big(27); // tables up to 30 are fine, full spectra are not
    CHECK_THROWS_AS(fast_walsh(big), Error);
}

TEST_CASE("naive oracle equivalence") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 10; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            TruthTable t = random_table(n, rng);
            CHECK(fast_walsh(t).values == naive_walsh(t).values);
        }
    }
    CHECK_THROWS_AS(naive_walsh(TruthTable(15)), Error);
}

TEST_CASE("butterfly involution scales by 2^n") {
    std::mt19937_64 rng(13);
    for (int n = 2; n <= 8; n += 2) {
        TruthTable t = random_table(n, rng);
        WalshSpectrum s = fast_walsh(t);
        // Re-run the butterfly on the spectrum by hand.
        std::vector<int64_t> v = s.values;
        for (uint64_t len = 1; len < v.size(); len <<= 1)
            for (uint64_t base = 0; base < v.size(); base += len << 1)
                for (uint64_t i = base; i < base + len; ++i) {
                    int64_t a = v[i], b = v[i + len];
                    v[i] = a + b;
                    v[i + len] = a - b;
                }
        for (uint64_t x = 0; x < t.size(); ++x)
            CHECK(v[x] == (int64_t(1) << n) * (t.get(x) ? -1 : 1));
    }
}

TEST_CASE("parseval and value ranges") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        WalshSpectrum s = fast_walsh(random_table(8, rng));
        CHECK(parseval_check(s));
        for (int64_t v : s.values) {
            CHECK(v % 2 == 0);
            CHECK(std::abs(v) <= 256);
        }
    }
    WalshSpectrum bogus;
    bogus.n = 2;
    bogus.values = {4, 0, 0, 2};
    CHECK(!parseval_check(bogus));
    auto sq = fast_walsh(tt_from_bits(2, {0, 0, 0, 1}));
    CHECK(parseval_check(sq)); // 4+4+4+4 = 16
}

TEST_CASE("restricted walsh") {
    TruthTable parity3 = TruthTable::linear(3, 7);
    std::vector<uint64_t> low_weight;
    for (uint64_t w = 0; w < 8; ++w)
        if (popcount64(w) <= 2) low_weight.push_back(w);
    for (auto& [w, v] : restricted_walsh(parity3, low_weight)) CHECK(v == 0);

    auto z = restricted_walsh(TruthTable::constant(3, false), {0});
    CHECK(z[0] == 8);
    auto q = restricted_walsh(tt_from_bits(2, {0, 0, 0, 1}), {0});
    CHECK(q[0] == 2);

    std::mt19937_64 rng(19);
    TruthTable t = random_table(6, rng);
    WalshSpectrum full = fast_walsh(t);
    for (auto& [w, v] : restricted_walsh(t, {0, 5, 21, 63})) CHECK(v == full.values[w]);
}

TEST_CASE("nonlinearity and resiliency") {
    CHECK(nonlinearity(fast_walsh(TruthTable::constant(2, false))) == 0);
    CHECK(nonlinearity(fast_walsh(tt_from_bits(2, {0, 0, 0, 1}))) == 1);
    // x1x2 ^ x3x4 is bent on 4 variables: N = 2^3 - 2^1 = 6 (checked against
    // the naive oracle).
    TruthTable bent4(4);
    for (uint64_t x = 0; x < 16; ++x)
        bent4.set(x, ((x & 1) & ((x >> 1) & 1)) ^ (((x >> 2) & 1) & ((x >> 3) & 1)));
    CHECK(nonlinearity(naive_walsh(bent4)) == 6);

    CHECK(resiliency_order(fast_walsh(TruthTable::linear(3, 7))) == 2);
    CHECK(resiliency_order(fast_walsh(TruthTable::constant(2, true))) == -1);
    CHECK(resiliency_order(fast_walsh(tt_from_bits(2, {0, 0, 0, 1}))) == -1);
}

TEST_CASE("concatenation layout and spectra") {
    // blocks [0-function, 1-function] on p=1 give f(y1, x1) = y1
    TruthTable f = concatenate({TruthTable::constant(1, false), TruthTable::constant(1, true)});
    CHECK(f == tt_from_bits(2, {0, 0, 1, 1}));

    // the four linear functions on two variables concatenate to a bent function
    std::vector<TruthTable> blocks;
    for (uint64_t c = 0; c < 4; ++c) blocks.push_back(TruthTable::linear(2, c));
    TruthTable mm = concatenate(blocks);
    CHECK(nonlinearity(naive_walsh(mm)) == 6);

    // all blocks m-resilient => concatenation m-resilient
    std::vector<TruthTable> res_blocks;
    for (uint64_t c : {3ull, 5ull, 6ull, 7ull}) res_blocks.push_back(TruthTable::linear(3, c));
    CHECK(resiliency_order(fast_walsh(concatenate(res_blocks))) >= 1);

    CHECK_THROWS_AS(concatenate({TruthTable(2), TruthTable(3)}), Error);
    CHECK_THROWS_AS(concatenate({TruthTable(2), TruthTable(2), TruthTable(2)}), Error);
}

TEST_CASE("concatenation spectral identity") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 5; ++rep) {
        int p = 1 + int(rng() % 4), q = 1 + int(rng() % 4);
        std::vector<TruthTable> blocks;
        std::vector<WalshSpectrum> specs;
        for (uint64_t b = 0; b < (uint64_t(1) << q); ++b) {
            blocks.push_back(random_table(p, rng));
            specs.push_back(fast_walsh(blocks.back()));
        }
        WalshSpectrum whole = fast_walsh(concatenate(blocks));
        for (uint64_t beta = 0; beta < (uint64_t(1) << q); ++beta)
            for (uint64_t alpha = 0; alpha < (uint64_t(1) << p); ++alpha) {
                int64_t acc = 0;
                for (uint64_t b = 0; b < blocks.size(); ++b)
                    acc += parity64(beta & b) ? -specs[b].values[alpha] : specs[b].values[alpha];
                CHECK(whole.values[(beta << p) | alpha] == acc);
            }
    }
}
