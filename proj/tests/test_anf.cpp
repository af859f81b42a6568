#include <random>

#include "doctest.h"
#include "rbfc/anf.hpp"
#include "test_util.hpp"

using namespace rbfc;
using test::random_table;
using test::tt_from_bits;

TEST_CASE("anf of fixed functions") {
    AnfForm zero = anf(TruthTable::constant(3, false));
    CHECK(zero.degree() == -1);
    CHECK(zero.coefficients.weight() == 0);
    CHECK(zero.to_string() == "0");

    // x1*x2 ^ x3: coefficients exactly at u=011 (3) and u=100 (4)
    TruthTable f(3);
    for (uint64_t x = 0; x < 8; ++x) f.set(x, ((x & 1) & ((x >> 1) & 1)) ^ ((x >> 2) & 1));
    AnfForm a = anf(f);
    CHECK(a.coefficients.get(3));
    CHECK(a.coefficients.get(4));
    CHECK(a.coefficients.weight() == 2);
    CHECK(a.degree() == 2);
    CHECK(a.to_string() == "x1*x2 + x3");

    CHECK(anf(TruthTable::constant(2, true)).to_string() == "1");
    CHECK(anf(TruthTable::linear(2, 3)).degree() == 1);
}

TEST_CASE("moebius transform is an involution") {
    std::mt19937_64 rng(29);
    for (int n = 1; n <= 10; ++n) {
        TruthTable t = random_table(n, rng);
        CHECK(anf_to_table(anf(t)) == t);
    }
}

TEST_CASE("degree of products") {
    TruthTable f(4);
    for (uint64_t x = 0; x < 16; ++x)
        f.set(x, ((x & 1) & ((x >> 1) & 1)) ^ (((x >> 2) & 1) & ((x >> 3) & 1)));
    CHECK(anf(f).degree() == 2);
}
