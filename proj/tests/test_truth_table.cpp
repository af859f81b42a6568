#include <random>
#include <sstream>

#include "doctest.h"
#include "rbfc/errors.hpp"
#include "rbfc/truth_table.hpp"
#include "test_util.hpp"

using namespace rbfc;
using test::random_table;
using test::tt_from_bits;

TEST_CASE("hex encoding: index 4j is the high bit of digit j") {
    // x1 on two variables: bits 0,1,0,1 -> digit 0101 = 5
    CHECK(TruthTable::linear(2, 1).to_hex() == "5");
    // x1^x2^x3: bits 01101001 -> digits 0110, 1001
    CHECK(TruthTable::linear(3, 7).to_hex() == "69");
    CHECK(TruthTable::constant(2, false).to_hex() == "0");
    CHECK(TruthTable::constant(2, true).to_hex() == "f");
    // n=1: two real bits padded with zeros
    CHECK(tt_from_bits(1, {0, 1}).to_hex() == "4");
}

TEST_CASE("hex round trip") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 10; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            TruthTable t = random_table(n, rng);
            CHECK(TruthTable::from_hex(n, t.to_hex()) == t);
        }
    }
}

TEST_CASE("file io round trip") {
    TruthTable t = TruthTable::linear(3, 7);
    std::stringstream ss;
    t.write(ss);
    CHECK(ss.str() == "n=3\n69\n");
    TruthTable back = TruthTable::read(ss);
    CHECK(back == t);
}

TEST_CASE("parse failures") {
    std::stringstream empty;
    CHECK_THROWS_AS(TruthTable::read(empty), Error);
    std::stringstream no_hex("n=3\n");
    CHECK_THROWS_AS(TruthTable::read(no_hex), Error);
    std::stringstream bad_header("m=3\n69\n");
    CHECK_THROWS_AS(TruthTable::read(bad_header), Error);
    CHECK_THROWS_AS(TruthTable::from_hex(3, "6"), Error);
    CHECK_THROWS_AS(TruthTable::from_hex(3, "6X"), Error);
    CHECK_THROWS_AS(TruthTable::from_hex(1, "1"), Error); // nonzero padding
}

TEST_CASE("capacity limits") {
    CHECK_THROWS_AS(TruthTable(0), Error);
    CHECK_THROWS_AS(TruthTable(31), Error);
}

TEST_CASE("weight and linear generator") {
    CHECK(TruthTable::linear(4, 0b1001).weight() == 8);
    CHECK(TruthTable::constant(4, true).weight() == 16);
}
