#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rbfc {

// Unsigned big integer, little-endian 64-bit limbs. Covers the counting
// arithmetic (binomial sums, 2^n deficits, nonlinearity bounds) which
// overflows 64 bits well before the interesting parameter ranges end.
class BigUint {
public:
    BigUint() = default;
    explicit BigUint(uint64_t v);

    static BigUint pow2(unsigned e);
    static BigUint binomial(unsigned n, unsigned k);
    // sum_{j=lo..hi} C(n, j); empty when lo > hi.
    static BigUint binomial_sum(unsigned n, unsigned lo, unsigned hi);

    BigUint& operator+=(const BigUint& rhs);
    BigUint& operator-=(const BigUint& rhs); // requires *this >= rhs
    BigUint operator+(const BigUint& rhs) const;
    BigUint operator-(const BigUint& rhs) const;

    BigUint& mul_u32(uint32_t v);
    BigUint& div_u32(uint32_t v); // exact or truncating division

    std::strong_ordering operator<=>(const BigUint& rhs) const;
    bool operator==(const BigUint& rhs) const;

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 1; }
    uint64_t to_u64() const; // asserts fits_u64()

    unsigned bit_length() const; // 0 for zero
    bool test_bit(unsigned i) const;

    std::string to_string() const; // decimal

private:
    void trim();
    std::vector<uint64_t> limbs_;
};

} // namespace rbfc
