#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rbfc {

// Capacity knobs, overridable through the environment:
//   RBFC_MAX_N       - largest variable count for truth tables (default 30)
//   RBFC_MAX_FULL_N  - largest n for full-spectrum / full-ANF transforms
//                      (default 26; a full int64 spectrum is 8*2^n bytes)
int table_capacity();
int transform_capacity();

// Truth table of an n-variable Boolean function, bit-packed.
// Bit i holds f(x) for the input whose j-th variable x_{j+1} is bit j of i,
// i.e. x_1 is the least significant index bit.
class TruthTable {
public:
    TruthTable() = default;
    explicit TruthTable(int n);

    int n = 0;

    bool get(uint64_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(uint64_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(uint64_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    uint64_t size() const { return uint64_t(1) << n; }
    uint64_t weight() const; // number of ones

    bool operator==(const TruthTable& rhs) const = default;

    std::vector<uint64_t>& words() { return words_; }
    const std::vector<uint64_t>& words() const { return words_; }

    // Line 1 "n=<int>", line 2 lowercase hex, ceil(2^n/4) digits; within a
    // digit, table index 4j is the most significant bit.
    std::string to_hex() const;
    static TruthTable from_hex(int n, const std::string& hex);

    void write(std::ostream& os) const;
    static TruthTable read(std::istream& is);
    static TruthTable read_file(const std::string& path);
    void write_file(const std::string& path) const;

    // f(x) = parity(mask & x) for masks over the n variables.
    static TruthTable linear(int n, uint64_t mask);
    static TruthTable constant(int n, bool value);

private:
    std::vector<uint64_t> words_;
};

int popcount64(uint64_t v);
bool parity64(uint64_t v);

} // namespace rbfc
