#include "rbfc/truth_table.hpp"

#include <bit>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rbfc/errors.hpp"

namespace rbfc {

int popcount64(uint64_t v) { return std::popcount(v); }
bool parity64(uint64_t v) { return std::popcount(v) & 1; }

namespace {

int env_capacity(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end == v || *end || parsed < 1 || parsed > 40) return fallback;
    return int(parsed);
}

} // namespace

int table_capacity() {
    static int cap = env_capacity("RBFC_MAX_N", 30);
    return cap;
}

int transform_capacity() {
    static int cap = env_capacity("RBFC_MAX_FULL_N", 26);
    return std::min(cap, table_capacity());
}

TruthTable::TruthTable(int n_) : n(n_) {
    if (n < 1) throw capacity_error("truth table needs n >= 1");
    if (n > table_capacity())
        throw capacity_error("n=" + std::to_string(n) + " exceeds table capacity " +
                             std::to_string(table_capacity()));
    words_.assign((size() + 63) / 64, 0);
}

uint64_t TruthTable::weight() const {
    uint64_t w = 0;
    for (uint64_t word : words_) w += uint64_t(std::popcount(word));
    return w;
}

TruthTable TruthTable::linear(int n, uint64_t mask) {
    TruthTable t(n);
    for (uint64_t x = 0; x < t.size(); ++x)
        if (parity64(mask & x)) t.set(x, true);
    return t;
}

TruthTable TruthTable::constant(int n, bool value) {
    TruthTable t(n);
    if (value)
        for (uint64_t x = 0; x < t.size(); ++x) t.set(x, true);
    return t;
}

std::string TruthTable::to_hex() const {
    uint64_t digits = (size() + 3) / 4;
    std::string out(digits, '0');
    static const char* hexchars = "0123456789abcdef";
    for (uint64_t j = 0; j < digits; ++j) {
        int d = 0;
        for (int b = 0; b < 4; ++b) {
            uint64_t idx = 4 * j + b;
            if (idx < size() && get(idx)) d |= 8 >> b;
        }
        out[j] = hexchars[d];
    }
    return out;
}

TruthTable TruthTable::from_hex(int n, const std::string& hex) {
    TruthTable t(n);
    uint64_t digits = (t.size() + 3) / 4;
    if (hex.size() != digits)
        throw parse_error("hex payload for n=" + std::to_string(n) + " must have " +
                          std::to_string(digits) + " digits, got " +
                          std::to_string(hex.size()));
    for (uint64_t j = 0; j < digits; ++j) {
        char c = hex[j];
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else
            throw parse_error(std::string("invalid hex digit '") + c + "' at column " +
                              std::to_string(j + 1));
        for (int b = 0; b < 4; ++b) {
            uint64_t idx = 4 * j + b;
            bool bit = (d >> (3 - b)) & 1;
            if (idx < t.size())
                t.set(idx, bit);
            else if (bit)
                throw parse_error("nonzero padding bits in final hex digit");
        }
    }
    return t;
}

void TruthTable::write(std::ostream& os) const {
    os << "n=" << n << "\n" << to_hex() << "\n";
}

TruthTable TruthTable::read(std::istream& is) {
    std::string line;
    do {
        if (!std::getline(is, line)) throw parse_error("missing 'n=' header line");
    } while (line.empty() || line[0] == '#');
    if (line.rfind("n=", 0) != 0) throw parse_error("expected 'n=<int>' header, got: " + line);
    int n;
    try {
        size_t pos = 0;
        n = std::stoi(line.substr(2), &pos);
        if (pos + 2 != line.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw parse_error("malformed variable count in header: " + line);
    }
    if (n < 1) throw parse_error("variable count must be >= 1");
    if (n > table_capacity())
        throw capacity_error("n=" + std::to_string(n) + " exceeds table capacity " +
                             std::to_string(table_capacity()));
    std::string hex;
    do {
        if (!std::getline(is, hex)) throw parse_error("missing hex payload line");
    } while (hex.empty() || hex[0] == '#');
    return from_hex(n, hex);
}

TruthTable TruthTable::read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw parse_error("cannot open " + path);
    return read(is);
}

void TruthTable::write_file(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw parse_error("cannot write " + path);
    write(os);
}

} // namespace rbfc
