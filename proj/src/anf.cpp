#include "rbfc/anf.hpp"

#include <algorithm>

#include "rbfc/errors.hpp"

namespace rbfc {

namespace {

// In-place Moebius transform over packed bits. The first six stages stay
// inside a 64-bit word; wider stages XOR whole words.
void moebius_inplace(std::vector<uint64_t>& words, int n) {
    static constexpr uint64_t stage_mask[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
    for (int j = 0; j < std::min(n, 6); ++j) {
        int shift = 1 << j;
        for (auto& w : words) w ^= (w & stage_mask[j]) << shift;
    }
    for (int j = 6; j < n; ++j) {
        uint64_t step = uint64_t(1) << (j - 6);
        for (uint64_t base = 0; base < words.size(); base += step << 1)
            for (uint64_t i = base; i < base + step; ++i) words[i + step] ^= words[i];
    }
}

} // namespace

AnfForm anf(const TruthTable& f) {
    if (f.n > transform_capacity())
        throw capacity_error("full ANF needs n <= " + std::to_string(transform_capacity()));
    AnfForm a;
    a.n = f.n;
    a.coefficients = f;
    moebius_inplace(a.coefficients.words(), f.n);
    return a;
}

TruthTable anf_to_table(const AnfForm& a) {
    TruthTable t = a.coefficients;
    moebius_inplace(t.words(), a.n);
    return t;
}

int AnfForm::degree() const {
    int best = -1;
    for (uint64_t u = 0; u < coefficients.size(); ++u)
        if (coefficients.get(u)) best = std::max(best, popcount64(u));
    return best;
}

std::string AnfForm::to_string() const {
    std::string out;
    for (uint64_t u = 0; u < coefficients.size(); ++u) {
        if (!coefficients.get(u)) continue;
        if (!out.empty()) out += " + ";
        if (u == 0) {
            out += "1";
            continue;
        }
        bool first = true;
        for (int i = 0; i < n; ++i) {
            if ((u >> i) & 1) {
                if (!first) out += "*";
                out += "x" + std::to_string(i + 1);
                first = false;
            }
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace rbfc
