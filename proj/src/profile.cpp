#include "rbfc/profile.hpp"

#include "rbfc/anf.hpp"
#include "rbfc/walsh.hpp"

namespace rbfc {

bool is_almost_optimal(int n, int64_t nl) {
    if (n < 4 || n % 2 != 0) return false;
    int64_t hi = (int64_t(1) << (n - 1)) - (int64_t(1) << (n / 2 - 1));
    int64_t lo = (int64_t(1) << (n - 1)) - (int64_t(1) << (n / 2));
    return nl >= lo && nl < hi;
}

FunctionProfile profile(const TruthTable& f) {
    FunctionProfile p;
    p.n = f.n;
    WalshSpectrum s = fast_walsh(f);
    p.balanced = s.values[0] == 0;
    p.resiliency = resiliency_order(s);
    p.nonlinearity = nonlinearity(s);
    p.degree = anf(f).degree();
    p.almost_optimal = is_almost_optimal(p.n, p.nonlinearity);
    return p;
}

} // namespace rbfc
