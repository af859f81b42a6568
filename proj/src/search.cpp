#include "rbfc/search.hpp"

#include "rbfc/errors.hpp"

namespace rbfc {

std::vector<SeedRecord> search_functions(const SearchQuery& q) {
    if (q.n < 1 || q.n > 4)
        throw capacity_error("exhaustive search enumerates 2^(2^n) tables; n <= 4 only");
    std::vector<SeedRecord> out;
    uint64_t tables = uint64_t(1) << (1 << q.n);
    for (uint64_t v = 0; v < tables && out.size() < q.limit; ++v) {
        TruthTable t(q.n);
        t.words()[0] = v;
        FunctionProfile p = profile(t);
        if (p.resiliency < q.min_resiliency) continue;
        if (p.nonlinearity != q.nonlinearity) continue;
        if (q.degree && p.degree != *q.degree) continue;
        SeedRecord rec;
        rec.n = q.n;
        rec.declared_m = q.min_resiliency;
        rec.declared_d = q.degree;
        rec.declared_nl = q.nonlinearity;
        rec.table = std::move(t);
        rec.measured = p;
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace rbfc
