#include "rbfc/component.hpp"

#include <algorithm>

#include "rbfc/anf.hpp"
#include "rbfc/errors.hpp"

namespace rbfc {

std::shared_ptr<const Tail> Tail::make(TruthTable t, TailKind kind) {
    auto tail = std::make_shared<Tail>();
    tail->spectrum = fast_walsh(t);
    tail->kind = kind;
    tail->resiliency = resiliency_order(tail->spectrum);
    tail->degree = anf(t).degree();
    tail->nonlinearity = rbfc::nonlinearity(tail->spectrum);
    tail->table = std::move(t);
    return tail;
}

int Component::structural_resiliency() const {
    if (monomial_mask) {
        uint64_t pivot = ((uint64_t(1) << p) - 1) ^ monomial_mask;
        return popcount64(pivot) - 1;
    }
    int v = tail ? tail->resiliency : -1;
    return popcount64(mask) + v;
}

int Component::degree() const {
    int d = -1;
    if (mask) d = 1;
    if (tail) d = std::max(d, tail->degree);
    if (monomial_mask) d = std::max(d, popcount64(monomial_mask));
    return d;
}

int64_t Component::max_abs_walsh() const {
    if (monomial_mask) {
        int pivots = p - popcount64(monomial_mask);
        return (int64_t(1) << p) - (int64_t(1) << (pivots + 1));
    }
    if (tail) return (int64_t(1) << t) * tail->spectrum.max_abs();
    return int64_t(1) << p;
}

Component make_component(int p, int t, uint64_t mask, std::shared_ptr<const Tail> tail) {
    if (t < 0 || t > p) throw verification_error("component: t out of range");
    if (t < 64 && mask >= (uint64_t(1) << t))
        throw verification_error("component: mask wider than t");
    if ((tail == nullptr) != (t == p))
        throw verification_error("component: tail must be present exactly when t < p");
    if (tail && tail->table.n != p - t)
        throw verification_error("component: tail is not on p-t variables");
    Component c;
    c.p = p;
    c.t = t;
    c.mask = mask;
    c.tail = std::move(tail);
    return c;
}

Component make_gprime(int p, uint64_t cprime, uint64_t pivot_mask) {
    uint64_t full = (uint64_t(1) << p) - 1;
    if ((pivot_mask & ~full) || pivot_mask == 0)
        throw verification_error("gprime: bad pivot mask");
    if ((cprime & pivot_mask) != pivot_mask)
        throw verification_error("gprime: c' must be all-ones on the pivot coordinates");
    if (cprime & ~full) throw verification_error("gprime: mask wider than p");
    uint64_t mono = full ^ pivot_mask;
    if (popcount64(mono) < 2)
        throw verification_error("gprime: monomial needs at least two variables");
    Component c;
    c.p = p;
    c.t = p;
    c.mask = cprime;
    c.monomial_mask = mono;
    return c;
}

TruthTable expand(const Component& comp) {
    TruthTable out(comp.p);
    expand_into(comp, out, 0);
    return out;
}

void expand_into(const Component& comp, TruthTable& dst, uint64_t offset) {
    uint64_t size = uint64_t(1) << comp.p;
    for (uint64_t x = 0; x < size; ++x) {
        bool bit = parity64(comp.mask & x);
        if (comp.tail) bit ^= comp.tail->table.get(x >> comp.t);
        if (comp.monomial_mask && (x & comp.monomial_mask) == comp.monomial_mask) bit ^= 1;
        if (bit) dst.set(offset + x, true);
    }
}

int64_t component_walsh(const Component& comp, uint64_t alpha) {
    if (comp.monomial_mask) {
        uint64_t full = (uint64_t(1) << comp.p) - 1;
        uint64_t pivot = full ^ comp.monomial_mask;
        if ((alpha & pivot) != (comp.mask & pivot)) return 0;
        uint64_t u = (alpha ^ comp.mask) & comp.monomial_mask;
        int r = popcount64(comp.monomial_mask);
        int64_t scale = int64_t(1) << popcount64(pivot);
        if (u == 0) return scale * ((int64_t(1) << r) - 2);
        return (popcount64(u) & 1) ? 2 * scale : -2 * scale;
    }
    if (comp.tail) {
        uint64_t low = alpha & ((uint64_t(1) << comp.t) - 1);
        if (low != comp.mask) return 0;
        return (int64_t(1) << comp.t) * comp.tail->spectrum.values[alpha >> comp.t];
    }
    return alpha == comp.mask ? int64_t(1) << comp.p : 0;
}

TruthTable mm_bent(int k, int want_degree) {
    if (k < 1) throw verification_error("mm_bent: k must be >= 1");
    int top = std::max(k, 2);
    if (want_degree != 2 && want_degree != top)
        throw verification_error("mm_bent: degree must be 2 or max(k,2)");
    TruthTable t(2 * k);
    uint64_t kmask = (uint64_t(1) << k) - 1;
    bool add_top = want_degree == k && k >= 3;
    for (uint64_t z = 0; z < t.size(); ++z) {
        uint64_t x = z & kmask;
        uint64_t y = z >> k;
        bool bit = parity64(x & y);
        if (add_top && y == kmask) bit ^= 1;
        if (bit) t.set(z, true);
    }
    return t;
}

std::shared_ptr<const Tail> bent_tail(int k, int want_degree) {
    return Tail::make(mm_bent(k, want_degree), TailKind::bent);
}

} // namespace rbfc
