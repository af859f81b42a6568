#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "rbfc/truth_table.hpp"
#include "rbfc/walsh.hpp"

namespace rbfc {

enum class TailKind { none, bent, resilient, plain };

// Shared nonlinear tail of a partially linear component, with its spectrum
// precomputed once.
struct Tail {
    TruthTable table;
    WalshSpectrum spectrum;
    TailKind kind = TailKind::plain;
    int resiliency = -1; // v, measured from the spectrum
    int degree = 0;
    int64_t nonlinearity = 0;

    static std::shared_ptr<const Tail> make(TruthTable t, TailKind kind);
};

// g(X_p) = c . X'_t (+) h(X''_{p-t}), with X' the first t variables (low
// index bits). A component with monomial_mask set additionally XORs the
// product of the variables in monomial_mask (the degree-carrying g' shape
// used by the c2 variants).
struct Component {
    int p = 0;
    int t = 0;
    uint64_t mask = 0; // c, over the low t bits
    std::shared_ptr<const Tail> tail; // null when t == p
    uint64_t monomial_mask = 0;

    // wt(c) + v; the empty/bent tail behaves as v = -1.
    int structural_resiliency() const;
    // Exact degree implied by the structure.
    int degree() const;
    // Largest |W| this component can reach.
    int64_t max_abs_walsh() const;
};

Component make_component(int p, int t, uint64_t mask,
                         std::shared_ptr<const Tail> tail = nullptr);
Component make_gprime(int p, uint64_t cprime, uint64_t pivot_mask);

TruthTable expand(const Component& comp);
// Write expand(comp) into dst starting at bit offset (offset is a multiple
// of 64 or comp.p < 6 handled bitwise).
void expand_into(const Component& comp, TruthTable& dst, uint64_t offset);

// W_g(alpha) from the structure alone; matches fast_walsh(expand(comp)).
int64_t component_walsh(const Component& comp, uint64_t alpha);

// Bent function on 2k variables: inner product of the two halves, plus the
// top monomial of the high half when want_degree = k >= 3. Degree is exactly
// want_degree; every |W| equals 2^k.
TruthTable mm_bent(int k, int want_degree);
std::shared_ptr<const Tail> bent_tail(int k, int want_degree);

} // namespace rbfc
