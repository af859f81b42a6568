#include "rbfc/certify.hpp"

#include <algorithm>

#include "rbfc/anf.hpp"
#include "rbfc/errors.hpp"

namespace rbfc {

PlanSpectrum::PlanSpectrum(const ConstructionPlan& plan) : plan_(plan) {
    if (plan.phi.empty()) throw verification_error("plan has no assignment");
    block_of_.resize(plan.families.size());
    for (size_t fi = 0; fi < plan.families.size(); ++fi)
        block_of_[fi].assign(plan.families[fi].family.size(), kUnassigned);
    for (uint64_t b = 0; b < plan.phi.size(); ++b) {
        auto [fi, mi] = plan.phi[b];
        block_of_[fi][mi] = b;
    }
}

void PlanSpectrum::collect(uint64_t alpha, std::vector<Responder>& out) const {
    out.clear();
    for (size_t fi = 0; fi < plan_.families.size(); ++fi) {
        const ComponentFamily& fam = plan_.families[fi].family;
        auto push = [&](size_t mi, int64_t w) {
            if (w == 0) return;
            uint64_t block = block_of_[fi][mi];
            if (block != kUnassigned) out.push_back({block, w});
        };
        if (fam.tails.empty()) {
            // Linear family, possibly carrying g'.
            if (auto mi = fam.find_mask(alpha)) {
                if (fam.gprime_index && *fam.gprime_index == *mi)
                    push(*mi, component_walsh(fam.member(*mi), alpha));
                else
                    push(*mi, int64_t(1) << fam.p);
            }
            if (fam.gprime_index) {
                bool pivot_ones = (alpha & fam.pivot_mask) == fam.pivot_mask;
                if (pivot_ones && alpha != fam.cprime) {
                    // g' side-lobe; for gamma0_prime the pivot set excludes
                    // every plain member, for the modified base both respond.
                    push(*fam.gprime_index,
                         component_walsh(fam.member(*fam.gprime_index), alpha));
                }
            }
        } else {
            uint64_t prefix = alpha & ((uint64_t(1) << fam.t) - 1);
            if (auto mi = fam.find_mask(prefix)) {
                int64_t w = (int64_t(1) << fam.t) *
                            fam.tail_of(*mi)->spectrum.values[alpha >> fam.t];
                push(*mi, w);
            }
        }
    }
}

int64_t PlanSpectrum::at(uint64_t beta, uint64_t alpha) const {
    std::vector<Responder> resp;
    collect(alpha, resp);
    int64_t acc = 0;
    for (const auto& r : resp) acc += parity64(beta & r.block) ? -r.w : r.w;
    return acc;
}

int64_t max_signed_combination(const std::vector<PlanSpectrum::Responder>& resp, int half_n) {
    size_t r = resp.size();
    if (r == 0) return 0;
    // Achievable sign patterns over the responders form the image of the
    // linear map beta -> (beta . b_i)_i; its basis comes from the bit
    // columns of the block indices.
    std::vector<uint32_t> basis;
    for (int j = 0; j < half_n; ++j) {
        uint32_t col = 0;
        for (size_t i = 0; i < r; ++i) col |= uint32_t((resp[i].block >> j) & 1) << i;
        for (uint32_t b : basis) col = std::min(col, col ^ b);
        if (col) basis.push_back(col);
    }
    int64_t best = 0;
    for (uint64_t sel = 0; sel < (uint64_t(1) << basis.size()); ++sel) {
        uint32_t pattern = 0;
        for (size_t j = 0; j < basis.size(); ++j)
            if ((sel >> j) & 1) pattern ^= basis[j];
        int64_t sum = 0;
        for (size_t i = 0; i < r; ++i)
            sum += ((pattern >> i) & 1) ? -resp[i].w : resp[i].w;
        best = std::max(best, sum < 0 ? -sum : sum);
    }
    return best;
}

int64_t PlanSpectrum::max_abs() const {
    int half_n = plan_.half();
    int64_t best = 0;
    std::vector<Responder> resp;
    for (uint64_t alpha = 0; alpha < plan_.block_count(); ++alpha) {
        collect(alpha, resp);
        best = std::max(best, max_signed_combination(resp, half_n));
    }
    return best;
}

int gfull_degree(const ConstructionPlan& plan) {
    int p = plan.half();
    if (p > transform_capacity())
        throw capacity_error("G_full degree needs n/2 <= " +
                             std::to_string(transform_capacity()));
    uint64_t linear_acc = 0;
    uint64_t monomial = 0;
    TruthTable g(p);
    for (size_t fi = 0; fi < plan.families.size(); ++fi) {
        const PlanFamily& pf = plan.families[fi];
        const ComponentFamily& fam = pf.family;
        for (uint64_t mi = 0; mi < pf.used; ++mi) linear_acc ^= fam.masks[mi];
        if (fam.gprime_index && *fam.gprime_index < pf.used)
            monomial ^= ((uint64_t(1) << p) - 1) ^ fam.pivot_mask;
        if (!fam.tails.empty()) {
            std::vector<uint64_t> parity(fam.tails.size(), 0);
            for (uint64_t mi = 0; mi < pf.used; ++mi)
                parity[fam.member_tail.empty() ? 0 : fam.member_tail[mi]] ^= 1;
            for (size_t ti = 0; ti < fam.tails.size(); ++ti) {
                if (!parity[ti]) continue;
                const TruthTable& tail = fam.tails[ti]->table;
                for (uint64_t x = 0; x < g.size(); ++x)
                    if (tail.get(x >> fam.t)) g.flip(x);
            }
        }
    }
    for (uint64_t x = 0; x < g.size(); ++x) {
        bool bit = parity64(linear_acc & x);
        if (monomial && (x & monomial) == monomial) bit ^= 1;
        if (bit) g.flip(x);
    }
    return anf(g).degree();
}

std::string pow2_term_string(int lead_exp, const BigUint& subtracted) {
    std::string out = "2^" + std::to_string(lead_exp);
    if (subtracted.is_zero()) return out;
    for (unsigned e = subtracted.bit_length(); e-- > 0;)
        if (subtracted.test_bit(e)) out += "-2^" + std::to_string(e);
    return out;
}

CertifiedProfile certify(const ConstructionPlan& plan) {
    CertifiedProfile cert;
    cert.n = plan.n;
    cert.m = plan.m;
    cert.resiliency_at_least = plan.m;

    // Closed-form bound: each family contributes its max |W| once; the
    // modified base of the monomial route contributes the g' side-lobe on
    // top of its linear peak.
    BigUint wmax_bound;
    for (const auto& pf : plan.families) {
        if (pf.used == 0) continue;
        BigUint contrib(uint64_t(pf.family.max_abs_walsh));
        if (pf.family.gprime_index && pf.family.label != FamilyLabel::gamma0_prime)
            contrib += BigUint::pow2(unsigned(plan.m + 2));
        wmax_bound += contrib;
    }
    // N >= 2^{n-1} - wmax/2; every term is even.
    BigUint sub = wmax_bound;
    sub.div_u32(2);
    cert.nl_lower = BigUint::pow2(unsigned(plan.n - 1)) - sub;
    cert.nl_lower_terms = pow2_term_string(plan.n - 1, sub);

    int max_deg = 0;
    for (const auto& pf : plan.families)
        if (pf.used > 0) max_deg = std::max(max_deg, pf.family.max_member_degree);
    cert.degree_upper = std::min(plan.n - plan.m - 1, plan.half() + max_deg);
    int gdeg = gfull_degree(plan);
    cert.degree_lower = gdeg >= 0 ? plan.half() + gdeg : 1;
    if (cert.degree_lower > cert.degree_upper)
        throw verification_error("degree bounds crossed: the assignment is inconsistent");

    if (plan.half() <= 24) {
        PlanSpectrum spec(plan);
        int64_t wmax = spec.max_abs();
        cert.nl_exact = (int64_t(1) << (plan.n - 1)) - wmax / 2;
        cert.exact_mode = true;
    }
    return cert;
}

} // namespace rbfc
