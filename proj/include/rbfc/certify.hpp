#pragma once

#include <optional>
#include <string>

#include "rbfc/bigint.hpp"
#include "rbfc/plan.hpp"

namespace rbfc {

// Machine-checkable claim about a planned function, derived from the
// construction alone (no 2^n table).
struct CertifiedProfile {
    int n = 0;
    int m = 0;
    int resiliency_at_least = 0;
    BigUint nl_lower;          // closed-form bound
    std::string nl_lower_terms; // "2^15-2^7-2^5" style
    std::optional<int64_t> nl_exact;
    int degree_lower = 0;
    int degree_upper = 0;
    bool exact_mode = false;
};

// Reconstructs Walsh values of the planned function from component spectra
// and the block assignment.
class PlanSpectrum {
public:
    explicit PlanSpectrum(const ConstructionPlan& plan);

    // Responding components at a given alpha: (block, W value) pairs.
    struct Responder {
        uint64_t block;
        int64_t w;
    };
    void collect(uint64_t alpha, std::vector<Responder>& out) const;

    // W_f(beta, alpha) = sum_i (-1)^{beta . b_i} w_i
    int64_t at(uint64_t beta, uint64_t alpha) const;

    // max over all (beta, alpha), via per-alpha enumeration of the
    // achievable sign patterns (the image of beta -> (beta . b_i)_i).
    int64_t max_abs() const;

private:
    const ConstructionPlan& plan_;
    std::vector<std::vector<uint64_t>> block_of_; // per family: member -> block
    static constexpr uint64_t kUnassigned = ~uint64_t(0);
};

// Largest |sum s_i w_i| over sign patterns s reachable as beta varies.
int64_t max_signed_combination(const std::vector<PlanSpectrum::Responder>& resp, int half_n);

// Degree of the XOR of all assigned components (n/2 variables); the
// coefficient of the full block-indicator monomial.
int gfull_degree(const ConstructionPlan& plan);

CertifiedProfile certify(const ConstructionPlan& plan);

std::string pow2_term_string(int lead_exp, const BigUint& subtracted);

} // namespace rbfc
