#pragma once

#include <optional>
#include <vector>

#include "rbfc/bigint.hpp"
#include "rbfc/component.hpp"

namespace rbfc {

enum class FamilyLabel { gamma0, gamma_k, gamma0_prime, omega0, omega_k };

const char* family_label_name(FamilyLabel l);

// One generated set of disjoint-spectra components on p = n/2 variables.
// Members are ordered by increasing prefix mask; for gamma0_prime the member
// keyed by c' is the nonlinear g'.
struct ComponentFamily {
    FamilyLabel label = FamilyLabel::gamma0;
    int p = 0;
    int k = 0; // tail half-width; 0 for the linear families
    int e = 0; // omega resiliency relaxation
    int t = 0; // linear prefix width
    int declared_resiliency = 0;

    std::vector<uint64_t> masks;
    std::vector<std::shared_ptr<const Tail>> tails;
    std::vector<uint32_t> member_tail; // empty means every member uses tails[0]
    std::optional<size_t> gprime_index;
    uint64_t cprime = 0;
    uint64_t pivot_mask = 0;

    int64_t max_abs_walsh = 0;
    int max_member_degree = 0;

    size_t size() const { return masks.size(); }
    Component member(size_t idx) const;
    std::optional<size_t> find_mask(uint64_t prefix) const;
    const std::shared_ptr<const Tail>& tail_of(size_t idx) const;
};

struct GenOptions {
    bool allow_small_n = false; // permit 8 <= n < 12 (outside the standard regime)
};

void validate_construction_params(int n, int m, const GenOptions& opt);

ComponentFamily gamma0(int n, int m, const GenOptions& opt = {});
ComponentFamily gamma_k(int n, int m, int k, const GenOptions& opt = {});
// pivots are 1-based variable indices, |pivots| = m+1; cprime must be
// all-ones on them.
ComponentFamily gamma0_prime(int n, int m, const std::vector<int>& pivots, uint64_t cprime,
                             const GenOptions& opt = {});
ComponentFamily omega0(int n, int m, const GenOptions& opt = {});
ComponentFamily omega_k(int n, int m, int k, int e,
                        std::vector<std::shared_ptr<const Tail>> seeds, bool vary_tails,
                        const GenOptions& opt = {});

struct DisjointWitness {
    size_t i = 0, j = 0;
    uint64_t alpha = 0;
};
struct DisjointResult {
    bool ok = true;
    bool exhaustive = false;
    std::optional<DisjointWitness> witness;
};

// Exhaustive mode (p <= 14) checks W_i(a)*W_j(a) = 0 over all points and
// pairs via real spectra of the expanded members; symbolic mode checks the
// structural sufficient condition (pairwise distinct prefixes, and for
// gamma0_prime the pivot exclusion).
DisjointResult verify_disjoint(const ComponentFamily& fam, bool force_symbolic = false);
DisjointResult verify_disjoint_tables(const std::vector<TruthTable>& tables);

// Closed-form cardinalities, valid far beyond what can be materialized.
BigUint count_masks_weight_above(unsigned bits, int threshold);
BigUint gamma0_size(int n, int m);
BigUint gamma_k_size(int n, int m, int k);
BigUint gamma0_prime_size(int n, int m);
BigUint omega_k_size(int n, int m, int k, int e);
// 2^{n/2} - |gamma0| = sum_{i=0}^{m} C(n/2, i)
BigUint assignment_deficit(int n, int m);

int construction1_s(int n, int m); // floor((n-2m-2)/4)

} // namespace rbfc
