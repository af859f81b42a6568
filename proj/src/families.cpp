#include "rbfc/families.hpp"

#include <algorithm>

#include "rbfc/errors.hpp"

namespace rbfc {

const char* family_label_name(FamilyLabel l) {
    switch (l) {
    case FamilyLabel::gamma0: return "gamma0";
    case FamilyLabel::gamma_k: return "gamma_k";
    case FamilyLabel::gamma0_prime: return "gamma0_prime";
    case FamilyLabel::omega0: return "omega0";
    case FamilyLabel::omega_k: return "omega_k";
    }
    return "?";
}

Component ComponentFamily::member(size_t idx) const {
    if (gprime_index && *gprime_index == idx) return make_gprime(p, cprime, pivot_mask);
    if (tails.empty()) return make_component(p, p, masks[idx]);
    return make_component(p, t, masks[idx], tail_of(idx));
}

const std::shared_ptr<const Tail>& ComponentFamily::tail_of(size_t idx) const {
    static const std::shared_ptr<const Tail> none;
    if (tails.empty()) return none;
    if (member_tail.empty()) return tails[0];
    return tails[member_tail[idx]];
}

std::optional<size_t> ComponentFamily::find_mask(uint64_t prefix) const {
    auto it = std::lower_bound(masks.begin(), masks.end(), prefix);
    if (it == masks.end() || *it != prefix) return std::nullopt;
    return size_t(it - masks.begin());
}

void validate_construction_params(int n, int m, const GenOptions& opt) {
    if (n % 2 != 0) throw infeasible_error("n must be even");
    int floor_n = opt.allow_small_n ? 8 : 12;
    if (n < floor_n)
        throw infeasible_error("n=" + std::to_string(n) + " below the supported minimum " +
                               std::to_string(floor_n));
    if (m < 0) throw infeasible_error("m must be >= 0");
}

namespace {

constexpr int kMaxMaterializedP = 24;

void check_materializable(int p) {
    if (p > kMaxMaterializedP)
        throw capacity_error("component families materialize only up to p=" +
                             std::to_string(kMaxMaterializedP) +
                             " variables; the tables command covers larger sizes in "
                             "closed form");
}

std::vector<uint64_t> masks_weight_above(int bits, int threshold) {
    std::vector<uint64_t> out;
    for (uint64_t c = 0; c < (uint64_t(1) << bits); ++c)
        if (popcount64(c) > threshold) out.push_back(c);
    return out;
}

} // namespace

ComponentFamily gamma0(int n, int m, const GenOptions& opt) {
    validate_construction_params(n, m, opt);
    check_materializable(n / 2);
    ComponentFamily fam;
    fam.label = FamilyLabel::gamma0;
    fam.p = n / 2;
    fam.t = fam.p;
    fam.declared_resiliency = m;
    fam.masks = masks_weight_above(fam.p, m);
    fam.max_abs_walsh = int64_t(1) << fam.p;
    fam.max_member_degree = 1;
    return fam;
}

ComponentFamily omega0(int n, int m, const GenOptions& opt) {
    ComponentFamily fam = gamma0(n, m, opt);
    fam.label = FamilyLabel::omega0;
    return fam;
}

int construction1_s(int n, int m) { return (n - 2 * m - 2) / 4; }

ComponentFamily gamma_k(int n, int m, int k, const GenOptions& opt) {
    validate_construction_params(n, m, opt);
    int s = construction1_s(n, m);
    if (k < 1 || k > s)
        throw infeasible_error("k=" + std::to_string(k) + " outside [1, s], s=" +
                               std::to_string(s));
    check_materializable(n / 2);
    ComponentFamily fam;
    fam.label = FamilyLabel::gamma_k;
    fam.p = n / 2;
    fam.k = k;
    fam.t = fam.p - 2 * k;
    fam.declared_resiliency = m;
    fam.masks = masks_weight_above(fam.t, m);
    fam.tails.push_back(bent_tail(k, std::max(k, 2)));
    fam.max_abs_walsh = int64_t(1) << (fam.p - k);
    fam.max_member_degree = std::max(k, 2);
    return fam;
}

ComponentFamily gamma0_prime(int n, int m, const std::vector<int>& pivots, uint64_t cprime,
                             const GenOptions& opt) {
    validate_construction_params(n, m, opt);
    check_materializable(n / 2);
    int p = n / 2;
    if (int(pivots.size()) != m + 1)
        throw verification_error("gamma0_prime needs exactly m+1 pivot coordinates");
    uint64_t pivot_mask = 0;
    for (int coord : pivots) {
        if (coord < 1 || coord > p) throw verification_error("pivot coordinate out of range");
        pivot_mask |= uint64_t(1) << (coord - 1);
    }
    if (popcount64(pivot_mask) != m + 1)
        throw verification_error("pivot coordinates must be distinct");
    if ((cprime & pivot_mask) != pivot_mask || popcount64(cprime) <= m)
        throw verification_error("c' must lie in S: weight > m and all-ones on pivots");

    ComponentFamily fam;
    fam.label = FamilyLabel::gamma0_prime;
    fam.p = p;
    fam.t = p;
    fam.declared_resiliency = m;
    fam.cprime = cprime;
    fam.pivot_mask = pivot_mask;
    for (uint64_t c = 0; c < (uint64_t(1) << p); ++c) {
        bool in_s = (c & pivot_mask) == pivot_mask;
        if (c == cprime || (popcount64(c) > m && !in_s)) fam.masks.push_back(c);
    }
    fam.gprime_index = fam.find_mask(cprime);
    fam.max_abs_walsh = int64_t(1) << p;
    fam.max_member_degree = p - m - 1;
    return fam;
}

ComponentFamily omega_k(int n, int m, int k, int e,
                        std::vector<std::shared_ptr<const Tail>> seeds, bool vary_tails,
                        const GenOptions& opt) {
    validate_construction_params(n, m, opt);
    if (k < 1 || k > n / 4) throw infeasible_error("omega_k: k outside [1, n/4]");
    if (e < 0 || e > m + 1 || e > k + 1)
        throw verification_error("omega_k: e must satisfy 0 <= e <= min(m+1, k+1)");
    check_materializable(n / 2);
    int t = n / 2 - 2 * k;
    if (seeds.empty()) throw verification_error("omega_k: no tail functions supplied");
    for (const auto& seed : seeds) {
        if (seed->table.n != 2 * k)
            throw verification_error("omega_k: tail is not on 2k variables");
        if (seed->degree < 2) throw verification_error("omega_k: tails must be nonlinear");
        if (seed->resiliency < e - 1)
            throw verification_error("omega_k: tail resiliency " +
                                     std::to_string(seed->resiliency) + " below e-1=" +
                                     std::to_string(e - 1));
    }
    if (t == 0 && e < m + 1)
        throw infeasible_error("omega_k: empty prefix requires e = m+1");

    ComponentFamily fam;
    fam.label = FamilyLabel::omega_k;
    fam.p = n / 2;
    fam.k = k;
    fam.e = e;
    fam.t = t;
    fam.declared_resiliency = m;
    fam.masks = masks_weight_above(t, m - e);
    fam.tails = std::move(seeds);
    if (vary_tails && fam.tails.size() > 1) {
        fam.member_tail.resize(fam.masks.size());
        for (size_t i = 0; i < fam.masks.size(); ++i)
            fam.member_tail[i] = uint32_t(i % fam.tails.size());
    }
    int64_t tail_max = 0;
    int deg = 0;
    for (const auto& tl : fam.tails) {
        tail_max = std::max(tail_max, tl->spectrum.max_abs());
        deg = std::max(deg, tl->degree);
    }
    fam.max_abs_walsh = (int64_t(1) << t) * tail_max;
    fam.max_member_degree = deg;
    return fam;
}

DisjointResult verify_disjoint_tables(const std::vector<TruthTable>& tables) {
    DisjointResult res;
    res.exhaustive = true;
    if (tables.empty()) return res;
    int p = tables[0].n;
    if (p > 14) throw capacity_error("exhaustive disjointness check needs p <= 14");
    std::vector<int32_t> owner(uint64_t(1) << p, -1);
    for (size_t i = 0; i < tables.size(); ++i) {
        if (tables[i].n != p) throw verification_error("disjointness: mixed widths");
        WalshSpectrum s = fast_walsh(tables[i]);
        for (uint64_t a = 0; a < s.values.size(); ++a) {
            if (s.values[a] == 0) continue;
            if (owner[a] >= 0) {
                res.ok = false;
                res.witness = DisjointWitness{size_t(owner[a]), i, a};
                return res;
            }
            owner[a] = int32_t(i);
        }
    }
    return res;
}

DisjointResult verify_disjoint(const ComponentFamily& fam, bool force_symbolic) {
    if (!force_symbolic && fam.p <= 14) {
        DisjointResult res;
        res.exhaustive = true;
        std::vector<int32_t> owner(uint64_t(1) << fam.p, -1);
        for (size_t i = 0; i < fam.size(); ++i) {
            WalshSpectrum s = fast_walsh(expand(fam.member(i)));
            for (uint64_t a = 0; a < s.values.size(); ++a) {
                if (s.values[a] == 0) continue;
                if (owner[a] >= 0) {
                    res.ok = false;
                    res.witness = DisjointWitness{size_t(owner[a]), i, a};
                    return res;
                }
                owner[a] = int32_t(i);
            }
        }
        return res;
    }
    DisjointResult res;
    res.exhaustive = false;
    for (size_t i = 1; i < fam.masks.size(); ++i) {
        if (fam.masks[i - 1] == fam.masks[i]) {
            res.ok = false;
            res.witness = DisjointWitness{i - 1, i, fam.masks[i]};
            return res;
        }
    }
    if (fam.gprime_index) {
        // g' is nonzero only on points that are all-ones on the pivots; the
        // plain linear members must avoid those points.
        for (size_t i = 0; i < fam.masks.size(); ++i) {
            if (i == *fam.gprime_index) continue;
            if ((fam.masks[i] & fam.pivot_mask) == fam.pivot_mask) {
                res.ok = false;
                res.witness = DisjointWitness{*fam.gprime_index, i, fam.masks[i]};
                return res;
            }
        }
    }
    return res;
}

BigUint count_masks_weight_above(unsigned bits, int threshold) {
    if (threshold < 0) return BigUint::pow2(bits);
    if (unsigned(threshold) >= bits) return BigUint();
    return BigUint::binomial_sum(bits, unsigned(threshold) + 1, bits);
}

BigUint gamma0_size(int n, int m) { return count_masks_weight_above(unsigned(n / 2), m); }

BigUint gamma_k_size(int n, int m, int k) {
    return count_masks_weight_above(unsigned(n / 2 - 2 * k), m);
}

BigUint gamma0_prime_size(int n, int m) {
    BigUint size = gamma0_size(n, m);
    size -= BigUint::pow2(unsigned(n / 2 - m - 1));
    size += BigUint(1);
    return size;
}

BigUint omega_k_size(int n, int m, int k, int e) {
    return count_masks_weight_above(unsigned(n / 2 - 2 * k), m - e);
}

BigUint assignment_deficit(int n, int m) {
    return BigUint::binomial_sum(unsigned(n / 2), 0, unsigned(m));
}

} // namespace rbfc
