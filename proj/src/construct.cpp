#include "rbfc/construct.hpp"

#include <algorithm>
#include <map>

#include "rbfc/errors.hpp"
#include "rbfc/solver.hpp"

namespace rbfc {

namespace {

ConstructResult finish(ConstructionPlan plan, const ConstructOptions& opt) {
    assign_phi(plan);
    ConstructResult res;
    res.plan = std::move(plan);
    res.cert = certify(res.plan);
    if (!opt.plan_only) {
        res.table = build(res.plan);
        if (res.plan.n <= transform_capacity()) {
            res.measured = profile(*res.table);
            const FunctionProfile& p = *res.measured;
            if (p.resiliency < res.plan.m)
                throw verification_error("built function missed the resiliency target");
            if (BigUint(uint64_t(p.nonlinearity)) < res.cert.nl_lower)
                throw verification_error("built function missed the nonlinearity bound");
            if (res.cert.nl_exact && *res.cert.nl_exact != p.nonlinearity)
                throw verification_error("structural-exact nonlinearity disagrees with the table");
            if (p.degree < res.cert.degree_lower || p.degree > res.cert.degree_upper)
                throw verification_error("built function degree outside the certificate range");
        }
    }
    return res;
}

std::vector<FamilyOption> bent_options(int n, int m, const std::vector<int>& exclude = {}) {
    std::vector<FamilyOption> options;
    int s = construction1_s(n, m);
    for (int k = 1; k <= s; ++k) {
        if (std::find(exclude.begin(), exclude.end(), k) != exclude.end()) continue;
        FamilyOption fo;
        fo.k = k;
        fo.size = gamma_k_size(n, m, k);
        fo.walsh_penalty = BigUint::pow2(unsigned(n / 2 - k));
        options.push_back(fo);
    }
    return options;
}

BigUint nl_bound_from_penalty(int n, const BigUint& walsh_penalty, unsigned extra_exp = 0) {
    BigUint sub = BigUint::pow2(unsigned(n / 2)) + walsh_penalty;
    sub.div_u32(2);
    if (extra_exp) sub += BigUint::pow2(extra_exp);
    return BigUint::pow2(unsigned(n - 1)) - sub;
}

} // namespace

ConstructResult construct1(int n, int m, const ConstructOptions& opt) {
    validate_construction_params(n, m, opt.gen);
    if (m < 1) throw infeasible_error("constructions need m >= 1");
    SelectorResult sel = solve_selector(assignment_deficit(n, m), bent_options(n, m));

    ConstructionPlan plan;
    plan.n = n;
    plan.m = m;
    plan.variant = Variant::c1;
    plan.s = construction1_s(n, m);
    plan.selected_k = sel.selected_k;
    plan.assign_seed = opt.assign_seed;
    plan.allow_small_n = opt.gen.allow_small_n;
    plan.families.push_back({gamma0(n, m, opt.gen), 0});
    for (int k : sel.selected_k) plan.families.push_back({gamma_k(n, m, k, opt.gen), 0});
    return finish(std::move(plan), opt);
}

ConstructResult construct2(int n, int m, const ConstructOptions& opt) {
    validate_construction_params(n, m, opt.gen);
    if (m < 1) throw infeasible_error("constructions need m >= 1");
    BigUint deficit = assignment_deficit(n, m);

    std::optional<SelectorResult> basic;
    try {
        basic = solve_selector(deficit, bent_options(n, m));
    } catch (const Error& e) {
        if (e.category != ErrorCategory::infeasible) throw;
    }
    std::optional<SelectorResult> prime;
    BigUint deficit_prime = deficit + BigUint::pow2(unsigned(n / 2 - m - 1)) - BigUint(1);
    try {
        prime = solve_selector(deficit_prime, bent_options(n, m));
    } catch (const Error& e) {
        if (e.category != ErrorCategory::infeasible) throw;
    }
    if (!basic && !prime)
        throw infeasible_error("degree-optimized construction infeasible at n=" +
                               std::to_string(n) + " m=" + std::to_string(m));

    std::optional<BigUint> basic_nl, prime_nl;
    if (basic) basic_nl = nl_bound_from_penalty(n, basic->walsh_penalty, unsigned(m + 1));
    if (prime) prime_nl = nl_bound_from_penalty(n, prime->walsh_penalty);
    bool use_prime = prime && (!basic || !(*basic_nl > *prime_nl));

    ConstructionPlan plan;
    plan.n = n;
    plan.m = m;
    plan.s = construction1_s(n, m);
    plan.assign_seed = opt.assign_seed;
    plan.allow_small_n = opt.gen.allow_small_n;
    for (int i = 1; i <= m + 1; ++i) plan.pivots.push_back(i);
    plan.cprime = (uint64_t(1) << (m + 1)) - 1;

    if (use_prime) {
        plan.variant = Variant::c2_prime;
        plan.selected_k = prime->selected_k;
        plan.families.push_back({gamma0_prime(n, m, plan.pivots, plan.cprime, opt.gen), 0});
    } else {
        plan.variant = Variant::c2_basic;
        plan.selected_k = basic->selected_k;
        ComponentFamily base = gamma0(n, m, opt.gen);
        base.cprime = plan.cprime;
        base.pivot_mask = plan.cprime;
        base.gprime_index = base.find_mask(plan.cprime);
        if (!base.gprime_index)
            throw verification_error("c' is not a member of the base family");
        base.max_member_degree = std::max(1, n / 2 - m - 1);
        plan.families.push_back({std::move(base), 0});
    }
    for (int k : plan.selected_k) plan.families.push_back({gamma_k(n, m, k, opt.gen), 0});

    ConstructResult res = finish(std::move(plan), opt);
    if (prime_nl) res.prime_route_terms = pow2_term_string(n - 1, BigUint::pow2(unsigned(n - 1)) - *prime_nl);
    if (basic_nl) res.basic_route_terms = pow2_term_string(n - 1, BigUint::pow2(unsigned(n - 1)) - *basic_nl);
    if (res.cert.degree_lower != n - m - 1 || res.cert.degree_upper != n - m - 1)
        throw verification_error("degree optimization did not pin degree to n-m-1");
    return res;
}

ConstructResult construct3(int n, int m, const std::vector<SeedRecord>& seeds,
                           const ConstructOptions& opt) {
    validate_construction_params(n, m, opt.gen);
    if (m < 1) throw infeasible_error("constructions need m >= 1");

    // Group seed records into per-k tail sets; e is fixed by the declared
    // resiliency of the records.
    std::map<int, std::pair<int, std::vector<std::shared_ptr<const Tail>>>> grouped;
    for (const auto& rec : seeds) {
        if (rec.n % 2 != 0 || rec.n > n / 2)
            throw verification_error("seed on " + std::to_string(rec.n) +
                                     " variables does not fit k <= n/4");
        int k = rec.n / 2;
        int e = rec.declared_m + 1;
        auto it = grouped.find(k);
        if (it == grouped.end())
            grouped[k] = {e, {seed_tail(rec)}};
        else if (it->second.first != e)
            throw verification_error("seeds at k=" + std::to_string(k) +
                                     " declare inconsistent resiliency orders");
        else
            it->second.second.push_back(seed_tail(rec));
    }

    ConstructionPlan plan;
    plan.n = n;
    plan.m = m;
    plan.variant = Variant::c3;
    plan.s = construction1_s(n, m);
    plan.assign_seed = opt.assign_seed;
    plan.allow_small_n = opt.gen.allow_small_n;
    plan.families.push_back({omega0(n, m, opt.gen), 0});

    std::vector<FamilyOption> options;
    std::vector<int> seeded_ks;

    if (opt.optimize_degree) {
        if (n % 4 != 0 || n / 2 < 12)
            throw infeasible_error("degree optimization needs n = 0 (mod 4) and n/2 >= 12");
        if (grouped.count(n / 4))
            throw verification_error("cannot combine k=n/4 seeds with degree optimization");
        ConstructOptions sub_opt;
        sub_opt.gen = opt.gen;
        ConstructResult sub = construct2(n / 2, m, sub_opt);
        auto tail = Tail::make(*sub.table, TailKind::plain);
        grouped[n / 4] = {m + 1, {tail}};
    }

    for (auto& [k, ent] : grouped) {
        auto& [e, tails] = ent;
        ComponentFamily fam = omega_k(n, m, k, e, tails, opt.vary_tails, opt.gen);
        FamilyOption fo;
        fo.k = k;
        fo.e = e;
        fo.forced = true;
        fo.size = BigUint(fam.size());
        fo.walsh_penalty = BigUint(uint64_t(fam.max_abs_walsh));
        options.push_back(fo);
        seeded_ks.push_back(k);
        plan.families.push_back({std::move(fam), 0});
    }
    // The degree-carrying singleton has to win a block, so it is assigned
    // ahead of the wider seeded families.
    std::stable_sort(plan.families.begin() + 1, plan.families.end(),
                     [](const PlanFamily& a, const PlanFamily& b) {
                         if ((a.family.size() == 1) != (b.family.size() == 1))
                             return a.family.size() == 1;
                         return a.family.k < b.family.k;
                     });

    for (auto& fo : bent_options(n, m, seeded_ks)) options.push_back(fo);
    SelectorResult sel = solve_selector(assignment_deficit(n, m), options);
    plan.selected_k = sel.selected_k;
    for (int k : sel.selected_k) {
        if (std::find(seeded_ks.begin(), seeded_ks.end(), k) != seeded_ks.end()) continue;
        plan.families.push_back(
            {omega_k(n, m, k, 0, {bent_tail(k, std::max(k, 2))}, false, opt.gen), 0});
    }
    return finish(std::move(plan), opt);
}

} // namespace rbfc
