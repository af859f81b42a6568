#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbfc/certify.hpp"
#include "rbfc/plan.hpp"
#include "rbfc/profile.hpp"
#include "rbfc/seeds.hpp"

namespace rbfc {

struct ConstructOptions {
    bool plan_only = false;
    bool vary_tails = false;
    bool optimize_degree = false; // c3: assign a degree-optimized n/2 block
    uint64_t assign_seed = 0;
    GenOptions gen;
};

struct ConstructResult {
    ConstructionPlan plan;
    CertifiedProfile cert;
    std::optional<TruthTable> table;
    std::optional<FunctionProfile> measured;
    // c2 reports both routes: the disjoint g'-family bound and the
    // monomial-insertion bound.
    std::optional<std::string> prime_route_terms;
    std::optional<std::string> basic_route_terms;
};

// Construction of an (n, m, -, N) function from the linear family plus
// bent-tailed families chosen by the feasibility solver.
ConstructResult construct1(int n, int m, const ConstructOptions& opt = {});

// Degree-optimized variant: reaches degree n-m-1 either through the
// disjoint g' family (no nonlinearity cost) or by inserting the monomial
// into one assigned linear block (cost at most 2^{m+1}); picks whichever
// certifies the higher nonlinearity.
ConstructResult construct2(int n, int m, const ConstructOptions& opt = {});

// Seeded variant: user-supplied resilient tails relax the prefix-weight
// requirement. Seeded families are always assigned; bent families cover any
// remaining deficit.
ConstructResult construct3(int n, int m, const std::vector<SeedRecord>& seeds,
                           const ConstructOptions& opt = {});

} // namespace rbfc
