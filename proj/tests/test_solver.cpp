#include "doctest.h"
#include "rbfc/errors.hpp"
#include "rbfc/families.hpp"
#include "rbfc/solver.hpp"

using namespace rbfc;

namespace {

std::vector<FamilyOption> c1_options(int n, int m) {
    std::vector<FamilyOption> options;
    for (int k = 1; k <= construction1_s(n, m); ++k) {
        FamilyOption fo;
        fo.k = k;
        fo.size = gamma_k_size(n, m, k);
        fo.walsh_penalty = BigUint::pow2(unsigned(n / 2 - k));
        options.push_back(fo);
    }
    return options;
}

// Reference: try all 2^s selectors, keep the cheapest covering one.
std::optional<BigUint> exhaustive_min_penalty(const BigUint& deficit,
                                              const std::vector<FamilyOption>& options) {
    std::optional<BigUint> best;
    for (uint64_t sel = 0; sel < (uint64_t(1) << options.size()); ++sel) {
        BigUint covered, penalty;
        for (size_t i = 0; i < options.size(); ++i) {
            if ((sel >> i) & 1) {
                covered += options[i].size;
                penalty += options[i].walsh_penalty;
            }
        }
        if (covered < deficit) continue;
        if (!best || penalty < *best) best = penalty;
    }
    return best;
}

} // namespace

TEST_CASE("known selectors") {
    SelectorResult r16 = solve_selector(assignment_deficit(16, 1), c1_options(16, 1));
    CHECK(r16.selected_k == std::vector<int>{2});
    CHECK(r16.walsh_penalty == BigUint::pow2(6));

    SelectorResult r12 = solve_selector(assignment_deficit(12, 1), c1_options(12, 1));
    CHECK(r12.selected_k == std::vector<int>{1});

    CHECK_THROWS_AS(solve_selector(assignment_deficit(12, 5), c1_options(12, 5)), Error);

    // the g'-family deficit at (30,5) needs exactly k=1
    BigUint deficit = assignment_deficit(30, 5) + BigUint::pow2(9) - BigUint(1);
    CHECK(deficit == BigUint(5455));
    CHECK(gamma_k_size(30, 5, 1) == BigUint(5812));
    SelectorResult r30 = solve_selector(deficit, c1_options(30, 5));
    CHECK(r30.selected_k == std::vector<int>{1});
}

TEST_CASE("greedy equals exhaustive minimization") {
    for (int n = 12; n <= 40; n += 2) {
        for (int m = 1; m <= 5; ++m) {
            auto options = c1_options(n, m);
            BigUint deficit = assignment_deficit(n, m);
            auto best = exhaustive_min_penalty(deficit, options);
            if (!best) {
                CHECK_THROWS_AS(solve_selector(deficit, options), Error);
                continue;
            }
            CHECK(solve_selector(deficit, options).walsh_penalty == *best);
        }
    }
}

TEST_CASE("feasibility is monotone in m") {
    auto feasible = [](int n, int m) {
        try {
            solve_selector(assignment_deficit(n, m), c1_options(n, m));
            return true;
        } catch (const Error&) {
            return false;
        }
    };
    for (int n = 12; n <= 40; n += 2)
        for (int m = 2; m <= 5; ++m)
            if (feasible(n, m)) CHECK(feasible(n, m - 1));
}

TEST_CASE("forced families are always selected") {
    // (12,1) with a forced 3-member family at k=2: the bent k=1 family must
    // still join to cover the deficit of 7.
    auto options = c1_options(12, 1); // k=1 only (s=2 gives k=1,2)
    options.erase(std::remove_if(options.begin(), options.end(),
                                 [](const FamilyOption& o) { return o.k == 2; }),
                  options.end());
    FamilyOption forced;
    forced.k = 2;
    forced.e = 1;
    forced.size = BigUint(3);
    forced.walsh_penalty = BigUint(32);
    forced.forced = true;
    options.push_back(forced);
    SelectorResult r = solve_selector(assignment_deficit(12, 1), options);
    CHECK(r.selected_k == std::vector<int>{1, 2});
    CHECK(r.walsh_penalty == BigUint(32 + 32));
}
