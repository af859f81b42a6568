#include "rbfc/solver.hpp"

#include <algorithm>

#include "rbfc/errors.hpp"

namespace rbfc {

SelectorResult solve_selector(const BigUint& deficit, std::vector<FamilyOption> options) {
    std::sort(options.begin(), options.end(),
              [](const FamilyOption& a, const FamilyOption& b) { return a.k < b.k; });

    SelectorResult res;
    for (const auto& opt : options) {
        if (opt.forced) {
            res.selected_k.push_back(opt.k);
            res.covered += opt.size;
            res.walsh_penalty += opt.walsh_penalty;
        }
    }
    if (res.covered >= deficit && !res.selected_k.empty()) {
        std::sort(res.selected_k.begin(), res.selected_k.end());
        return res;
    }

    // Optional families carry penalties 2^{n/2-k}, strictly decreasing in k,
    // so lexicographic minimization over (a_1, a_2, ...) minimizes the sum:
    // skip a family whenever everything after it can still cover the rest.
    std::vector<const FamilyOption*> optional;
    for (const auto& opt : options)
        if (!opt.forced) optional.push_back(&opt);
    for (size_t i = 1; i < optional.size(); ++i) {
        if (!(optional[i]->walsh_penalty < optional[i - 1]->walsh_penalty))
            throw verification_error("solver: optional penalties must decrease with k");
    }
    std::vector<BigUint> suffix(optional.size() + 1);
    for (size_t i = optional.size(); i-- > 0;) suffix[i] = suffix[i + 1] + optional[i]->size;

    for (size_t i = 0; i < optional.size(); ++i) {
        if (res.covered + suffix[i + 1] >= deficit) continue; // a_k = 0 still feasible
        res.selected_k.push_back(optional[i]->k);
        res.covered += optional[i]->size;
        res.walsh_penalty += optional[i]->walsh_penalty;
        if (res.covered >= deficit) break;
    }
    if (res.covered < deficit)
        throw infeasible_error("selector cannot cover the assignment deficit: " +
                               res.covered.to_string() + " of " + deficit.to_string() +
                               " blocks available");
    std::sort(res.selected_k.begin(), res.selected_k.end());
    return res;
}

} // namespace rbfc
