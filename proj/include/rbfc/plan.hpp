#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rbfc/families.hpp"

namespace rbfc {

enum class Variant { c1, c2_prime, c2_basic, c3 };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct PlanFamily {
    ComponentFamily family;
    uint64_t used = 0; // |A_k|: members [0, used) are assigned
};

// Complete construction recipe. Families are ordered: the base family
// (gamma0 / gamma0_prime / omega0, possibly carrying g') first, then the
// selected tailed families. phi maps every block index to an assigned
// (family, member) pair and is injective on members.
struct ConstructionPlan {
    int n = 0;
    int m = 0;
    Variant variant = Variant::c1;
    int s = 0;
    std::vector<int> selected_k; // ascending
    std::vector<int> pivots;     // c2 variants, 1-based
    uint64_t cprime = 0;
    uint64_t assign_seed = 0;
    bool allow_small_n = false;
    bool parity_adjusted = false; // c1 degree control applied

    std::vector<PlanFamily> families;
    std::vector<std::pair<uint32_t, uint32_t>> phi; // block -> (family, member)

    int half() const { return n / 2; }
    uint64_t block_count() const { return uint64_t(1) << half(); }
    Component component_at(uint64_t block) const;
    uint64_t used_total() const;
};

// Fills phi: block indices in increasing order receive the base family in
// member order, then each further family in plan order. A nonzero
// assign_seed applies a deterministic permutation to the block order. For
// c1, keeps |A_{k'}| of the largest selected k odd when possible.
void assign_phi(ConstructionPlan& plan);

// Concatenates the expanded components in block order.
TruthTable build(const ConstructionPlan& plan);

void write_plan(std::ostream& os, const ConstructionPlan& plan);
ConstructionPlan read_plan(std::istream& is);
void write_plan_file(const std::string& path, const ConstructionPlan& plan);
ConstructionPlan read_plan_file(const std::string& path);

} // namespace rbfc
