#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rbfc/component.hpp"
#include "rbfc/profile.hpp"

namespace rbfc {

// One record of a seed-function file:
//   profile n=<int> m=<int> d=<int|-> N=<int>
//   n=<int>
//   <hex>
struct SeedRecord {
    int n = 0;
    int declared_m = 0;
    std::optional<int> declared_d;
    int64_t declared_nl = 0;
    TruthTable table;
    FunctionProfile measured;
};

// Loads and re-verifies every record: measured resiliency must reach the
// declared m, nonlinearity must match exactly, and the degree must match
// when declared. Throws a verification error naming the record and the
// failing parameter.
std::vector<SeedRecord> load_seed_functions(std::istream& is);
std::vector<SeedRecord> load_seed_file(const std::string& path);

void write_seed_record(std::ostream& os, const SeedRecord& rec);

std::shared_ptr<const Tail> seed_tail(const SeedRecord& rec);

} // namespace rbfc
