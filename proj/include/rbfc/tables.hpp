#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rbfc/bigint.hpp"
#include "rbfc/plan.hpp"

namespace rbfc {

// Closed-form certificate for the degree-optimized construction, computed
// without materializing families; works at any even n.
struct BoundRoute {
    int n = 0;
    int m = 0;
    Variant variant = Variant::c2_prime;
    std::vector<int> selected_k;
    BigUint nl_lower;
    std::string terms;
    int degree = 0; // n - m - 1
};

BoundRoute construction1_bound(int n, int m);
// Best of the g'-family route and the monomial route; throws infeasible_error.
BoundRoute degree_optimized_bound(int n, int m);

// A published (n, m, d, N) entry; N = 2^lead - sum 2^e over sub_exponents.
struct PrintedEntry {
    int n = 0, m = 0, d = 0;
    int lead = 0;
    std::vector<int> sub_exponents;
    BigUint value() const;
    std::string terms() const;
};

std::optional<PrintedEntry> printed_entry(int n, int m);
std::vector<int> printed_n_values(int m);

enum class RowStatus { match, improved, below, lead_anomaly, degree_anomaly, infeasible_row, unlisted };
const char* row_status_name(RowStatus s);

struct TableRow {
    int n = 0, m = 0;
    std::optional<BoundRoute> computed;
    std::optional<PrintedEntry> printed;
    RowStatus status = RowStatus::unlisted;
};

TableRow evaluate_row(int n, int m);
// Rows for every published n of each m in [m_lo, m_hi], or every even n in
// the explicit range when given.
std::vector<TableRow> reproduce_tables(int m_lo, int m_hi,
                                       std::optional<std::pair<int, int>> n_range = {});
void write_tables_report(std::ostream& os, const std::vector<TableRow>& rows);

} // namespace rbfc
