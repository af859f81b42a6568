#include "rbfc/tables.hpp"

#include <algorithm>
#include <ostream>

#include "rbfc/certify.hpp"
#include "rbfc/errors.hpp"
#include "rbfc/families.hpp"
#include "rbfc/solver.hpp"

namespace rbfc {

namespace {

std::vector<FamilyOption> bent_count_options(int n, int m) {
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

BoundRoute make_route(int n, int m, Variant variant, const SelectorResult& sel,
                      bool monomial_cost) {
    BoundRoute r;
    r.n = n;
    r.m = m;
    r.variant = variant;
    r.selected_k = sel.selected_k;
    BigUint sub = BigUint::pow2(unsigned(n / 2)) + sel.walsh_penalty;
    sub.div_u32(2);
    if (monomial_cost) sub += BigUint::pow2(unsigned(m + 1));
    r.nl_lower = BigUint::pow2(unsigned(n - 1)) - sub;
    r.terms = pow2_term_string(n - 1, sub);
    r.degree = n - m - 1;
    return r;
}

} // namespace

BoundRoute construction1_bound(int n, int m) {
    if (n % 2 != 0 || n < 12 || m < 1)
        throw infeasible_error("bounds need even n >= 12 and m >= 1");
    SelectorResult sel = solve_selector(assignment_deficit(n, m), bent_count_options(n, m));
    BoundRoute r = make_route(n, m, Variant::c1, sel, false);
    r.degree = n / 2 + std::max(2, sel.selected_k.empty() ? 2 : sel.selected_k.back());
    return r;
}

BoundRoute degree_optimized_bound(int n, int m) {
    if (n % 2 != 0 || n < 12 || m < 1)
        throw infeasible_error("bounds need even n >= 12 and m >= 1");
    BigUint deficit = assignment_deficit(n, m);
    std::optional<BoundRoute> basic, prime;
    try {
        SelectorResult sel = solve_selector(deficit, bent_count_options(n, m));
        basic = make_route(n, m, Variant::c2_basic, sel, true);
    } catch (const Error& e) {
        if (e.category != ErrorCategory::infeasible) throw;
    }
    try {
        BigUint d2 = deficit + BigUint::pow2(unsigned(n / 2 - m - 1)) - BigUint(1);
        SelectorResult sel = solve_selector(d2, bent_count_options(n, m));
        prime = make_route(n, m, Variant::c2_prime, sel, false);
    } catch (const Error& e) {
        if (e.category != ErrorCategory::infeasible) throw;
    }
    if (!basic && !prime)
        throw infeasible_error("no degree-optimized route at n=" + std::to_string(n) +
                               " m=" + std::to_string(m));
    if (prime && (!basic || !(basic->nl_lower > prime->nl_lower))) return *prime;
    return *basic;
}

// ------------------------------------------------------------ printed data

BigUint PrintedEntry::value() const {
    BigUint v = BigUint::pow2(unsigned(lead));
    for (int e : sub_exponents) v -= BigUint::pow2(unsigned(e));
    return v;
}

std::string PrintedEntry::terms() const {
    std::string out = "2^" + std::to_string(lead);
    for (int e : sub_exponents) out += "-2^" + std::to_string(e);
    return out;
}

namespace {

// One formula row: for n in [lo, hi] with n % 4 == parity,
// N = 2^{n-1} - 2^{n/2-1} - sum_i 2^{(n+off_i)/4} - 2^{m+1}.
struct FormulaRow {
    int m;
    int parity; // n mod 4
    int lo, hi;
    std::vector<int> offs;
};

const std::vector<FormulaRow>& formula_rows() {
    static const std::vector<FormulaRow> rows = {
        {1, 0, 12, 20, {4}},      {1, 0, 24, 112, {8}},     {1, 0, 116, 132, {8, 4}},
        {1, 0, 136, 136, {8, 4, 0}}, {1, 0, 140, 492, {12}}, {1, 0, 496, 512, {12, 4}},
        {1, 2, 14, 50, {6}},      {1, 2, 54, 58, {6, 2}},   {1, 2, 62, 238, {10}},
        {1, 2, 242, 246, {10, 2}}, {1, 2, 250, 290, {10, 6}}, {1, 2, 294, 298, {10, 6, 2}},

        {2, 0, 16, 16, {8}},      {2, 0, 20, 40, {12}},     {2, 0, 44, 44, {12, 8}},
        {2, 0, 48, 84, {16}},     {2, 0, 88, 88, {16, 8}},  {2, 0, 92, 96, {16, 12}},
        {2, 0, 100, 176, {20}},
        {2, 2, 18, 26, {10}},     {2, 2, 30, 58, {14}},     {2, 2, 62, 66, {14, 10}},
        {2, 2, 70, 122, {18}},

        {3, 0, 20, 20, {12, 8}},  {3, 0, 24, 32, {16}},     {3, 0, 36, 36, {16, 12}},
        {3, 0, 40, 56, {20}},     {3, 0, 60, 60, {20, 16}}, {3, 0, 64, 88, {24}},
        {3, 0, 92, 92, {24, 16}}, {3, 0, 96, 96, {24, 20}}, {3, 0, 100, 144, {28}},
        {3, 2, 22, 26, {14}},     {3, 2, 30, 42, {18}},     {3, 2, 46, 46, {18, 14}},
        {3, 2, 52, 70, {22}},     {3, 2, 74, 74, {22, 18}}, {3, 2, 78, 78, {22, 18, 14}},
        {3, 2, 82, 114, {26}},

        {4, 0, 28, 32, {20}},     {4, 0, 36, 48, {24}},     {4, 0, 52, 52, {24, 20}},
        {4, 0, 56, 68, {28}},     {4, 0, 72, 72, {28, 20, 16}}, {4, 0, 76, 100, {32}},
        {4, 2, 26, 26, {18}},     {4, 2, 30, 38, {22}},     {4, 2, 42, 42, {22, 18}},
        {4, 2, 46, 58, {26}},     {4, 2, 62, 62, {26, 22}}, {4, 2, 66, 82, {30}},
        {4, 2, 86, 86, {30, 22, 18, 14}}, {4, 2, 90, 90, {30, 26, 22}},
        {4, 2, 94, 118, {34}},
    };
    return rows;
}

// Explicit published entries (m >= 5): n, m, d, then the exponents
// subtracted from 2^{n-1}. The (34,6) leading exponent is reproduced as
// printed (23, not 33).
struct ExplicitEntry {
    int n, m, d, lead;
    std::vector<int> subs;
};

const std::vector<ExplicitEntry>& explicit_entries() {
    static const std::vector<ExplicitEntry> entries = {
        {30, 5, 24, 29, {14, 13}},
        {36, 5, 30, 35, {17, 15, 6}},
        {38, 5, 32, 37, {18, 16}},
        {42, 5, 36, 41, {20, 17, 14, 6}},
        {44, 5, 38, 43, {21, 18, 6}},
        {48, 5, 42, 47, {23, 19, 6}},
        {54, 5, 48, 53, {26, 21, 6}},
        {58, 5, 52, 57, {28, 22, 21, 6}},
        {60, 5, 54, 59, {29, 23, 6}},
        {64, 5, 48, 63, {31, 24, 6}},
        {70, 5, 64, 69, {34, 26, 6}},
        {74, 5, 68, 73, {36, 27, 24, 6}},
        {76, 5, 70, 75, {37, 28, 6}},
        {80, 5, 74, 79, {39, 29, 6}},
        {84, 5, 78, 83, {41, 30, 6}},
        {88, 5, 82, 87, {43, 31, 30, 6}},
        {90, 5, 84, 89, {44, 32, 6}},
        {94, 5, 88, 93, {46, 33, 6}},
        {98, 5, 92, 97, {48, 34, 32, 6}},
        {100, 5, 94, 99, {49, 35, 6}},

        {34, 6, 27, 23, {16, 15}},
        {40, 6, 33, 39, {19, 17, 16, 7}},
        {42, 6, 35, 41, {20, 18}},
        {48, 6, 41, 47, {23, 20, 7}},
        {52, 6, 45, 51, {25, 22}},
        {54, 6, 47, 53, {26, 22, 7}},
        {60, 6, 53, 59, {29, 24, 7}},
        {64, 6, 47, 63, {31, 25, 24, 7}},
        {66, 6, 59, 65, {32, 26, 7}},
        {70, 6, 63, 69, {34, 27, 7}},
        {76, 6, 69, 75, {37, 29, 7}},
        {80, 6, 73, 79, {39, 30, 29, 7}},
        {82, 6, 75, 81, {40, 31, 7}},
        {86, 6, 79, 85, {42, 32, 7}},
        {90, 6, 83, 89, {44, 33, 32, 7}},
        {92, 6, 85, 91, {45, 34, 7}},
        {96, 6, 89, 95, {47, 35, 7}},
        {100, 6, 93, 99, {49, 36, 35, 7}},

        {200, 8, 191, 199, {99, 68, 9}},
        {500, 10, 489, 499, {249, 153, 11}},

        {100, 21, 78, 99, {49, 48}},
        {200, 45, 154, 199, {99, 98}},
        {184, 38, 145, 183, {91, 89, 87, 86}},
        {516, 116, 399, 515, {255, 253}},
        {832, 200, 631, 831, {415, 414, 413}},
        {10000, 2475, 7524, 9999, {4999, 4998, 4997, 4996}},
    };
    return entries;
}

} // namespace

std::optional<PrintedEntry> printed_entry(int n, int m) {
    if (n % 2 == 0) {
        for (const auto& row : formula_rows()) {
            if (row.m != m || n % 4 != row.parity || n < row.lo || n > row.hi) continue;
            PrintedEntry e;
            e.n = n;
            e.m = m;
            e.d = n - m - 1;
            e.lead = n - 1;
            e.sub_exponents.push_back(n / 2 - 1);
            for (int off : row.offs) e.sub_exponents.push_back((n + off) / 4);
            e.sub_exponents.push_back(m + 1);
            return e;
        }
    }
    for (const auto& ent : explicit_entries()) {
        if (ent.n != n || ent.m != m) continue;
        PrintedEntry e;
        e.n = n;
        e.m = m;
        e.d = ent.d;
        e.lead = ent.lead;
        e.sub_exponents = ent.subs;
        return e;
    }
    return std::nullopt;
}

std::vector<int> printed_n_values(int m) {
    std::vector<int> out;
    for (const auto& row : formula_rows()) {
        if (row.m != m) continue;
        for (int n = row.lo; n <= row.hi; n += 2)
            if (n % 4 == row.parity) out.push_back(n);
    }
    for (const auto& ent : explicit_entries())
        if (ent.m == m) out.push_back(ent.n);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const char* row_status_name(RowStatus s) {
    switch (s) {
    case RowStatus::match: return "match";
    case RowStatus::improved: return "improved";
    case RowStatus::below: return "BELOW-PRINTED";
    case RowStatus::lead_anomaly: return "FLAG-lead-exponent";
    case RowStatus::degree_anomaly: return "FLAG-degree";
    case RowStatus::infeasible_row: return "infeasible";
    case RowStatus::unlisted: return "unlisted";
    }
    return "?";
}

TableRow evaluate_row(int n, int m) {
    TableRow row;
    row.n = n;
    row.m = m;
    row.printed = printed_entry(n, m);
    try {
        row.computed = degree_optimized_bound(n, m);
    } catch (const Error& e) {
        if (e.category != ErrorCategory::infeasible) throw;
        row.status = RowStatus::infeasible_row;
        return row;
    }
    if (!row.printed) {
        row.status = RowStatus::unlisted;
        return row;
    }
    if (row.printed->lead != n - 1)
        row.status = RowStatus::lead_anomaly;
    else if (row.printed->d != n - m - 1)
        row.status = RowStatus::degree_anomaly;
    else {
        BigUint printed_value = row.printed->value();
        if (row.computed->nl_lower == printed_value)
            row.status = RowStatus::match;
        else if (row.computed->nl_lower > printed_value)
            row.status = RowStatus::improved;
        else
            row.status = RowStatus::below;
    }
    return row;
}

std::vector<TableRow> reproduce_tables(int m_lo, int m_hi,
                                       std::optional<std::pair<int, int>> n_range) {
    std::vector<TableRow> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        if (n_range) {
            for (int n = n_range->first + (n_range->first % 2); n <= n_range->second; n += 2)
                rows.push_back(evaluate_row(n, m));
        } else {
            for (int n : printed_n_values(m)) rows.push_back(evaluate_row(n, m));
        }
    }
    return rows;
}

void write_tables_report(std::ostream& os, const std::vector<TableRow>& rows) {
    for (const auto& row : rows) {
        os << "n=" << row.n << " m=" << row.m;
        if (row.computed)
            os << " d=" << row.computed->degree << " computed=" << row.computed->terms
               << " route=" << variant_name(row.computed->variant);
        else
            os << " d=- computed=-";
        os << " printed=" << (row.printed ? row.printed->terms() : "-");
        if (row.printed && row.printed->d != row.n - row.m - 1)
            os << " printed_d=" << row.printed->d;
        os << " status=" << row_status_name(row.status) << "\n";
    }
}

} // namespace rbfc
