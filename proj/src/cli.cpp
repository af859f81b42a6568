#include "rbfc/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rbfc/anf.hpp"
#include "rbfc/construct.hpp"
#include "rbfc/errors.hpp"
#include "rbfc/search.hpp"
#include "rbfc/tables.hpp"

namespace rbfc {

namespace {

void emit_stamp(std::ostream& os, bool stamp) {
    if (!stamp) return;
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    os << "# generated " << std::put_time(std::gmtime(&now), "%FT%TZ") << "\n";
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

void report_profile(std::ostream& os, const FunctionProfile& p, const std::string& prefix) {
    os << prefix << "m=" << p.resiliency << "\n";
    os << prefix << "d=" << p.degree << "\n";
    os << prefix << "N=" << p.nonlinearity << "\n";
    os << prefix << "balanced=" << bool_str(p.balanced) << "\n";
    os << prefix << "almost_optimal=" << bool_str(p.almost_optimal) << "\n";
}

void report_cert(std::ostream& os, const CertifiedProfile& cert) {
    os << "cert_m>=" << cert.resiliency_at_least << "\n";
    os << "cert_N>=" << cert.nl_lower.to_string() << "\n";
    os << "cert_N_terms=" << cert.nl_lower_terms << "\n";
    if (cert.nl_exact) os << "cert_N_exact=" << *cert.nl_exact << "\n";
    os << "cert_d_lower=" << cert.degree_lower << "\n";
    os << "cert_d_upper=" << cert.degree_upper << "\n";
    os << "cert_mode=" << (cert.exact_mode ? "structural-exact" : "structural-bound") << "\n";
}

void report_plan_summary(std::ostream& os, const ConstructionPlan& plan) {
    os << "variant=" << variant_name(plan.variant) << "\n";
    os << "n=" << plan.n << "\n";
    os << "m=" << plan.m << "\n";
    os << "s=" << plan.s << "\n";
    os << "selected=";
    for (size_t i = 0; i < plan.selected_k.size(); ++i)
        os << (i ? "," : "") << plan.selected_k[i];
    os << "\n";
    for (size_t i = 0; i < plan.families.size(); ++i) {
        const auto& pf = plan.families[i];
        os << "family" << i << "=" << family_label_name(pf.family.label);
        if (!pf.family.tails.empty()) os << " k=" << pf.family.k << " e=" << pf.family.e;
        os << " used=" << pf.used << " of=" << pf.family.size() << "\n";
    }
}

int cmd_analyze(const std::string& path, bool stamp, std::ostream& out) {
    TruthTable t = TruthTable::read_file(path);
    emit_stamp(out, stamp);
    out << "n=" << t.n << "\n";
    FunctionProfile p = profile(t);
    report_profile(out, p, "");
    out << "parseval=" << bool_str(parseval_check(fast_walsh(t))) << "\n";
    return 0;
}

struct ConstructArgs {
    std::string variant;
    int n = 0;
    int m = 0;
    std::vector<std::string> seed_files;
    std::string plan_path, table_path;
    bool plan_only = false;
    bool vary_tails = false;
    bool optimize_degree = false;
    bool allow_small = false;
    bool stamp = false;
    uint64_t assign_seed = 0;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
    ConstructOptions opt;
    opt.plan_only = a.plan_only;
    opt.vary_tails = a.vary_tails;
    opt.optimize_degree = a.optimize_degree;
    opt.assign_seed = a.assign_seed;
    opt.gen.allow_small_n = a.allow_small;

    if (a.variant != "c1" && a.variant != "c2" && a.variant != "c3")
        throw parse_error("variant must be c1, c2 or c3");
    if (a.variant != "c3" && !a.seed_files.empty())
        throw parse_error("--seeds only applies to variant c3");

    std::vector<SeedRecord> seeds;
    for (const auto& f : a.seed_files)
        for (auto& rec : load_seed_file(f)) seeds.push_back(std::move(rec));

    ConstructResult res;
    if (a.variant == "c1")
        res = construct1(a.n, a.m, opt);
    else if (a.variant == "c2")
        res = construct2(a.n, a.m, opt);
    else
        res = construct3(a.n, a.m, seeds, opt);

    std::string stem = a.variant + "_" + std::to_string(a.n) + "_" + std::to_string(a.m);
    std::string plan_path = a.plan_path.empty() ? stem + ".plan" : a.plan_path;
    {
        std::ofstream os(plan_path);
        if (!os) throw parse_error("cannot write " + plan_path);
        emit_stamp(os, a.stamp);
        write_plan(os, res.plan);
    }

    emit_stamp(out, a.stamp);
    report_plan_summary(out, res.plan);
    report_cert(out, res.cert);
    if (res.prime_route_terms) out << "route_prime=" << *res.prime_route_terms << "\n";
    if (res.basic_route_terms) out << "route_basic=" << *res.basic_route_terms << "\n";
    out << "plan_file=" << plan_path << "\n";

    if (res.table) {
        std::string table_path = a.table_path.empty() ? stem + ".tt" : a.table_path;
        std::ofstream os(table_path);
        if (!os) throw parse_error("cannot write " + table_path);
        emit_stamp(os, a.stamp);
        res.table->write(os);
        out << "table_file=" << table_path << "\n";
    }
    if (res.measured) {
        report_profile(out, *res.measured, "measured_");
        out << "check=ok\n";
    }
    return 0;
}

int cmd_certify(const std::string& path, bool stamp, std::ostream& out) {
    ConstructionPlan plan = read_plan_file(path);
    emit_stamp(out, stamp);
    report_plan_summary(out, plan);
    report_cert(out, certify(plan));
    return 0;
}

int cmd_tables(int m_lo, int m_hi, int n_lo, int n_hi, bool stamp, std::ostream& out) {
    std::optional<std::pair<int, int>> range;
    if (n_lo > 0 && n_hi > 0) range = {n_lo, n_hi};
    auto rows = reproduce_tables(m_lo, m_hi, range);
    emit_stamp(out, stamp);
    write_tables_report(out, rows);
    size_t match = 0, improved = 0, flagged = 0, below = 0;
    for (const auto& r : rows) {
        switch (r.status) {
        case RowStatus::match: ++match; break;
        case RowStatus::improved: ++improved; break;
        case RowStatus::below: ++below; break;
        case RowStatus::lead_anomaly:
        case RowStatus::degree_anomaly: ++flagged; break;
        default: break;
        }
    }
    out << "summary rows=" << rows.size() << " match=" << match << " improved=" << improved
        << " flagged=" << flagged << " below=" << below << "\n";
    return below == 0 ? 0 : 5;
}

int cmd_export(const std::string& input, const std::string& format, const std::string& out_path,
               bool stamp, std::ostream& out) {
    std::ofstream file;
    std::ostream* os = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw parse_error("cannot write " + out_path);
        os = &file;
    }

    std::ifstream probe(input);
    if (!probe) throw parse_error("cannot open " + input);
    std::string first;
    while (std::getline(probe, first) && (first.empty() || first[0] == '#')) {
    }
    probe.close();
    bool is_plan = first.rfind("rbfc-plan", 0) == 0;

    if (format == "report") {
        if (!is_plan) throw parse_error("report export needs a plan file");
        ConstructionPlan plan = read_plan_file(input);
        emit_stamp(*os, stamp);
        report_plan_summary(*os, plan);
        report_cert(*os, certify(plan));
        return 0;
    }
    TruthTable t = is_plan ? build(read_plan_file(input)) : TruthTable::read_file(input);
    emit_stamp(*os, stamp);
    if (format == "hex") {
        t.write(*os);
    } else if (format == "anf") {
        *os << anf(t).to_string() << "\n";
    } else {
        throw parse_error("format must be hex, anf or report");
    }
    return 0;
}

int cmd_search(int n, int m, int64_t nl, std::optional<int> degree, size_t limit,
               const std::string& out_path, bool stamp, std::ostream& out) {
    SearchQuery q;
    q.n = n;
    q.min_resiliency = m;
    q.nonlinearity = nl;
    q.degree = degree;
    q.limit = limit;
    auto found = search_functions(q);
    std::ofstream file;
    std::ostream* os = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw parse_error("cannot write " + out_path);
        os = &file;
    }
    emit_stamp(*os, stamp);
    for (const auto& rec : found) write_seed_record(*os, rec);
    if (found.empty()) {
        out << "found=0\n";
        return 5;
    }
    if (os != &out) out << "found=" << found.size() << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"construct and analyze resilient Boolean functions"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "profile a truth-table file");
    std::string analyze_file;
    bool analyze_stamp = false;
    analyze->add_option("file", analyze_file, "truth-table file")->required();
    analyze->add_flag("--stamp", analyze_stamp, "add a timestamp comment");

    // construct
    auto* construct = app.add_subcommand("construct", "build an (n, m) resilient function");
    ConstructArgs ca;
    construct->add_option("variant", ca.variant, "c1 | c2 | c3")->required();
    construct->add_option("n", ca.n, "variable count (even)")->required();
    construct->add_option("m", ca.m, "resiliency order")->required();
    construct->add_option("--seeds", ca.seed_files, "seed-function file (repeatable)");
    construct->add_option("--plan", ca.plan_path, "plan output path");
    construct->add_option("--table", ca.table_path, "truth-table output path");
    construct->add_flag("--plan-only", ca.plan_only, "skip building the 2^n table");
    construct->add_flag("--vary-tails", ca.vary_tails, "cycle tails across members");
    construct->add_flag("--optimize-degree", ca.optimize_degree,
                        "c3: assign a degree-optimized n/2-variable block");
    construct->add_flag("--allow-small-n", ca.allow_small, "permit 8 <= n < 12");
    construct->add_option("--assign-seed", ca.assign_seed,
                          "permute the block assignment deterministically");
    construct->add_flag("--stamp", ca.stamp, "add a timestamp comment");

    // certify
    auto* certify_cmd = app.add_subcommand("certify", "re-derive the certificate of a plan");
    std::string certify_file;
    bool certify_stamp = false;
    certify_cmd->add_option("plan", certify_file, "plan file")->required();
    certify_cmd->add_flag("--stamp", certify_stamp, "add a timestamp comment");

    // tables
    auto* tables_cmd = app.add_subcommand("tables", "reproduce the published parameter tables");
    int m_lo = 1, m_hi = 4, n_lo = 0, n_hi = 0;
    bool tables_stamp = false;
    tables_cmd->add_option("--m-min", m_lo, "lowest resiliency order");
    tables_cmd->add_option("--m-max", m_hi, "highest resiliency order");
    tables_cmd->add_option("--n-min", n_lo, "lowest n (default: published ranges)");
    tables_cmd->add_option("--n-max", n_hi, "highest n");
    tables_cmd->add_flag("--stamp", tables_stamp, "add a timestamp comment");

    // export
    auto* export_cmd = app.add_subcommand("export", "convert a table or plan");
    std::string export_input, export_format, export_out;
    bool export_stamp = false;
    export_cmd->add_option("input", export_input, "table or plan file")->required();
    export_cmd->add_option("--format", export_format, "hex | anf | report")->required();
    export_cmd->add_option("--out", export_out, "output path (default stdout)");
    export_cmd->add_flag("--stamp", export_stamp, "add a timestamp comment");

    // search
    auto* search_cmd = app.add_subcommand("search", "exhaustive small-function search");
    int sn = 4, sm = 0;
    int64_t snl = 0;
    int sdeg = -1;
    size_t slimit = 1;
    std::string search_out;
    bool search_stamp = false;
    search_cmd->add_option("--vars", sn, "variable count (<= 4)")->required();
    search_cmd->add_option("--resiliency", sm, "minimum resiliency order")->required();
    search_cmd->add_option("--nl", snl, "exact nonlinearity")->required();
    search_cmd->add_option("--degree", sdeg, "exact degree (optional)");
    search_cmd->add_option("--limit", slimit, "max records (default 1)");
    search_cmd->add_option("--out", search_out, "seed file path (default stdout)");
    search_cmd->add_flag("--stamp", search_stamp, "add a timestamp comment");

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargs;
        cargs.push_back("rbfc");
        for (const auto& a : argv) cargs.push_back(a.c_str());
        app.parse(int(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: usage: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_file, analyze_stamp, out);
        if (*construct) return cmd_construct(ca, out);
        if (*certify_cmd) return cmd_certify(certify_file, certify_stamp, out);
        if (*tables_cmd) return cmd_tables(m_lo, m_hi, n_lo, n_hi, tables_stamp, out);
        if (*export_cmd)
            return cmd_export(export_input, export_format, export_out, export_stamp, out);
        if (*search_cmd)
            return cmd_search(sn, sm, snl, sdeg >= 0 ? std::optional<int>(sdeg) : std::nullopt,
                              slimit, search_out, search_stamp, out);
    } catch (const Error& e) {
        err << "error: " << category_name(e.category) << ": " << e.what() << "\n";
        switch (e.category) {
        case ErrorCategory::parse: return 2;
        case ErrorCategory::capacity: return 3;
        case ErrorCategory::infeasible: return 4;
        case ErrorCategory::verification: return 5;
        }
    }
    return 1;
}

} // namespace rbfc
