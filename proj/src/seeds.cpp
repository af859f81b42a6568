#include "rbfc/seeds.hpp"

#include <fstream>
#include <sstream>

#include "rbfc/errors.hpp"

namespace rbfc {

namespace {

// "profile n=4 m=0 d=- N=4"
SeedRecord parse_header(const std::string& line, size_t record_no) {
    std::istringstream ss(line);
    std::string word;
    ss >> word; // "profile"
    SeedRecord rec;
    bool have_n = false, have_m = false, have_nl = false;
    while (ss >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos)
            throw parse_error("seed record " + std::to_string(record_no) +
                              ": malformed field '" + word + "'");
        std::string key = word.substr(0, eq);
        std::string val = word.substr(eq + 1);
        try {
            if (key == "n") {
                rec.n = std::stoi(val);
                have_n = true;
            } else if (key == "m") {
                rec.declared_m = std::stoi(val);
                have_m = true;
            } else if (key == "d") {
                if (val != "-") rec.declared_d = std::stoi(val);
            } else if (key == "N") {
                rec.declared_nl = std::stoll(val);
                have_nl = true;
            } else {
                throw parse_error("seed record " + std::to_string(record_no) +
                                  ": unknown field '" + key + "'");
            }
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error("seed record " + std::to_string(record_no) +
                              ": bad value for '" + key + "'");
        }
    }
    if (!have_n || !have_m || !have_nl)
        throw parse_error("seed record " + std::to_string(record_no) +
                          ": header needs n=, m=, N=");
    return rec;
}

} // namespace

std::vector<SeedRecord> load_seed_functions(std::istream& is) {
    std::vector<SeedRecord> out;
    std::string line;
    size_t record_no = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++record_no;
        if (line.rfind("profile", 0) != 0)
            throw parse_error("seed record " + std::to_string(record_no) +
                              ": expected 'profile' header, got: " + line);
        SeedRecord rec = parse_header(line, record_no);
        rec.table = TruthTable::read(is);
        if (rec.table.n != rec.n)
            throw parse_error("seed record " + std::to_string(record_no) +
                              ": table width disagrees with header");
        rec.measured = profile(rec.table);
        auto fail = [&](const std::string& param, const std::string& detail) {
            throw verification_error("seed record " + std::to_string(record_no) + ": " +
                                     param + " mismatch (" + detail + ")");
        };
        if (rec.measured.resiliency < rec.declared_m)
            fail("resiliency", "measured " + std::to_string(rec.measured.resiliency) +
                                   " below declared " + std::to_string(rec.declared_m));
        if (rec.measured.nonlinearity != rec.declared_nl)
            fail("nonlinearity", "measured " + std::to_string(rec.measured.nonlinearity) +
                                     " != declared " + std::to_string(rec.declared_nl));
        if (rec.declared_d && rec.measured.degree != *rec.declared_d)
            fail("degree", "measured " + std::to_string(rec.measured.degree) +
                               " != declared " + std::to_string(*rec.declared_d));
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<SeedRecord> load_seed_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw parse_error("cannot open seed file " + path);
    return load_seed_functions(is);
}

void write_seed_record(std::ostream& os, const SeedRecord& rec) {
    os << "profile n=" << rec.n << " m=" << rec.declared_m << " d=";
    if (rec.declared_d)
        os << *rec.declared_d;
    else
        os << "-";
    os << " N=" << rec.declared_nl << "\n";
    rec.table.write(os);
}

std::shared_ptr<const Tail> seed_tail(const SeedRecord& rec) {
    return Tail::make(rec.table, TailKind::resilient);
}

} // namespace rbfc
