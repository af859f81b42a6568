#include "rbfc/plan.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rbfc/errors.hpp"
#include "rbfc/seeds.hpp"

namespace rbfc {

const char* variant_name(Variant v) {
    switch (v) {
    case Variant::c1: return "c1";
    case Variant::c2_prime: return "c2-prime";
    case Variant::c2_basic: return "c2-basic";
    case Variant::c3: return "c3";
    }
    return "?";
}

Variant variant_from_name(const std::string& name) {
    if (name == "c1") return Variant::c1;
    if (name == "c2-prime") return Variant::c2_prime;
    if (name == "c2-basic") return Variant::c2_basic;
    if (name == "c3") return Variant::c3;
    throw parse_error("unknown construction variant: " + name);
}

Component ConstructionPlan::component_at(uint64_t block) const {
    auto [fam, member] = phi[block];
    return families[fam].family.member(member);
}

uint64_t ConstructionPlan::used_total() const {
    uint64_t total = 0;
    for (const auto& f : families) total += f.used;
    return total;
}

namespace {

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

void assign_phi(ConstructionPlan& plan) {
    uint64_t blocks = plan.block_count();
    uint64_t remaining = blocks;
    for (auto& pf : plan.families) {
        pf.used = std::min<uint64_t>(pf.family.size(), remaining);
        remaining -= pf.used;
    }
    if (remaining != 0)
        throw infeasible_error("assignment cannot fill all " + std::to_string(blocks) +
                               " blocks");

    if (plan.variant == Variant::c1 && plan.families.size() > 1) {
        // Degree control: the largest selected k realizes degree n/2+max(k,2)
        // when its member count is odd. Shift one unit of deficit out of the
        // base family if needed and possible.
        auto& last = plan.families.back();
        if (last.used % 2 == 0 && last.used < last.family.size() &&
            plan.families[0].used > 0) {
            plan.families[0].used -= 1;
            last.used += 1;
            plan.parity_adjusted = true;
        }
    }

    plan.phi.assign(blocks, {0, 0});
    std::vector<uint64_t> order(blocks);
    for (uint64_t b = 0; b < blocks; ++b) order[b] = b;
    if (plan.assign_seed != 0) {
        uint64_t state = plan.assign_seed;
        for (uint64_t i = blocks - 1; i > 0; --i) {
            uint64_t j = splitmix64(state) % (i + 1);
            std::swap(order[i], order[j]);
        }
    }
    uint64_t pos = 0;
    for (uint32_t fi = 0; fi < plan.families.size(); ++fi) {
        for (uint64_t mi = 0; mi < plan.families[fi].used; ++mi, ++pos)
            plan.phi[order[pos]] = {fi, uint32_t(mi)};
    }
}

TruthTable build(const ConstructionPlan& plan) {
    if (plan.n > table_capacity())
        throw capacity_error("building n=" + std::to_string(plan.n) +
                             " exceeds table capacity");
    TruthTable out(plan.n);
    for (uint64_t b = 0; b < plan.block_count(); ++b)
        expand_into(plan.component_at(b), out, b << plan.half());
    return out;
}

// ---------------------------------------------------------------- plan file

namespace {

std::string mask_hex(uint64_t v) {
    std::ostringstream ss;
    ss << std::hex << v;
    return ss.str();
}

uint64_t parse_mask(const std::string& s) {
    return std::stoull(s, nullptr, 16);
}

void write_family(std::ostream& os, const PlanFamily& pf, size_t idx) {
    const ComponentFamily& f = pf.family;
    os << "family " << idx << " label " << family_label_name(f.label) << " k " << f.k
       << " e " << f.e << " t " << f.t << " m " << f.declared_resiliency << " count "
       << f.size() << " used " << pf.used << "\n";
    if (f.gprime_index) {
        os << "gprime " << idx << " cprime " << mask_hex(f.cprime) << " pivots ";
        bool first = true;
        for (int i = 0; i < f.p; ++i) {
            if ((f.pivot_mask >> i) & 1) {
                if (!first) os << ",";
                os << (i + 1);
                first = false;
            }
        }
        os << "\n";
    }
    for (size_t ti = 0; ti < f.tails.size(); ++ti) {
        const Tail& tail = *f.tails[ti];
        if (tail.kind == TailKind::bent) {
            os << "tail " << idx << " " << ti << " bent " << f.k << " " << tail.degree
               << "\n";
        } else {
            os << "tail " << idx << " " << ti << " seed m " << tail.resiliency << " N "
               << tail.nonlinearity << "\n";
            tail.table.write(os);
        }
    }
    if (!f.member_tail.empty()) {
        os << "membertails " << idx;
        for (uint32_t v : f.member_tail) os << " " << v;
        os << "\n";
    }
    os << "masks " << idx << "\n";
    for (size_t i = 0; i < f.masks.size(); ++i)
        os << mask_hex(f.masks[i]) << ((i + 1) % 16 == 0 || i + 1 == f.masks.size() ? "\n" : " ");
}

} // namespace

void write_plan(std::ostream& os, const ConstructionPlan& plan) {
    os << "rbfc-plan 1\n";
    os << "n " << plan.n << "\n";
    os << "m " << plan.m << "\n";
    os << "variant " << variant_name(plan.variant) << "\n";
    os << "s " << plan.s << "\n";
    os << "selected";
    for (int k : plan.selected_k) os << " " << k;
    os << "\n";
    if (!plan.pivots.empty()) {
        os << "pivots";
        for (int c : plan.pivots) os << " " << c;
        os << "\n";
        os << "cprime " << mask_hex(plan.cprime) << "\n";
    }
    if (plan.assign_seed) os << "assignseed " << plan.assign_seed << "\n";
    if (plan.allow_small_n) os << "allowsmall 1\n";
    if (plan.parity_adjusted) os << "parityadjusted 1\n";
    os << "families " << plan.families.size() << "\n";
    for (size_t i = 0; i < plan.families.size(); ++i) write_family(os, plan.families[i], i);
    os << "phi\n";
    for (uint64_t b = 0; b < plan.phi.size(); ++b)
        os << b << " -> " << plan.phi[b].first << ":" << plan.phi[b].second << "\n";
    os << "end\n";
}

ConstructionPlan read_plan(std::istream& is) {
    ConstructionPlan plan;
    std::string line;
    do {
        if (!std::getline(is, line))
            throw parse_error("not a plan file (missing 'rbfc-plan 1' header)");
    } while (line.empty() || line[0] == '#');
    if (line != "rbfc-plan 1")
        throw parse_error("not a plan file (missing 'rbfc-plan 1' header)");

    size_t family_count = 0;
    auto next_line = [&](std::string& out) {
        do {
            if (!std::getline(is, out)) throw parse_error("plan file truncated");
        } while (out.empty() || out[0] == '#');
    };

    // Header section until "families".
    while (true) {
        next_line(line);
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        bool list_key = false;
        if (key == "n")
            ss >> plan.n;
        else if (key == "m")
            ss >> plan.m;
        else if (key == "variant") {
            std::string v;
            ss >> v;
            plan.variant = variant_from_name(v);
        } else if (key == "s")
            ss >> plan.s;
        else if (key == "selected") {
            list_key = true;
            int k;
            while (ss >> k) plan.selected_k.push_back(k);
        } else if (key == "pivots") {
            list_key = true;
            int c;
            while (ss >> c) plan.pivots.push_back(c);
        } else if (key == "cprime") {
            std::string v;
            ss >> v;
            plan.cprime = parse_mask(v);
        } else if (key == "assignseed")
            ss >> plan.assign_seed;
        else if (key == "allowsmall")
            plan.allow_small_n = true;
        else if (key == "parityadjusted")
            plan.parity_adjusted = true;
        else if (key == "families") {
            ss >> family_count;
            break;
        } else
            throw parse_error("unknown plan header line: " + line);
        if (!list_key && ss.fail()) throw parse_error("malformed plan line: " + line);
    }

    plan.families.resize(family_count);
    size_t parsed_families = 0;
    while (parsed_families < family_count) {
        next_line(line);
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key != "family") throw parse_error("expected family line, got: " + line);
        size_t idx;
        std::string label, word;
        PlanFamily pf;
        ComponentFamily& f = pf.family;
        size_t count = 0;
        ss >> idx >> word >> label >> word >> f.k >> word >> f.e >> word >> f.t >> word >>
            f.declared_resiliency >> word >> count >> word >> pf.used;
        if (ss.fail() || idx >= family_count)
            throw parse_error("malformed family line: " + line);
        f.p = plan.half();
        if (label == "gamma0")
            f.label = FamilyLabel::gamma0;
        else if (label == "gamma_k")
            f.label = FamilyLabel::gamma_k;
        else if (label == "gamma0_prime")
            f.label = FamilyLabel::gamma0_prime;
        else if (label == "omega0")
            f.label = FamilyLabel::omega0;
        else if (label == "omega_k")
            f.label = FamilyLabel::omega_k;
        else
            throw parse_error("unknown family label: " + label);

        // Optional per-family lines until the masks block is consumed.
        std::optional<uint64_t> gprime_mask;
        while (true) {
            next_line(line);
            std::istringstream ls(line);
            std::string lkey;
            ls >> lkey;
            if (lkey == "gprime") {
                size_t gi;
                std::string w, cp, pivots;
                ls >> gi >> w >> cp >> w >> pivots;
                if (ls.fail()) throw parse_error("malformed gprime line: " + line);
                gprime_mask = parse_mask(cp);
                f.cprime = *gprime_mask;
                f.pivot_mask = 0;
                std::istringstream ps(pivots);
                std::string tok;
                while (std::getline(ps, tok, ','))
                    f.pivot_mask |= uint64_t(1) << (std::stoi(tok) - 1);
            } else if (lkey == "tail") {
                size_t fi, ti;
                std::string kind;
                ls >> fi >> ti >> kind;
                if (kind == "bent") {
                    int k, deg;
                    ls >> k >> deg;
                    if (ls.fail()) throw parse_error("malformed bent tail line: " + line);
                    f.tails.push_back(bent_tail(k, deg));
                } else if (kind == "seed") {
                    TruthTable t = TruthTable::read(is);
                    f.tails.push_back(Tail::make(std::move(t), TailKind::resilient));
                } else
                    throw parse_error("unknown tail kind: " + kind);
            } else if (lkey == "membertails") {
                size_t fi;
                ls >> fi;
                uint32_t v;
                while (ls >> v) f.member_tail.push_back(v);
            } else if (lkey == "masks") {
                break;
            } else
                throw parse_error("unexpected line in family block: " + line);
        }
        f.masks.reserve(count);
        while (f.masks.size() < count) {
            next_line(line);
            std::istringstream ms(line);
            std::string tok;
            while (ms >> tok) f.masks.push_back(parse_mask(tok));
        }
        if (f.masks.size() != count) throw parse_error("family mask count mismatch");
        if (gprime_mask) {
            f.gprime_index = f.find_mask(*gprime_mask);
            if (!f.gprime_index) throw parse_error("gprime mask missing from member list");
        }
        int64_t tail_max = 0;
        f.max_member_degree = f.tails.empty() ? 1 : 0;
        for (const auto& tl : f.tails) {
            tail_max = std::max(tail_max, tl->spectrum.max_abs());
            f.max_member_degree = std::max(f.max_member_degree, tl->degree);
        }
        f.max_abs_walsh = f.tails.empty() ? (int64_t(1) << f.p)
                                          : (int64_t(1) << f.t) * tail_max;
        if (f.gprime_index) {
            f.max_member_degree =
                std::max(f.max_member_degree, popcount64(((uint64_t(1) << f.p) - 1) ^
                                                         f.pivot_mask));
        }
        plan.families[idx] = std::move(pf);
        ++parsed_families;
    }

    next_line(line);
    if (line != "phi") throw parse_error("expected phi section, got: " + line);
    plan.phi.assign(plan.block_count(), {0, 0});
    std::vector<std::vector<bool>> seen(plan.families.size());
    for (size_t i = 0; i < plan.families.size(); ++i)
        seen[i].assign(plan.families[i].family.size(), false);
    for (uint64_t b = 0; b < plan.block_count(); ++b) {
        next_line(line);
        std::istringstream ps(line);
        uint64_t block;
        std::string arrow, target;
        ps >> block >> arrow >> target;
        if (ps.fail() || arrow != "->" || block != b)
            throw parse_error("malformed phi line: " + line);
        auto colon = target.find(':');
        if (colon == std::string::npos) throw parse_error("malformed phi target: " + target);
        uint32_t fi = uint32_t(std::stoul(target.substr(0, colon)));
        uint32_t mi = uint32_t(std::stoul(target.substr(colon + 1)));
        if (fi >= plan.families.size() || mi >= plan.families[fi].family.size())
            throw parse_error("phi target out of range: " + target);
        if (seen[fi][mi]) throw parse_error("phi is not injective at " + target);
        seen[fi][mi] = true;
        plan.phi[b] = {fi, mi};
    }
    next_line(line);
    if (line != "end") throw parse_error("missing plan terminator");
    return plan;
}

void write_plan_file(const std::string& path, const ConstructionPlan& plan) {
    std::ofstream os(path);
    if (!os) throw parse_error("cannot write " + path);
    write_plan(os, plan);
}

ConstructionPlan read_plan_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw parse_error("cannot open " + path);
    return read_plan(is);
}

} // namespace rbfc
