#include <set>
#include <sstream>

#include "doctest.h"
#include "rbfc/construct.hpp"
#include "rbfc/errors.hpp"

using namespace rbfc;

TEST_CASE("example assignment counts at (16,1)") {
    ConstructOptions opt;
    opt.plan_only = true;
    ConstructResult res = construct1(16, 1, opt);
    const ConstructionPlan& plan = res.plan;
    REQUIRE(plan.families.size() == 2);
    CHECK(plan.families[0].used == 247);
    CHECK(plan.families[1].used == 9); // odd: degree 10 is realized
    CHECK(!plan.parity_adjusted);
    CHECK(plan.used_total() == 256);
    // phi injectivity
    std::set<std::pair<uint32_t, uint32_t>> seen(plan.phi.begin(), plan.phi.end());
    CHECK(seen.size() == plan.phi.size());
    // contiguous fill: base family first in mask order
    CHECK(plan.phi[0] == std::pair<uint32_t, uint32_t>{0, 0});
    CHECK(plan.phi[247] == std::pair<uint32_t, uint32_t>{1, 0});
}

TEST_CASE("parity adjustment keeps the top family odd") {
    ConstructOptions opt;
    opt.plan_only = true;
    ConstructResult res = construct1(18, 1, opt); // deficit 10 is even
    CHECK(res.plan.parity_adjusted);
    CHECK(res.plan.families.back().used % 2 == 1);
    CHECK(res.plan.used_total() == 512);
}

TEST_CASE("build profile at (12,1)") {
    ConstructResult res = construct1(12, 1);
    REQUIRE(res.measured.has_value());
    CHECK(res.measured->resiliency >= 1);
    CHECK(res.measured->nonlinearity >= 2000);
    CHECK(res.measured->degree == 8);
    CHECK(res.measured->almost_optimal);
}

TEST_CASE("plan file round trip") {
    ConstructOptions opt;
    opt.plan_only = true;
    for (auto make : {+[](const ConstructOptions& o) { return construct1(16, 1, o); },
                      +[](const ConstructOptions& o) { return construct2(12, 1, o); },
                      +[](const ConstructOptions& o) { return construct2(18, 1, o); }}) {
        ConstructResult res = make(opt);
        std::stringstream ss;
        write_plan(ss, res.plan);
        ConstructionPlan back = read_plan(ss);
        std::stringstream ss2;
        write_plan(ss2, back);
        CHECK(ss.str() == ss2.str());
        CHECK(back.phi == res.plan.phi);
        CertifiedProfile c1 = certify(res.plan);
        CertifiedProfile c2 = certify(back);
        CHECK(c1.nl_lower == c2.nl_lower);
        CHECK(c1.nl_exact == c2.nl_exact);
        CHECK(c1.degree_lower == c2.degree_lower);
    }
}

TEST_CASE("seeded c3 plan round trips with embedded tails") {
    TruthTable h(4);
    for (uint64_t x = 0; x < 16; ++x) h.set(x, ((x & (x >> 1)) & 1) ^ ((x >> 2) & 1));
    SeedRecord rec;
    rec.n = 4;
    rec.declared_m = 0;
    rec.declared_nl = 4;
    rec.table = h;
    ConstructOptions opt;
    opt.plan_only = true;
    ConstructResult res = construct3(12, 1, {rec}, opt);
    std::stringstream ss;
    write_plan(ss, res.plan);
    ConstructionPlan back = read_plan(ss);
    std::stringstream ss2;
    write_plan(ss2, back);
    CHECK(ss.str() == ss2.str());
}

TEST_CASE("permuted assignment keeps certificates valid") {
    ConstructOptions opt;
    opt.assign_seed = 12345;
    ConstructResult res = construct1(12, 1, opt);
    ConstructResult plain = construct1(12, 1);
    CHECK(res.plan.phi != plain.plan.phi);
    REQUIRE(res.measured.has_value());
    CHECK(res.measured->resiliency >= 1);
    CHECK(BigUint(uint64_t(res.measured->nonlinearity)) >= res.cert.nl_lower);
    REQUIRE(res.cert.nl_exact.has_value());
    CHECK(*res.cert.nl_exact == res.measured->nonlinearity);

    // The exact-vs-exhaustive agreement is enforced inside construct for
    // every built variant; exercise it across seeds and variants.
    for (uint64_t seed : {1ull, 99ull}) {
        ConstructOptions o2;
        o2.assign_seed = seed;
        CHECK(construct2(16, 1, o2).measured->degree == 14);
        CHECK(construct1(16, 2, o2).measured->resiliency >= 2);
    }
}

TEST_CASE("malformed plan files") {
    std::stringstream no_magic("bogus\n");
    CHECK_THROWS_AS(read_plan(no_magic), Error);
    ConstructOptions opt;
    opt.plan_only = true;
    ConstructResult res = construct1(12, 1, opt);
    std::stringstream ss;
    write_plan(ss, res.plan);
    std::string text = ss.str();
    // any prefix missing the terminator must fail cleanly, never crash
    for (int pct = 10; pct <= 90; pct += 10) {
        std::stringstream ts(text.substr(0, text.size() * pct / 100));
        CHECK_THROWS_AS(read_plan(ts), Error);
    }
    // a non-injective phi is rejected
    std::string doctored = text;
    auto pos = doctored.find("\n1 -> 0:1\n");
    REQUIRE(pos != std::string::npos);
    doctored.replace(pos, 10, "\n1 -> 0:0\n");
    std::stringstream ds(doctored);
    CHECK_THROWS_AS(read_plan(ds), Error);
}
