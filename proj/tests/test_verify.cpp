#include "reven/error.hpp"
#include "reven/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace reven;

TEST_CASE("suite registry") {
    std::vector<std::string> names = suite_names();
    CHECK(!names.empty());
    for (const char* expected :
         {"ramanujan-oracles", "dft-oracle", "dft-core-route", "parseval", "alternating",
          "dual-ramanujan", "square-detector", "congruence", "holder", "classification",
          "partial-sums", "harmonic", "series", "divisor-sums", "kernels"})
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    CHECK(suite_exists("parseval"));
    CHECK(!suite_exists("nonsense"));
}

TEST_CASE("unknown suite is a usage error") {
    VerifyOptions opt;
    CHECK_THROWS_AS(run_suite("nonsense", opt), UsageError);
}

TEST_CASE("individual suites pass at reduced bounds") {
    VerifyOptions opt;
    opt.rmax = 30;
    opt.nmax = 30;
    opt.count = 40;
    opt.seed = 5;
    for (const char* name : {"ramanujan-oracles", "ramanujan-divisor-sum", "even-roundtrip",
                             "dft-core-route", "dual-ramanujan", "parseval", "alternating",
                             "cauchy-coefficients", "special-rows", "mean-values"}) {
        SuiteResult res = run_suite(name, opt);
        CAPTURE(name);
        CHECK(res.pass());
        CHECK(res.cases > 0);
        CHECK(res.suite == name);
        CHECK(!res.notes.empty());
    }
}

TEST_CASE("randomized suites are deterministic in the seed") {
    VerifyOptions opt;
    opt.rmax = 40;
    opt.count = 30;
    opt.seed = 123;
    SuiteResult a = run_suite("dft-oracle", opt);
    SuiteResult b = run_suite("dft-oracle", opt);
    CHECK(a.cases == b.cases);
    CHECK(a.failures == b.failures);
    CHECK(a.notes == b.notes);
}

TEST_CASE("congruence suite at its oracle bound") {
    VerifyOptions opt;
    opt.rmax = 12;
    opt.nmax = 3;
    SuiteResult res = run_suite("congruence", opt);
    CHECK(res.pass());
    CHECK(res.cases > 0);
}
