#include "reven/arith.hpp"
#include "reven/error.hpp"
#include "reven/factor.hpp"
#include "reven/ramanujan.hpp"

#include <doctest.h>

#include <numeric>
#include <vector>

using namespace reven;

TEST_CASE("frozen small tables") {
    // c_1 is identically 1
    for (i64 n = 0; n <= 10; ++n)
        CHECK(ramanujan_sum(1, n) == 1);

    // c_6 over a full period
    const std::vector<i64> c6 = {1, -1, -2, -1, 1, 2};
    for (i64 n = 1; n <= 6; ++n)
        CHECK(ramanujan_sum(6, n) == c6[static_cast<std::size_t>(n - 1)]);

    // c_4 over a full period plus the zero class
    CHECK(ramanujan_sum(4, 0) == 2);
    CHECK(ramanujan_sum(4, 1) == 0);
    CHECK(ramanujan_sum(4, 2) == -2);
    CHECK(ramanujan_sum(4, 3) == 0);
    CHECK(ramanujan_sum(4, 4) == 2);

    // prime modulus: p-1 on multiples of p, otherwise -1
    for (i64 p : {2, 3, 5, 7, 11, 13}) {
        CHECK(ramanujan_sum(p, p) == p - 1);
        CHECK(ramanujan_sum(p, 1) == -1);
        CHECK(ramanujan_sum(p, p + 1) == -1);
    }

    // prime squares: c_{p^2}(p) = -p
    CHECK(ramanujan_sum(4, 2) == -2);
    CHECK(ramanujan_sum(9, 3) == -3);
    CHECK(ramanujan_sum(25, 5) == -5);
}

TEST_CASE("zero argument gives the totient") {
    for (i64 q = 1; q <= 120; ++q) {
        CHECK(ramanujan_sum(q, 0) == euler_phi(q));
        CHECK(ramanujan_sum_holder(q, 0) == euler_phi(q));
    }
}

TEST_CASE("three routes agree on a dense grid") {
    for (i64 q = 1; q <= 60; ++q)
        for (i64 n = 0; n <= 60; ++n) {
            i64 a = ramanujan_sum(q, n);
            i64 b = ramanujan_sum_holder(q, n);
            i64 c = ramanujan_sum_exponential(q, n);
            CHECK(a == b);
            CHECK(a == c);
        }
}

TEST_CASE("periodicity and evenness in n") {
    for (i64 q : {5, 8, 12, 30}) {
        for (i64 n = 0; n <= 2 * q; ++n) {
            CHECK(ramanujan_sum(q, n) == ramanujan_sum(q, n + q));
            CHECK(ramanujan_sum(q, n) == ramanujan_sum(q, -n));
            CHECK(ramanujan_sum(q, n) == ramanujan_sum(q, gcd_mod(n, q)));
        }
    }
}

TEST_CASE("full-period sum vanishes for q > 1") {
    for (i64 q = 2; q <= 100; ++q) {
        i64 s = 0;
        for (i64 n = 1; n <= q; ++n)
            s += ramanujan_sum(q, n);
        CHECK(s == 0);
    }
}

TEST_CASE("multiplicative in the modulus for fixed n") {
    for (i64 q : {2, 3, 4, 5, 8, 9})
        for (i64 s : {3, 5, 7, 11})
            for (i64 n = 0; n <= 20; ++n) {
                if (std::gcd(q, s) != 1)
                    continue;
                CHECK(ramanujan_sum(q * s, n) ==
                      ramanujan_sum(q, n) * ramanujan_sum(s, n));
            }
}

TEST_CASE("exponential route bounds and tolerance") {
    CHECK_THROWS_AS(ramanujan_sum_exponential(kExponentialOracleBound + 1, 1), BoundError);
    // an absurdly tight tolerance must be reported as numeric failure,
    // not silently rounded
    CHECK_THROWS_AS(ramanujan_sum_exponential(9973, 17, 1e-18), IdentityViolation);
    CHECK(ramanujan_sum_exponential(9973, 17) == ramanujan_sum(9973, 17));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(ramanujan_sum(0, 1), UsageError);
    CHECK_THROWS_AS(ramanujan_sum_holder(-3, 1), UsageError);
    CHECK_THROWS_AS(ramanujan_sum_exponential(0, 1), UsageError);
}
