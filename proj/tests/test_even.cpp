#include "reven/arith.hpp"
#include "reven/error.hpp"
#include "reven/even.hpp"
#include "reven/ramanujan.hpp"

#include <doctest.h>

#include <vector>

using namespace reven;

namespace {

std::vector<Rat> rats(std::vector<long> v) {
    std::vector<Rat> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("make_even validation and gcd evaluation") {
    EvenFunction f = make_even(6, rats({10, 20, 30, 40}));
    CHECK(f.divs == std::vector<i64>{1, 2, 3, 6});
    CHECK(f(1) == Rat(10));
    CHECK(f(5) == Rat(10));
    CHECK(f(4) == Rat(20));
    CHECK(f(9) == Rat(30));
    CHECK(f(0) == Rat(40));
    CHECK(f(-3) == Rat(30));
    CHECK(f(600) == Rat(40));
    CHECK(f.at_divisor(3) == Rat(30));
    CHECK_THROWS_AS(f.at_divisor(4), InternalError);
    CHECK_THROWS_AS(make_even(6, rats({1, 2})), UsageError);
    CHECK_THROWS_AS(make_even(0, {}), UsageError);
}

TEST_CASE("named members of the divisor basis") {
    CHECK(even_rho(6).values == rats({1, 0, 0, 0}));
    CHECK(even_eps(6).values == rats({0, 0, 0, 1}));
    CHECK(even_eta(6).values == rats({0, 0, 0, 6}));
    CHECK(even_gd(12, 3).values == rats({0, 0, 1, 0, 0, 0}));
    CHECK(even_constant(4, make_rat(7, 2)).values ==
          std::vector<Rat>(3, make_rat(7, 2)));
    CHECK(even_ramanujan(12, 6).values == rats({1, -1, -2, -1, 2, 2}));
    CHECK(even_alternating(6).values == rats({-1, 1, -1, 1}));
    CHECK_THROWS_AS(even_alternating(5), UsageError);
    CHECK_THROWS_AS(even_gd(12, 5), UsageError);
    CHECK_THROWS_AS(even_ramanujan(12, 5), UsageError);
    CHECK(completely_even(af_tau(), 12).values == rats({1, 2, 2, 3, 4, 6}));
}

TEST_CASE("expand and from_periodic round trip") {
    EvenFunction rho = even_rho(6);
    PeriodicTable t = expand(rho);
    CHECK(t.r == 6);
    CHECK(t.values == rats({1, 0, 0, 0, 1, 0}));
    CHECK(t.at(7) == Rat(1));
    CHECK(t.at(0) == Rat(0));
    CHECK(from_periodic(t) == rho);

    PeriodicTable bad = make_periodic(6, rats({1, 0, 0, 0, 2, 0}));
    CHECK_THROWS_AS(from_periodic(bad), UsageError);
}

TEST_CASE("mobius core and reconstruction") {
    EvenFunction rho = even_rho(6);
    CHECK(mobius_core(rho) == rats({1, -1, -1, 1}));
    CHECK(core_to_even(6, mobius_core(rho)) == rho);

    EvenFunction f = make_even(12, rats({3, -1, 4, 0, 2, 9}));
    CHECK(core_to_even(12, mobius_core(f)) == f);

    // the core of tau(gcd(n, r)) is identically 1 on the divisors
    EvenFunction tg = completely_even(af_tau(), 60);
    for (const Rat& c : mobius_core(tg))
        CHECK(c == Rat(1));
}

TEST_CASE("Ramanujan-Fourier coefficients of the coprimality indicator") {
    FourierCoefficients a = fourier_coefficients(even_rho(6));
    CHECK(a.divs == std::vector<i64>{1, 2, 3, 6});
    CHECK(a.alpha == std::vector<Rat>{make_rat(1, 3), make_rat(-1, 3), make_rat(-1, 6),
                                      make_rat(1, 6)});
    CHECK(from_coefficients(a) == even_rho(6));

    // general reconstruction
    EvenFunction f = make_even(20, rats({5, -2, 0, 7, 1, 3}));
    CHECK(from_coefficients(fourier_coefficients(f)) == f);
}

TEST_CASE("Cauchy convolution: unity, commutativity, coefficient law") {
    EvenFunction f = make_even(12, rats({3, -1, 4, 0, 2, 9}));
    EvenFunction unit = even_eps(12);
    CHECK(cauchy_convolve(f, unit) == f);
    CHECK(cauchy_convolve(unit, f) == f);

    EvenFunction h = completely_even(af_tau(), 12);
    CHECK(cauchy_convolve(f, h) == cauchy_convolve(h, f));

    FourierCoefficients af = fourier_coefficients(f);
    FourierCoefficients ah = fourier_coefficients(h);
    FourierCoefficients afh = fourier_coefficients(cauchy_convolve(f, h));
    for (std::size_t i = 0; i < af.alpha.size(); ++i)
        CHECK(afh.alpha[i] == Rat(12) * af.alpha[i] * ah.alpha[i]);

    CHECK_THROWS_AS(cauchy_convolve(f, even_eps(6)), UsageError);
}

TEST_CASE("even_add and even_scale") {
    EvenFunction f = even_rho(6);
    EvenFunction g = even_eps(6);
    CHECK(even_add(f, g).values == rats({1, 0, 0, 1}));
    CHECK(even_scale(Rat(-2), f).values == rats({-2, 0, 0, 0}));
    CHECK_THROWS_AS(even_add(f, even_eps(4)), UsageError);
}

TEST_CASE("JSON round trip") {
    EvenFunction f = make_even(12, {Rat(3), make_rat(-1, 2), Rat(4), Rat(0), Rat(2),
                                    make_rat(9, 7)});
    std::string text = even_to_json(f);
    CHECK(even_from_json(text) == f);
    CHECK_THROWS_AS(even_from_json("{"), UsageError);
    CHECK_THROWS_AS(even_from_json("{\"r\": 6}"), UsageError);
    CHECK_THROWS_AS(even_from_json(
                        R"({"r": 6, "divisors": [1,2,3], "values": ["1","2","3"]})"),
                    UsageError);
}

TEST_CASE("periodic table constructors") {
    CHECK(periodic_delta(5, 2).at(2) == Rat(1));
    CHECK(periodic_delta(5, 2).at(7) == Rat(1));
    CHECK(periodic_delta(5, 2).at(3) == Rat(0));
    CHECK_THROWS_AS(make_periodic(3, rats({1, 2})), UsageError);
}
