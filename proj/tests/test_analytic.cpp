#include "reven/analytic.hpp"
#include "reven/arith.hpp"
#include "reven/dft.hpp"
#include "reven/error.hpp"
#include "reven/even.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace reven;

TEST_CASE("exact harmonic numbers") {
    CHECK(harmonic_exact(0) == Rat(0));
    CHECK(harmonic_exact(1) == Rat(1));
    CHECK(harmonic_exact(2) == make_rat(3, 2));
    CHECK(harmonic_exact(5) == make_rat(137, 60));
    CHECK(harmonic_exact(10) == make_rat(7381, 2520));
    // consistency of the divide-and-conquer evaluation
    Rat h100 = harmonic_exact(100);
    Rat acc(0);
    for (i64 m = 1; m <= 100; ++m)
        acc += make_rat(1, m);
    CHECK(h100 == acc);
}

TEST_CASE("lambda convolution of named functions") {
    LogLinear a = lambda_convolve(even_rho(4));
    CHECK(a.str() == "log(2)");

    LogLinear b = lambda_convolve(even_constant(12, Rat(1)));
    CHECK(b.str() == "2*log(2) + log(3)");

    CHECK(lambda_convolve(even_rho(1)).is_zero());
}

TEST_CASE("partial sums of the transform: frozen cases") {
    PartialSumReport a = partial_sum_dft(even_rho(6), Rat(6));
    CHECK(a.sum == Rat(0));
    CHECK(a.main_term == Rat(0));
    CHECK(a.remainder == Rat(0));

    PartialSumReport b = partial_sum_dft(even_constant(6, Rat(1)), Rat(6));
    CHECK(b.sum == Rat(6));
    CHECK(b.main_term == Rat(6));
    CHECK(b.remainder == Rat(0));

    PartialSumReport c = partial_sum_dft(completely_even(af_tau(), 4), Rat(8));
    CHECK(c.sum == Rat(24));
    CHECK(c.main_term == Rat(24));
    CHECK(c.remainder == Rat(0));

    PartialSumReport d = partial_sum_dft(completely_even(af_tau(), 4), make_rat(9, 2));
    CHECK(d.sum == Rat(12));
    CHECK(d.main_term == make_rat(27, 2));
    CHECK(d.remainder == make_rat(-3, 2));
    CHECK(d.bound == Rat(7));
}

TEST_CASE("remainder vanishes exactly at multiples of the modulus") {
    for (i64 r : {2, 6, 9, 20})
        for (i64 mult = 1; mult <= 5; ++mult) {
            EvenFunction f = completely_even(af_sigma(), r);
            PartialSumReport rep = partial_sum_dft(f, Rat(static_cast<long>(mult * r)));
            CHECK(rep.remainder == Rat(0));
            CHECK(rep.sum == rep.main_term);
        }
}

TEST_CASE("remainder respects the divisor bound") {
    EvenFunction f = make_even(12, {Rat(3), make_rat(-1, 2), Rat(4), Rat(0), Rat(2),
                                    make_rat(9, 7)});
    for (i64 x = 1; x <= 60; ++x) {
        PartialSumReport rep = partial_sum_dft(f, Rat(static_cast<long>(x)));
        CHECK(abs(rep.remainder) <= rep.bound);
    }
}

TEST_CASE("mean values") {
    MeanValues mv = mean_value(completely_even(af_tau(), 4));
    CHECK(mv.f_mean == make_rat(7, 4));
    CHECK(mv.dft_mean == Rat(3));

    MeanValues rho = mean_value(even_rho(6));
    CHECK(rho.f_mean == make_rat(2, 6)); // phi(6)/6
    CHECK(rho.dft_mean == Rat(0));
}

TEST_CASE("harmonic partial sums, exact route") {
    CHECK(harmonic_sum_exact(even_rho(6), 6) == make_rat(7, 60));
    // brute comparison for a mixed function
    EvenFunction f = make_even(12, {Rat(3), make_rat(-1, 2), Rat(4), Rat(0), Rat(2),
                                    make_rat(9, 7)});
    EvenFunction hat = dft(f);
    for (i64 x : {1, 7, 12, 35}) {
        Rat direct(0);
        for (i64 n = 1; n <= x; ++n)
            direct += hat(n) / Rat(static_cast<long>(n));
        CHECK(harmonic_sum_exact(f, x) == direct);
    }
}

TEST_CASE("harmonic convergence for the coprimality indicator") {
    HarmonicReport rep = harmonic_convergence(even_rho(4), 500, 20000);
    CHECK(rep.leading_zero);
    LogLinear want;
    want.add(2, Rat(-1)); // the limit -log 2
    CHECK(rep.limit == want);
    CHECK(rep.final_gap <= 1e-2);
    CHECK(rep.residual_decay);
    REQUIRE(!rep.points.empty());
    CHECK(rep.points.back().x == 20000);
}

TEST_CASE("harmonic report for a nonvanishing leading coefficient") {
    HarmonicReport rep = harmonic_convergence(even_constant(1, Rat(1)), 100, 1000);
    CHECK(!rep.leading_zero);
    // fhat = 1 for r = 1, so the estimate log x + gamma tracks H(x)
    CHECK(std::abs(rep.points.back().residual) <= 1e-3);
}

TEST_CASE("truncated zeta") {
    SeriesValue z2 = zeta_trunc(2.0, 20000);
    double pi = 3.14159265358979323846;
    CHECK(std::abs(z2.value - pi * pi / 6.0) <= z2.error + 1e-12);
    CHECK(z2.error <= 1e-8);
    CHECK_THROWS_AS(zeta_trunc(1.0, 1000), UsageError);
    CHECK_THROWS_AS(zeta_trunc(2.0, 5), UsageError);
}

TEST_CASE("Dirichlet series identities at moderate truncation") {
    for (const char* name : {"eps", "one", "tau"}) {
        ArithFunction F = arith_by_name(name);
        double aF = series_abscissa(F.name);
        std::vector<SeriesReport> reps = dirichlet_series_check(F, aF, 6, 6, 2.0, 2.0, 20000);
        REQUIRE(reps.size() == 3);
        CHECK(reps[0].identity == "sum-over-r");
        CHECK(reps[1].identity == "sum-over-n");
        CHECK(reps[2].identity == "double-sum");
        for (const SeriesReport& rep : reps) {
            CAPTURE(rep.identity);
            CAPTURE(rep.F);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("series preconditions") {
    CHECK_THROWS_AS(series_over_r(arith_by_name("one"), 1.0, 6, 1.0, 20000), UsageError);
    CHECK_THROWS_AS(series_over_n(arith_by_name("one"), 1.0, 6, 0.5, 20000), UsageError);
    CHECK_THROWS_AS(series_double(arith_by_name("one"), 1.0, 2.0, 1.0, 20000), UsageError);
    CHECK_THROWS_AS(series_over_r(arith_by_name("sigma"), 2.0, 6, 3.0, 20000), UsageError);
    CHECK_THROWS_AS(series_abscissa("sigma"), UsageError);
    CHECK(series_abscissa("eps") == doctest::Approx(0.0));
    CHECK(series_abscissa("tau") == doctest::Approx(1.0));
}
