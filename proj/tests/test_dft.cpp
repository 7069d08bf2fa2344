#include "reven/arith.hpp"
#include "reven/dft.hpp"
#include "reven/error.hpp"
#include "reven/even.hpp"
#include "reven/ramanujan.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace reven;

namespace {

std::vector<Rat> rats(std::vector<long> v) {
    std::vector<Rat> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

EvenFunction random_even(std::mt19937_64& rng, i64 r) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rat> vals;
    for (i64 d : divisors(r)) {
        (void)d;
        vals.push_back(make_rat(num(rng), den(rng)));
    }
    return make_even(r, std::move(vals));
}

} // namespace

TEST_CASE("frozen transforms") {
    // the coprimality indicator transforms to the Ramanujan sum
    CHECK(dft(even_rho(6)).values == rats({1, -1, -2, 2}));
    CHECK(dft(even_rho(6)) == even_ramanujan(6, 6));

    // the point mass at the zero class transforms to the constant 1
    CHECK(dft(even_eps(6)) == even_constant(6, Rat(1)));

    // the constant 1 transforms to r at multiples of r, zero elsewhere
    CHECK(dft(even_constant(6, Rat(1))) == even_eta(6));

    // tau(gcd(n, 6))
    CHECK(dft(completely_even(af_tau(), 6)).values == rats({1, 3, 4, 12}));
}

TEST_CASE("dual identity: dft of rho_r is c_r") {
    for (i64 r = 1; r <= 60; ++r)
        CHECK(dft(even_rho(r)) == even_ramanujan(r, r));
}

TEST_CASE("involution, inverse, and the core route") {
    std::mt19937_64 rng(42);
    for (i64 r : {1, 2, 6, 12, 36, 60, 97, 120}) {
        EvenFunction f = random_even(rng, r);
        EvenFunction hat = dft(f);
        CHECK(dft_via_core(f) == hat);
        CHECK(idft(hat) == f);
        EvenFunction twice = dft(hat);
        for (std::size_t i = 0; i < f.values.size(); ++i)
            CHECK(twice.values[i] == Rat(static_cast<long>(r)) * f.values[i]);
    }
}

TEST_CASE("dft_core matches the transform's Mobius core") {
    std::mt19937_64 rng(7);
    for (i64 r : {6, 12, 45}) {
        EvenFunction f = random_even(rng, r);
        CHECK(dft_core(f) == mobius_core(dft(f)));
    }
}

TEST_CASE("alternating transform closed form") {
    CHECK(alternating_dft(6).values == rats({0, 0, 6, 0}));
    CHECK(alternating_dft(2).values == rats({2, 0}));
    for (i64 r = 2; r <= 100; r += 2)
        CHECK(alternating_dft(r) == dft(even_alternating(r)));
    CHECK_THROWS_AS(alternating_dft(5), UsageError);
}

TEST_CASE("RamanujanTable agrees with the direct routes") {
    auto table = RamanujanTable::for_modulus(360);
    CHECK(table->modulus() == 360);
    for (i64 q : table->divs()) {
        CHECK(table->phi(q) == euler_phi(q));
        CHECK(table->mu(q) == mobius(q));
        for (i64 d : table->divs())
            CHECK(table->c(q, d) == ramanujan_sum(q, d));
        for (i64 n = 0; n <= 30; ++n)
            CHECK(table->c(q, n) == ramanujan_sum(q, n));
    }
}

TEST_CASE("congruence counts: frozen values") {
    CHECK(count_congruence_solutions(4, 2, 2) == 2);
    CHECK(count_congruence_solutions(3, 2, 1) == 1);
    CHECK(count_congruence_solutions(5, 1, 5) == 0);
    CHECK(count_congruence_solutions(5, 1, 2) == 1);
    CHECK(count_congruence_solutions(1, 3, 0) == 1);
    // x1+x2 = 0 (mod 4), both odd units: 1+3 and 3+1
    CHECK(count_congruence_solutions(4, 2, 0) == 2);
}

TEST_CASE("congruence counts match brute force and the Cauchy square") {
    for (i64 r = 1; r <= 18; ++r) {
        for (int k = 1; k <= 3; ++k) {
            std::vector<i64> brute = count_congruence_bruteforce(r, k);
            for (i64 n = 0; n < r; ++n)
                CHECK(count_congruence_solutions(r, k, n) ==
                      brute[static_cast<std::size_t>(n)]);
        }
        // N_r(n, 2) is the Cauchy square of the coprimality indicator
        EvenFunction sq = cauchy_convolve(even_rho(r), even_rho(r));
        for (i64 n = 0; n < r; ++n)
            CHECK(Rat(static_cast<long>(count_congruence_solutions(r, 2, n))) == sq(n));
    }
    CHECK_THROWS_AS(count_congruence_bruteforce(kCongruenceOracleBound + 1, 2), BoundError);
    CHECK_THROWS_AS(count_congruence_solutions(0, 2, 1), UsageError);
    CHECK_THROWS_AS(count_congruence_solutions(4, 0, 1), UsageError);
}

TEST_CASE("Anderson-Apostol sums") {
    AndersonApostol aa = anderson_apostol({af_id(), af_one(), 6});
    CHECK(aa.s.values == rats({1, 3, 4, 12}));      // sigma(gcd(n, 6))
    CHECK(aa.s_hat.values == rats({6, 12, 12, 24})); // 6 tau(gcd(n, 6))
    CHECK(aa.s_hat == dft(aa.s));

    // g = mu, h = one gives S = rho (the classic Ramanujan representation)
    AndersonApostol ar = anderson_apostol({af_one(), af_mobius(), 6});
    CHECK(ar.s == even_rho(6));
}

TEST_CASE("Cohen inversion round trip") {
    std::mt19937_64 rng(11);
    for (i64 r : {1, 6, 12, 40, 90}) {
        EvenFunction g = random_even(rng, r);
        EvenFunction f = cohen_forward(g);
        CHECK(cohen_invert(g) == g); // recovers the coefficients exactly
        // forward expansion agrees with the coefficient reconstruction
        FourierCoefficients a;
        a.r = r;
        a.divs = g.divs;
        a.alpha = g.values;
        CHECK(f == from_coefficients(a));
    }
}

TEST_CASE("Holder closed form for eps recovers the Ramanujan sum") {
    for (i64 r = 1; r <= 40; ++r)
        for (i64 n = 1; n <= 40; ++n)
            CHECK(holder_closed_form(af_eps(), r, n) ==
                  Rat(static_cast<long>(ramanujan_sum(r, n))));
}

TEST_CASE("Holder closed form for one recovers r at multiples of r") {
    for (i64 r = 1; r <= 40; ++r)
        for (i64 n = 1; n <= 2 * r; ++n) {
            Rat want = n % r == 0 ? Rat(static_cast<long>(r)) : Rat(0);
            CHECK(holder_closed_form(af_one(), r, n) == want);
        }
}

TEST_CASE("Holder closed form rejects bad declarations") {
    // tau is multiplicative but not strongly multiplicative
    CHECK_THROWS_AS(holder_closed_form(af_tau(), 12, 1), UsageError);
    // id has F(p) = p = -(1-p)+1... fine at p=2: F(2)=2 != -1; but id is
    // not strongly multiplicative either
    CHECK_THROWS_AS(holder_closed_form(af_id(), 12, 1), UsageError);
}

TEST_CASE("classification of completely even transform sequences") {
    ClassifyReport tau_rep = classify_completely_even_dft(af_tau(), 40);
    CHECK(tau_rep.dft_completely_even);
    REQUIRE(tau_rep.tau_scale.has_value());
    CHECK(*tau_rep.tau_scale == Rat(1));

    ClassifyReport tau3 = classify_completely_even_dft(af_scale(Rat(3), af_tau()), 40);
    CHECK(tau3.dft_completely_even);
    REQUIRE(tau3.tau_scale.has_value());
    CHECK(*tau3.tau_scale == Rat(3));

    ClassifyReport eps_rep = classify_completely_even_dft(af_eps(), 40);
    CHECK(!eps_rep.dft_completely_even);
    CHECK(!eps_rep.witness.empty());

    ClassifyReport mu_rep = classify_completely_even_dft(af_mobius(), 40);
    CHECK(!mu_rep.dft_completely_even);
}

TEST_CASE("sequence multiplicativity laws") {
    for (const ArithFunction* F : {&af_eps(), &af_one(), &af_tau()}) {
        MultReport rep = check_sequence_multiplicativity(completely_even_sequence(*F), 16);
        CHECK(rep.pass());
        CHECK(rep.checked > 0);
    }
}

TEST_CASE("divisor-sum identities hold for completely even sequences") {
    for (const ArithFunction* F : {&af_eps(), &af_one(), &af_tau()}) {
        SequenceSpec seq = completely_even_sequence(*F);
        for (i64 r = 1; r <= 24; ++r)
            for (i64 n = 1; n <= 24; ++n)
                for (const IdentityCheck& c : divisor_sum_identities(seq, n, r))
                    CHECK(c.ok);
    }
}

TEST_CASE("square detector values for the coprimality indicator") {
    SequenceSpec rho = completely_even_sequence(af_eps());
    for (i64 r : {1, 4, 9, 16, 36, 100}) {
        bool found = false;
        for (const IdentityCheck& c : divisor_sum_identities(rho, 1, r))
            if (c.name == "square-detector") {
                found = true;
                CHECK(c.ok);
            }
        CHECK(found);
    }
}
