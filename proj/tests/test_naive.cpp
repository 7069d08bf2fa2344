#include "reven/dft.hpp"
#include "reven/error.hpp"
#include "reven/even.hpp"
#include "reven/naive_dft.hpp"

#include <doctest.h>

#include <complex>
#include <random>

using namespace reven;

namespace {

ComplexTable random_table(std::mt19937_64& rng, i64 r) {
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    ComplexTable t;
    t.r = r;
    for (i64 i = 0; i < r; ++i)
        t.values.emplace_back(dist(rng), dist(rng));
    return t;
}

EvenFunction random_even(std::mt19937_64& rng, i64 r) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rat> vals;
    for (std::size_t i = 0; i < divisors(r).size(); ++i)
        vals.push_back(make_rat(num(rng), den(rng)));
    return make_even(r, std::move(vals));
}

} // namespace

TEST_CASE("character columns: the transform of e_k is r at n = k") {
    for (i64 r : {2, 5, 12, 16, 45}) {
        for (i64 k : {static_cast<i64>(1), r / 2 + 1, r}) {
            ComplexTable hat = dft_naive(additive_character(r, k));
            for (i64 n = 1; n <= r; ++n) {
                std::complex<double> want =
                    (n % r == k % r) ? std::complex<double>(static_cast<double>(r), 0.0)
                                     : std::complex<double>(0.0, 0.0);
                CHECK(std::abs(hat.at(n) - want) <= 1e-9 * static_cast<double>(r));
            }
        }
    }
}

TEST_CASE("naive transform matches the structured transform on even functions") {
    std::mt19937_64 rng(3);
    for (i64 r : {1, 2, 6, 30, 128, 210}) {
        EvenFunction f = random_even(rng, r);
        ComplexTable in = to_complex(expand(f));
        ComplexTable out = dft_naive(in);
        ComplexTable want = to_complex(expand(dft(f)));
        CHECK(max_abs_diff(out, want) <= 1e-9 * l1_norm(in));
    }
}

TEST_CASE("kernels agree when both are available") {
    if (!kernel_available(DftKernel::avx2)) {
        MESSAGE("avx2 not available on this host; scalar-only run");
        CHECK(kernel_available(DftKernel::scalar));
        return;
    }
    std::mt19937_64 rng(9);
    for (i64 r : {1, 3, 17, 64, 255, 512}) {
        ComplexTable t = random_table(rng, r);
        ComplexTable a = dft_naive(t, DftKernel::scalar);
        ComplexTable b = dft_naive(t, DftKernel::avx2);
        CHECK(max_abs_diff(a, b) <= 1e-10 * (1.0 + l1_norm(t)));
    }
}

TEST_CASE("kernel selection errors and bounds") {
    CHECK(kernel_available(DftKernel::scalar));
    CHECK(kernel_available(DftKernel::auto_pick));
    CHECK(kernel_name(DftKernel::scalar) != nullptr);
    if (!kernel_available(DftKernel::avx2)) {
        ComplexTable t;
        t.r = 4;
        t.values.assign(4, {1.0, 0.0});
        CHECK_THROWS_AS(dft_naive(t, DftKernel::avx2), UsageError);
    }
    ComplexTable big;
    big.r = kNaiveDftBound + 1;
    big.values.assign(static_cast<std::size_t>(big.r), {0.0, 0.0});
    CHECK_THROWS_AS(dft_naive(big), BoundError);
}

TEST_CASE("table conversions and indexing") {
    EvenFunction rho = even_rho(6);
    ComplexTable t = to_complex(rho);
    CHECK(t.r == 6);
    CHECK(t.at(1).real() == doctest::Approx(1.0));
    CHECK(t.at(5).real() == doctest::Approx(1.0));
    CHECK(t.at(6).real() == doctest::Approx(0.0));
    CHECK(t.at(7).real() == doctest::Approx(1.0));
    CHECK(t.at(0).real() == doctest::Approx(0.0));
    CHECK(l1_norm(t) == doctest::Approx(2.0));
}
