#pragma once

#include "reven/arith.hpp"
#include "reven/factor.hpp"
#include "reven/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace reven {

// A gcd-periodic function mod r, stored by its values on the divisors
// of r (ascending divisor order is canonical everywhere).
struct EvenFunction {
    i64 r = 1;
    std::vector<i64> divs;   // divisors of r, ascending
    std::vector<Rat> values; // values[i] = f(divs[i])

    std::size_t index_of(i64 d) const; // d must divide r
    const Rat& at_divisor(i64 d) const;
    Rat operator()(i64 n) const; // f(n) = f(gcd(n, r)), any integer n
    bool operator==(const EvenFunction&) const = default;
};

EvenFunction make_even(i64 r, std::vector<Rat> divisor_values);
EvenFunction make_even_by(i64 r, const std::function<Rat(i64)>& on_divisor);

// Named members of B_r.
EvenFunction even_rho(i64 r);               // indicator of gcd(n,r) = 1
EvenFunction even_gd(i64 r, i64 d);         // indicator of gcd(n,r) = d
EvenFunction even_eps(i64 r);               // indicator of r | n (Cauchy unity)
EvenFunction even_eta(i64 r);               // r * [r | n]
EvenFunction even_ramanujan(i64 r, i64 q);  // n -> c_q(n), q | r
EvenFunction even_alternating(i64 r);       // (-1)^n, defined for even r
EvenFunction even_constant(i64 r, const Rat& c);
EvenFunction completely_even(const ArithFunction& F, i64 r); // F(gcd(n,r))

EvenFunction even_add(const EvenFunction& f, const EvenFunction& g);
EvenFunction even_scale(const Rat& c, const EvenFunction& f);

// A plain periodic function mod r tabulated on residues 1..r (index r
// is the zero class).
struct PeriodicTable {
    i64 r = 1;
    std::vector<Rat> values; // values[i] = t(i+1)

    const Rat& at(i64 n) const; // n reduced mod r
    bool operator==(const PeriodicTable&) const = default;
};

PeriodicTable make_periodic(i64 r, std::vector<Rat> values);
PeriodicTable periodic_delta(i64 r, i64 k); // 1 at n == k (mod r)
PeriodicTable expand(const EvenFunction& f);

// Divisor-compression with a full evenness check; throws UsageError
// naming the first residue where t(n) != t(gcd(n,r)).
EvenFunction from_periodic(const PeriodicTable& t);

// f' = mu * f on the divisors of r.  For r-even f this determines f
// via f(n) = sum over d | gcd(n,r) of f'(d).
std::vector<Rat> mobius_core(const EvenFunction& f);

// Inverse direction: given values g(d) on divisors of r, the function
// n -> sum over d | gcd(n,r) of g(d), which is r-even with core g.
EvenFunction core_to_even(i64 r, const std::vector<Rat>& core);

struct FourierCoefficients {
    i64 r = 1;
    std::vector<i64> divs;
    std::vector<Rat> alpha; // alpha[i] = coefficient of c_{divs[i]}

    bool operator==(const FourierCoefficients&) const = default;
};

// Ramanujan-Fourier coefficients of f, computed two independent ways
// (direct double divisor sum, and dft(f)(r/d)/r) and cross-checked;
// disagreement is an InternalError.  Reconstruction through
// from_coefficients is exact.
FourierCoefficients fourier_coefficients(const EvenFunction& f);
EvenFunction from_coefficients(const FourierCoefficients& a); // sum alpha(d) c_d(n)

// Cauchy convolution (f (*) h)(n) = sum over a mod r of f(a)h(n-a).
// Computed from the definition; the transform product law
// dft(f(*)h) = dft(f)*dft(h) is asserted on the result.
EvenFunction cauchy_convolve(const EvenFunction& f, const EvenFunction& h);

// JSON schema: {"r": int, "divisors": [ints], "values": ["p/q", ...]}.
std::string even_to_json(const EvenFunction& f);
EvenFunction even_from_json(const std::string& text);

} // namespace reven
