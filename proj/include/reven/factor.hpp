#pragma once

#include "reven/rational.hpp"

#include <utility>
#include <vector>

namespace reven {

// Inputs to factorize() are capped here; above the cap trial division
// over the sieve no longer certifies primality of the cofactor.
inline constexpr i64 kFactorBound = 1'000'000'000'000; // 10^12

struct Factorization {
    i64 n = 1;
    std::vector<std::pair<i64, int>> primes; // (p, e), p ascending

    int exponent_of(i64 p) const;
};

// Primes below 10^6, shared, built once.
const std::vector<i64>& small_primes();

bool is_prime(i64 n);

// Deterministic factorization by trial division over small_primes().
// Complete for n <= kFactorBound: any cofactor surviving the sieve is
// prime.  Throws UsageError for n < 1, BoundError for n > bound.
Factorization factorize(i64 n, i64 bound = kFactorBound);

// All positive divisors in ascending order (canonical divisor order
// everywhere in this library).
std::vector<i64> divisors(const Factorization& f);
std::vector<i64> divisors(i64 n);

i64 count_divisors(const Factorization& f);

// gcd(n mod r, r) for r >= 1 and any integer n; gcd(0, r) = r.
i64 gcd_mod(i64 n, i64 r);

} // namespace reven
