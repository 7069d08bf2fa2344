#include "reven/factor.hpp"

#include "reven/error.hpp"

#include <algorithm>
#include <numeric>

namespace reven {

namespace {

constexpr i64 kSieveLimit = 1'000'000;

std::vector<i64> build_sieve() {
    std::vector<bool> composite(kSieveLimit, false);
    std::vector<i64> primes;
    for (i64 p = 2; p < kSieveLimit; ++p) {
        if (composite[p])
            continue;
        primes.push_back(p);
        for (i64 m = p * p; m < kSieveLimit; m += p)
            composite[m] = true;
    }
    return primes;
}

} // namespace

const std::vector<i64>& small_primes() {
    static const std::vector<i64> primes = build_sieve();
    return primes;
}

int Factorization::exponent_of(i64 p) const {
    for (const auto& [q, e] : primes)
        if (q == p)
            return e;
    return 0;
}

Factorization factorize(i64 n, i64 bound) {
    if (n < 1)
        throw UsageError("factorize: n must be >= 1, got " + std::to_string(n));
    if (bound > kFactorBound)
        bound = kFactorBound;
    if (n > bound)
        throw BoundError("factorize: " + std::to_string(n) + " exceeds bound " +
                         std::to_string(bound));
    Factorization f;
    f.n = n;
    i64 rest = n;
    for (i64 p : small_primes()) {
        if (p * p > rest)
            break;
        if (rest % p != 0)
            continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.primes.emplace_back(p, e);
    }
    if (rest > 1)
        f.primes.emplace_back(rest, 1); // sieve-certified prime for n <= 10^12
    return f;
}

bool is_prime(i64 n) {
    if (n < 2)
        return false;
    Factorization f = factorize(n);
    return f.primes.size() == 1 && f.primes[0].second == 1;
}

std::vector<i64> divisors(const Factorization& f) {
    std::vector<i64> ds{1};
    for (const auto& [p, e] : f.primes) {
        std::size_t old = ds.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < old; ++i)
                ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<i64> divisors(i64 n) {
    return divisors(factorize(n));
}

i64 count_divisors(const Factorization& f) {
    i64 t = 1;
    for (const auto& [p, e] : f.primes)
        t *= e + 1;
    return t;
}

i64 gcd_mod(i64 n, i64 r) {
    if (r < 1)
        throw UsageError("gcd_mod: modulus must be >= 1");
    i64 m = n % r;
    if (m < 0)
        m += r;
    return std::gcd(m, r); // gcd(0, r) == r
}

} // namespace reven
