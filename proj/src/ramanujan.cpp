#include "reven/ramanujan.hpp"

#include "reven/arith.hpp"
#include "reven/error.hpp"
#include "reven/factor.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace reven {

i64 ramanujan_sum(i64 q, i64 n) {
    if (q < 1)
        throw UsageError("ramanujan_sum: q must be >= 1");
    i64 g = gcd_mod(n, q);
    i64 acc = 0;
    for (i64 d : divisors(g))
        acc += d * mobius(q / d);
    return acc;
}

i64 ramanujan_sum_holder(i64 q, i64 n) {
    if (q < 1)
        throw UsageError("ramanujan_sum_holder: q must be >= 1");
    i64 g = gcd_mod(n, q);
    i64 m = q / g;
    int mu_m = mobius(m);
    if (mu_m == 0)
        return 0;
    i64 phi_q = euler_phi(q);
    i64 phi_m = euler_phi(m);
    if (phi_q % phi_m != 0)
        throw InternalError("holder: phi(" + std::to_string(q) + ") not divisible by phi(" +
                            std::to_string(m) + ")");
    return mu_m * (phi_q / phi_m);
}

i64 ramanujan_sum_exponential(i64 q, i64 n, double tol) {
    if (q < 1)
        throw UsageError("ramanujan_sum_exponential: q must be >= 1");
    if (q > kExponentialOracleBound)
        throw BoundError("ramanujan_sum_exponential: q = " + std::to_string(q) +
                         " exceeds oracle bound " + std::to_string(kExponentialOracleBound));
    if (tol <= 0.0)
        tol = 1e-6 * static_cast<double>(q);
    i64 nr = n % q;
    if (nr < 0)
        nr += q;
    double re = 0.0, im = 0.0;
    const double twopi_over_q = 2.0 * std::numbers::pi / static_cast<double>(q);
    for (i64 k = 1; k <= q; ++k) {
        if (std::gcd(k, q) != 1)
            continue;
        // exp(2 pi i k n / q), exponent reduced exactly mod q first
        double ang = twopi_over_q * static_cast<double>((k * nr) % q);
        re += std::cos(ang);
        im += std::sin(ang);
    }
    double nearest = std::round(re);
    if (std::abs(re - nearest) > tol || std::abs(im) > tol)
        throw IdentityViolation("exponential oracle unstable at q=" + std::to_string(q) +
                                ", n=" + std::to_string(n) + ": re=" + std::to_string(re) +
                                " im=" + std::to_string(im));
    return static_cast<i64>(nearest);
}

} // namespace reven
