#pragma once

#include "reven/rational.hpp"

namespace reven {

// Three independent routes to the Ramanujan sum c_q(n).  They share no
// code path on purpose: each serves as an oracle for the others.

// Divisor-sum form: c_q(n) = sum over d | gcd(n,q) of d*mu(q/d).
i64 ramanujan_sum(i64 q, i64 n);

// Holder's identity: c_q(n) = mu(m)*phi(q)/phi(m) with m = q/gcd(n,q).
// The division is exact; a non-integer intermediate is a bug.
i64 ramanujan_sum_holder(i64 q, i64 n);

// Exponential sum over k coprime to q of exp(2*pi*i*k*n/q), evaluated
// in floating complex arithmetic and rounded.  tol <= 0 selects the
// default 1e-6*q.  Distance-to-integer beyond tol (or a non-vanishing
// imaginary part) raises IdentityViolation as numeric instability.
inline constexpr i64 kExponentialOracleBound = 10'000;
i64 ramanujan_sum_exponential(i64 q, i64 n, double tol = -1.0);

} // namespace reven
