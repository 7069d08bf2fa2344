#pragma once

#include "reven/arith.hpp"
#include "reven/even.hpp"

#include <string>
#include <vector>

namespace reven {

inline constexpr double kEulerGamma = 0.5772156649015329;

// Exact harmonic number H_m = 1 + 1/2 + ... + 1/m (H_0 = 0), cached.
Rat harmonic_exact(i64 m);

// (f * Lambda)(r) as an exact log-linear combination.
LogLinear lambda_convolve(const EvenFunction& f);

struct PartialSumReport {
    i64 r = 1;
    Rat x;
    Rat sum;       // sum over n <= x of fhat(n), exact
    Rat main_term; // f(r) * x
    Rat remainder; // sum - main_term
    Rat bound;     // sum over d|r of d*|f'(r/d)|
};

// Exact partial sum of the transform by the closed form
// sum over d|r of d f'(r/d) floor(x/d), cross-checked term by term
// for x <= 10^4.  The remainder bound |remainder| <= bound is enforced
// (violating it would be a bug, not bad input).
PartialSumReport partial_sum_dft(const EvenFunction& f, const Rat& x);

struct MeanValues {
    Rat f_mean;   // m(f) = alpha_f(1) = (f*phi)(r)/r
    Rat dft_mean; // m(fhat) = f(r)
};

MeanValues mean_value(const EvenFunction& f);

// sum over n <= x of fhat(n)/n, exact, via f'(r/d) H(floor(x/d)).
Rat harmonic_sum_exact(const EvenFunction& f, i64 x);

struct HarmonicPoint {
    i64 x = 0;
    Rat exact;       // sum over n <= x of fhat(n)/n
    double estimate; // f(r)(log x + C) - (f*Lambda)(r)
    double residual; // exact - estimate
};

HarmonicPoint harmonic_sum_dft(const EvenFunction& f, i64 x);

struct HarmonicReport {
    i64 r = 1;
    bool leading_zero = false; // f(r) == 0, so the series converges
    LogLinear limit;           // -(f*Lambda)(r), the f(r)=0 limit
    Rat v_bound;               // V_f = sum d |f'(r/d)|
    std::vector<HarmonicPoint> points;
    bool residual_decay = true; // |residual| nonincreasing along the schedule
    double final_gap = 0.0;     // |residual| at the last point
};

// Doubling schedule x_lo, 2x_lo, ... capped by x_hi (x_hi always
// included as the last point).
HarmonicReport harmonic_convergence(const EvenFunction& f, i64 x_lo, i64 x_hi);

struct SeriesValue {
    double value = 0.0;
    double error = 0.0; // rigorous bound on |true - value|
};

// Truncated zeta: sum to N plus the integral tail N^(1-s)/(s-1);
// error bound N^-s.  Requires s > 1.
SeriesValue zeta_trunc(double s, i64 N);

struct SeriesReport {
    std::string identity; // sum-over-r | sum-over-n | double-sum
    std::string F;
    double s = 0.0, t = 0.0; // t only for double-sum
    i64 n = 0, r = 0;        // parameter in play (0 = unused)
    i64 truncation = 0;
    double lhs_partial = 0.0;
    double rhs_closed_form = 0.0;
    double discrepancy = 0.0;
    double tail_estimate = 0.0;
    bool pass = false; // discrepancy <= tail_estimate + 1e-6
};

// The three Dirichlet-series identities for the transform sequence of
// F(gcd(n,r)).  Supported F: eps, one, tau, two-omega (these have
// registered closed-form F-series and core bounds).  a_F is declared
// by the caller; preconditions are s > max(1,a_F) for the r-sum,
// s > 1 for the n-sum, and s > 1, t > max(1,a_F) for the double sum.
SeriesReport series_over_r(const ArithFunction& F, double a_F, i64 n, double s, i64 N);
SeriesReport series_over_n(const ArithFunction& F, double a_F, i64 r, double s, i64 N);
SeriesReport series_double(const ArithFunction& F, double a_F, double s, double t, i64 N);

std::vector<SeriesReport> dirichlet_series_check(const ArithFunction& F, double a_F, i64 n,
                                                 i64 r, double s, double t, i64 truncation);

// Registered default convergence abscissa for the supported names.
double series_abscissa(const std::string& name);

} // namespace reven
