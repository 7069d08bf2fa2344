#include "reven/analytic.hpp"

#include "reven/dft.hpp"
#include "reven/error.hpp"
#include "reven/factor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace reven {

namespace {

Rat harmonic_range(i64 lo, i64 hi) {
    if (lo == hi)
        return make_rat(1, lo);
    i64 mid = lo + (hi - lo) / 2;
    return harmonic_range(lo, mid) + harmonic_range(mid + 1, hi);
}

} // namespace

Rat harmonic_exact(i64 m) {
    if (m < 0)
        throw UsageError("harmonic_exact: m must be >= 0");
    if (m == 0)
        return Rat(0);
    static std::mutex mu;
    static std::map<i64, Rat> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end())
            return it->second;
    }
    Rat h = harmonic_range(1, m);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(m, std::move(h)).first->second;
}

LogLinear lambda_convolve(const EvenFunction& f) {
    LogLinear out;
    for (const auto& [p, e] : factorize(f.r).primes) {
        Rat coeff(0);
        i64 pa = 1;
        for (int a = 1; a <= e; ++a) {
            pa *= p;
            coeff += f.at_divisor(f.r / pa);
        }
        out.add(p, coeff);
    }
    return out;
}

PartialSumReport partial_sum_dft(const EvenFunction& f, const Rat& x) {
    if (x < 1)
        throw UsageError("partial_sum_dft: x must be >= 1");
    const i64 r = f.r;
    std::vector<Rat> core = mobius_core(f);

    PartialSumReport report;
    report.r = r;
    report.x = x;
    Rat sum(0), bound(0);
    for (i64 d : f.divs) {
        Rat coeff = Rat(static_cast<long>(d)) * core[f.index_of(r / d)];
        sum += coeff * Rat(static_cast<long>(floor_div(x, d)));
        bound += abs(coeff);
    }
    report.sum = sum;
    report.bound = bound;
    report.main_term = f.values.back() * x; // f(r), divisor r is last
    report.remainder = sum - report.main_term;

    if (x <= 10'000) {
        EvenFunction hat = dft(f);
        Rat direct(0);
        i64 top = floor_div(x, 1);
        for (i64 n = 1; n <= top; ++n)
            direct += hat(n);
        if (direct != sum)
            throw InternalError("partial_sum_dft: closed form " + rat_human(sum) +
                                " disagrees with term sum " + rat_human(direct) + " at r = " +
                                std::to_string(r) + ", x = " + rat_human(x));
    }
    if (abs(report.remainder) > bound)
        throw InternalError("partial_sum_dft: remainder " + rat_human(report.remainder) +
                            " exceeds bound " + rat_human(bound));
    return report;
}

MeanValues mean_value(const EvenFunction& f) {
    FourierCoefficients a = fourier_coefficients(f);
    return {a.alpha.front(), f.values.back()};
}

Rat harmonic_sum_exact(const EvenFunction& f, i64 x) {
    if (x < 1)
        throw UsageError("harmonic_sum_exact: x must be >= 1");
    std::vector<Rat> core = mobius_core(f);
    Rat acc(0);
    for (i64 d : f.divs)
        acc += core[f.index_of(f.r / d)] * harmonic_exact(x / d);
    return acc;
}

HarmonicPoint harmonic_sum_dft(const EvenFunction& f, i64 x) {
    HarmonicPoint pt;
    pt.x = x;
    pt.exact = harmonic_sum_exact(f, x);
    double leading = rat_to_double(f.values.back());
    pt.estimate = leading * (std::log(static_cast<double>(x)) + kEulerGamma) -
                  lambda_convolve(f).value();
    pt.residual = rat_to_double(pt.exact) - pt.estimate;
    return pt;
}

HarmonicReport harmonic_convergence(const EvenFunction& f, i64 x_lo, i64 x_hi) {
    if (x_lo < 1 || x_hi < x_lo)
        throw UsageError("harmonic_convergence: need 1 <= x_lo <= x_hi");
    HarmonicReport report;
    report.r = f.r;
    report.leading_zero = f.values.back() == 0;
    LogLinear conv = lambda_convolve(f);
    for (auto& [p, c] : conv.coeff)
        c = -c;
    report.limit = conv;

    std::vector<Rat> core = mobius_core(f);
    Rat v(0);
    for (i64 d : f.divs)
        v += Rat(static_cast<long>(d)) * abs(core[f.index_of(f.r / d)]);
    report.v_bound = v;

    for (i64 x = x_lo;; x *= 2) {
        if (x >= x_hi) {
            report.points.push_back(harmonic_sum_dft(f, x_hi));
            break;
        }
        report.points.push_back(harmonic_sum_dft(f, x));
    }
    for (std::size_t i = 1; i < report.points.size(); ++i)
        if (std::abs(report.points[i].residual) >
            std::abs(report.points[i - 1].residual) + 1e-12)
            report.residual_decay = false;
    report.final_gap = std::abs(report.points.back().residual);
    return report;
}

SeriesValue zeta_trunc(double s, i64 N) {
    if (!(s > 1.0))
        throw UsageError("zeta_trunc: need s > 1");
    if (N < 10)
        throw UsageError("zeta_trunc: need N >= 10");
    double acc = 0.0;
    for (i64 n = N; n >= 1; --n)
        acc += std::pow(static_cast<double>(n), -s);
    acc += std::pow(static_cast<double>(N), 1.0 - s) / (s - 1.0);
    return {acc, std::pow(static_cast<double>(N), -s)};
}

namespace {

SeriesValue sv_mul(SeriesValue a, SeriesValue b) {
    double v = a.value * b.value;
    double e = std::abs(a.value) * b.error + std::abs(b.value) * a.error + a.error * b.error;
    return {v, e};
}

SeriesValue sv_div(SeriesValue a, SeriesValue b) {
    double lo = std::abs(b.value) - b.error;
    if (lo <= 0.0)
        throw InternalError("series: division by an interval containing zero");
    double v = a.value / b.value;
    double e = (a.error + std::abs(v) * b.error) / lo;
    return {v, e};
}

SeriesValue sv_scale(double c, SeriesValue a) {
    return {c * a.value, std::abs(c) * a.error};
}

// integral tail bound: sum over m > M of m^-s <= M^(1-s)/(s-1)
double tail_after(i64 M, double s) {
    return std::pow(static_cast<double>(std::max<i64>(M, 1)), 1.0 - s) / (s - 1.0);
}

struct SeriesSupport {
    double a_F;
    double core_sup; // sup |(mu*F)(m)| over m >= 1
    SeriesValue (*dirichlet)(double s, i64 N);
};

SeriesValue df_eps(double, i64) {
    return {1.0, 0.0};
}
SeriesValue df_one(double s, i64 N) {
    return zeta_trunc(s, N);
}
SeriesValue df_tau(double s, i64 N) {
    SeriesValue z = zeta_trunc(s, N);
    return sv_mul(z, z);
}
SeriesValue df_two_omega(double s, i64 N) {
    SeriesValue z = zeta_trunc(s, N);
    return sv_div(sv_mul(z, z), zeta_trunc(2.0 * s, N));
}

const SeriesSupport* find_support(const std::string& name) {
    static const std::map<std::string, SeriesSupport> table = {
        {"eps", {0.0, 1.0, df_eps}},           // core mu
        {"one", {1.0, 1.0, df_one}},           // core eps
        {"tau", {1.0, 1.0, df_tau}},           // core 1
        {"two-omega", {1.0, 1.0, df_two_omega}} // core mu^2
    };
    auto it = table.find(name);
    return it == table.end() ? nullptr : &it->second;
}

const SeriesSupport& support_for(const ArithFunction& F) {
    const SeriesSupport* s = find_support(F.name);
    if (!s)
        throw UsageError("series: no registered Dirichlet form for '" + F.name +
                         "'; supported: eps one tau two-omega");
    return *s;
}

// F values and the core F' = mu*F on 1..N, sieved; spot-checked
// against the function itself and the generic Mobius transform.
struct SievedCore {
    std::vector<double> F;    // index n
    std::vector<double> core; // (mu*F)(n)
};

const std::vector<int>& mu_sieve(i64 N) {
    static std::mutex mu;
    static std::map<i64, std::vector<int>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end())
        return it->second;
    std::vector<int> m(static_cast<std::size_t>(N) + 1, 1);
    std::vector<i64> spf(static_cast<std::size_t>(N) + 1, 0);
    for (i64 i = 2; i <= N; ++i) {
        if (spf[i] != 0)
            continue;
        for (i64 j = i; j <= N; j += i)
            if (spf[j] == 0)
                spf[j] = i;
    }
    for (i64 i = 2; i <= N; ++i) {
        i64 n = i;
        int val = 1;
        while (n > 1) {
            i64 p = spf[n];
            n /= p;
            if (n % p == 0) {
                val = 0;
                break;
            }
            val = -val;
        }
        m[static_cast<std::size_t>(i)] = val;
    }
    return cache.emplace(N, std::move(m)).first->second;
}

SievedCore sieve_core_uncached(const ArithFunction& F, i64 N) {
    SievedCore out;
    out.F.assign(static_cast<std::size_t>(N) + 1, 0.0);
    const std::string& name = F.name;
    if (name == "eps") {
        out.F[1] = 1.0;
    } else if (name == "one") {
        std::fill(out.F.begin() + 1, out.F.end(), 1.0);
    } else if (name == "tau") {
        for (i64 d = 1; d <= N; ++d)
            for (i64 m = d; m <= N; m += d)
                out.F[static_cast<std::size_t>(m)] += 1.0;
    } else if (name == "two-omega") {
        std::fill(out.F.begin() + 1, out.F.end(), 1.0);
        std::vector<bool> composite(static_cast<std::size_t>(N) + 1, false);
        for (i64 p = 2; p <= N; ++p) {
            if (composite[static_cast<std::size_t>(p)])
                continue;
            for (i64 m = p; m <= N; m += p) {
                out.F[static_cast<std::size_t>(m)] *= 2.0;
                if (m > p)
                    composite[static_cast<std::size_t>(m)] = true;
            }
        }
    } else {
        throw UsageError("series: no sieve for '" + name + "'");
    }

    const std::vector<int>& mu = mu_sieve(N);
    out.core.assign(static_cast<std::size_t>(N) + 1, 0.0);
    for (i64 d = 1; d <= N; ++d) {
        int m = mu[static_cast<std::size_t>(d)];
        if (m == 0)
            continue;
        for (i64 n = d; n <= N; n += d)
            out.core[static_cast<std::size_t>(n)] +=
                m * out.F[static_cast<std::size_t>(n / d)];
    }

    for (i64 n = 1; n <= std::min<i64>(N, 60); ++n) {
        if (std::abs(out.F[static_cast<std::size_t>(n)] - rat_to_double(F(n))) > 1e-9)
            throw InternalError("series: sieve of '" + name + "' disagrees with F at " +
                                std::to_string(n));
        if (std::abs(out.core[static_cast<std::size_t>(n)] -
                     rat_to_double(mobius_transform(F, n))) > 1e-9)
            throw InternalError("series: sieved core of '" + name + "' disagrees at " +
                                std::to_string(n));
    }
    return out;
}

const SievedCore& sieve_core(const ArithFunction& F, i64 N) {
    static std::mutex mu;
    static std::map<std::pair<std::string, i64>, SievedCore> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(F.name, N);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, sieve_core_uncached(F, N)).first;
    return it->second;
}

void check_trunc(i64 N) {
    if (N < 100)
        throw UsageError("series: truncation must be >= 100");
}

bool close_pass(double discrepancy, double tail) {
    return discrepancy <= tail + 1e-6;
}

} // namespace

double series_abscissa(const std::string& name) {
    const SeriesSupport* s = find_support(name);
    if (!s)
        throw UsageError("series_abscissa: no registered form for '" + name + "'");
    return s->a_F;
}

SeriesReport series_over_r(const ArithFunction& F, double a_F, i64 n, double s, i64 N) {
    const SeriesSupport& sup = support_for(F);
    check_trunc(N);
    if (n < 1)
        throw UsageError("series_over_r: n must be >= 1");
    if (!(s > std::max(1.0, a_F)))
        throw UsageError("series_over_r: need s > max(1, a_F)");

    const SievedCore& sc = sieve_core(F, N);
    std::vector<double> prefix(static_cast<std::size_t>(N) + 1, 0.0);
    for (i64 m = 1; m <= N; ++m)
        prefix[static_cast<std::size_t>(m)] =
            prefix[static_cast<std::size_t>(m - 1)] +
            sc.core[static_cast<std::size_t>(m)] * std::pow(static_cast<double>(m), -s);

    double lhs = 0.0, tail = 0.0;
    for (i64 d : divisors(n)) {
        double w = std::pow(static_cast<double>(d), 1.0 - s);
        lhs += w * prefix[static_cast<std::size_t>(N / d)];
        tail += std::abs(w) * sup.core_sup * tail_after(N / d, s);
    }

    SeriesValue zeta = zeta_trunc(s, N);
    SeriesValue dirich = sup.dirichlet(s, N);
    double sigma = 0.0;
    for (i64 d : divisors(n))
        sigma += std::pow(static_cast<double>(d), s - 1.0);
    double prefac = sigma / std::pow(static_cast<double>(n), s - 1.0);
    SeriesValue rhs = sv_scale(prefac, sv_div(dirich, zeta));

    SeriesReport rep;
    rep.identity = "sum-over-r";
    rep.F = F.name;
    rep.s = s;
    rep.n = n;
    rep.truncation = N;
    rep.lhs_partial = lhs;
    rep.rhs_closed_form = rhs.value;
    rep.discrepancy = std::abs(lhs - rhs.value);
    rep.tail_estimate = tail + rhs.error;
    rep.pass = close_pass(rep.discrepancy, rep.tail_estimate);
    return rep;
}

SeriesReport series_over_n(const ArithFunction& F, double a_F, i64 r, double s, i64 N) {
    (void)a_F; // the n-sum converges for s > 1 regardless of a_F
    support_for(F);
    check_trunc(N);
    if (r < 1)
        throw UsageError("series_over_n: r must be >= 1");
    if (!(s > 1.0))
        throw UsageError("series_over_n: need s > 1");

    EvenFunction hat = dft(completely_even(F, r));
    std::vector<double> hat_by_div(hat.divs.size());
    double max_hat = 0.0;
    for (std::size_t i = 0; i < hat.divs.size(); ++i) {
        hat_by_div[i] = rat_to_double(hat.values[i]);
        max_hat = std::max(max_hat, std::abs(hat_by_div[i]));
    }
    double lhs = 0.0;
    for (i64 n = 1; n <= N; ++n)
        lhs += hat_by_div[hat.index_of(std::gcd(n, r))] *
               std::pow(static_cast<double>(n), -s);
    double tail = max_hat * tail_after(N, s);

    SeriesValue zeta = zeta_trunc(s, N);
    double conv = 0.0;
    for (i64 d : divisors(r)) {
        // phi_{1-s}(r/d) = sum over e | r/d of e^{1-s} mu((r/d)/e)
        double phi = 0.0;
        for (i64 e : divisors(r / d))
            phi += std::pow(static_cast<double>(e), 1.0 - s) * mobius((r / d) / e);
        conv += rat_to_double(F(d)) * phi;
    }
    SeriesValue rhs = sv_scale(conv, zeta);

    SeriesReport rep;
    rep.identity = "sum-over-n";
    rep.F = F.name;
    rep.s = s;
    rep.r = r;
    rep.truncation = N;
    rep.lhs_partial = lhs;
    rep.rhs_closed_form = rhs.value;
    rep.discrepancy = std::abs(lhs - rhs.value);
    rep.tail_estimate = tail + rhs.error;
    rep.pass = close_pass(rep.discrepancy, rep.tail_estimate);
    return rep;
}

SeriesReport series_double(const ArithFunction& F, double a_F, double s, double t, i64 N) {
    const SeriesSupport& sup = support_for(F);
    check_trunc(N);
    if (!(s > 1.0))
        throw UsageError("series_double: need s > 1");
    if (!(t > std::max(1.0, a_F)))
        throw UsageError("series_double: need t > max(1, a_F)");

    const SievedCore& sc = sieve_core(F, N);
    std::vector<double> zs(static_cast<std::size_t>(N) + 1, 0.0);
    std::vector<double> pt(static_cast<std::size_t>(N) + 1, 0.0);
    for (i64 m = 1; m <= N; ++m) {
        zs[static_cast<std::size_t>(m)] = zs[static_cast<std::size_t>(m - 1)] +
                                          std::pow(static_cast<double>(m), -s);
        pt[static_cast<std::size_t>(m)] = pt[static_cast<std::size_t>(m - 1)] +
                                          sc.core[static_cast<std::size_t>(m)] *
                                              std::pow(static_cast<double>(m), -t);
    }

    SeriesValue zeta_s = zeta_trunc(s, N);
    SeriesValue zeta_t = zeta_trunc(t, N);
    double zs_up = zeta_s.value + zeta_s.error;
    double zt_up = zeta_t.value + zeta_t.error;

    double lhs = 0.0, tail = 0.0;
    for (i64 d = 1; d <= N; ++d) {
        double w = std::pow(static_cast<double>(d), 1.0 - s - t);
        i64 M = N / d;
        lhs += w * zs[static_cast<std::size_t>(M)] * pt[static_cast<std::size_t>(M)];
        tail += w * sup.core_sup * (zs_up * tail_after(M, t) + zt_up * tail_after(M, s));
    }
    tail += sup.core_sup * zs_up * zt_up * tail_after(N, s + t - 1.0);

    SeriesValue rhs = sv_mul(sv_div(sv_mul(zeta_s, zeta_trunc(s + t - 1.0, N)), zeta_t),
                             sup.dirichlet(t, N));

    SeriesReport rep;
    rep.identity = "double-sum";
    rep.F = F.name;
    rep.s = s;
    rep.t = t;
    rep.truncation = N;
    rep.lhs_partial = lhs;
    rep.rhs_closed_form = rhs.value;
    rep.discrepancy = std::abs(lhs - rhs.value);
    rep.tail_estimate = tail + rhs.error;
    rep.pass = close_pass(rep.discrepancy, rep.tail_estimate);
    return rep;
}

std::vector<SeriesReport> dirichlet_series_check(const ArithFunction& F, double a_F, i64 n,
                                                 i64 r, double s, double t, i64 truncation) {
    return {series_over_r(F, a_F, n, s, truncation),
            series_over_n(F, a_F, r, s, truncation),
            series_double(F, a_F, s, t, truncation)};
}

} // namespace reven
