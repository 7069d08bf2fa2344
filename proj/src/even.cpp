#include "reven/even.hpp"

#include "reven/dft.hpp"
#include "reven/error.hpp"
#include "reven/ramanujan.hpp"

#include <json.hpp>

#include <algorithm>

namespace reven {

std::size_t EvenFunction::index_of(i64 d) const {
    auto it = std::lower_bound(divs.begin(), divs.end(), d);
    if (it == divs.end() || *it != d)
        throw InternalError("EvenFunction: " + std::to_string(d) + " is not a divisor of " +
                            std::to_string(r));
    return static_cast<std::size_t>(it - divs.begin());
}

const Rat& EvenFunction::at_divisor(i64 d) const {
    return values[index_of(d)];
}

Rat EvenFunction::operator()(i64 n) const {
    return values[index_of(gcd_mod(n, r))];
}

EvenFunction make_even(i64 r, std::vector<Rat> divisor_values) {
    if (r < 1)
        throw UsageError("make_even: r must be >= 1");
    EvenFunction f;
    f.r = r;
    f.divs = divisors(r);
    if (divisor_values.size() != f.divs.size())
        throw UsageError("make_even: r = " + std::to_string(r) + " needs " +
                         std::to_string(f.divs.size()) + " divisor values, got " +
                         std::to_string(divisor_values.size()));
    f.values = std::move(divisor_values);
    return f;
}

EvenFunction make_even_by(i64 r, const std::function<Rat(i64)>& on_divisor) {
    EvenFunction f;
    f.r = r;
    f.divs = divisors(r);
    f.values.reserve(f.divs.size());
    for (i64 d : f.divs)
        f.values.push_back(on_divisor(d));
    return f;
}

EvenFunction even_rho(i64 r) {
    return even_gd(r, 1);
}

EvenFunction even_gd(i64 r, i64 d) {
    if (r < 1 || d < 1 || r % d != 0)
        throw UsageError("even_gd: d must divide r");
    return make_even_by(r, [d](i64 e) { return Rat(e == d ? 1 : 0); });
}

EvenFunction even_eps(i64 r) {
    return even_gd(r, r);
}

EvenFunction even_eta(i64 r) {
    return make_even_by(r, [r](i64 d) { return Rat(d == r ? static_cast<long>(r) : 0); });
}

EvenFunction even_ramanujan(i64 r, i64 q) {
    if (r < 1 || q < 1 || r % q != 0)
        throw UsageError("even_ramanujan: q must divide r");
    return make_even_by(
        r, [q](i64 d) { return Rat(static_cast<long>(ramanujan_sum(q, d))); });
}

EvenFunction even_alternating(i64 r) {
    if (r % 2 != 0)
        throw UsageError("even_alternating: (-1)^n is r-even only for even r, got r = " +
                         std::to_string(r));
    return make_even_by(r, [](i64 d) { return Rat(d % 2 == 0 ? 1 : -1); });
}

EvenFunction even_constant(i64 r, const Rat& c) {
    return make_even_by(r, [&c](i64) { return c; });
}

EvenFunction completely_even(const ArithFunction& F, i64 r) {
    return make_even_by(r, [&F](i64 d) { return F(d); });
}

EvenFunction even_add(const EvenFunction& f, const EvenFunction& g) {
    if (f.r != g.r)
        throw UsageError("even_add: modulus mismatch");
    EvenFunction out = f;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] += g.values[i];
    return out;
}

EvenFunction even_scale(const Rat& c, const EvenFunction& f) {
    EvenFunction out = f;
    for (Rat& v : out.values)
        v *= c;
    return out;
}

const Rat& PeriodicTable::at(i64 n) const {
    i64 m = n % r;
    if (m <= 0)
        m += r;
    return values[static_cast<std::size_t>(m - 1)];
}

PeriodicTable make_periodic(i64 r, std::vector<Rat> vals) {
    if (r < 1)
        throw UsageError("make_periodic: r must be >= 1");
    if (static_cast<i64>(vals.size()) != r)
        throw UsageError("make_periodic: need exactly r = " + std::to_string(r) + " values");
    return PeriodicTable{r, std::move(vals)};
}

PeriodicTable periodic_delta(i64 r, i64 k) {
    std::vector<Rat> vals(static_cast<std::size_t>(r), Rat(0));
    i64 m = k % r;
    if (m <= 0)
        m += r;
    vals[static_cast<std::size_t>(m - 1)] = Rat(1);
    return PeriodicTable{r, std::move(vals)};
}

PeriodicTable expand(const EvenFunction& f) {
    PeriodicTable t;
    t.r = f.r;
    t.values.reserve(static_cast<std::size_t>(f.r));
    for (i64 n = 1; n <= f.r; ++n)
        t.values.push_back(f(n));
    return t;
}

EvenFunction from_periodic(const PeriodicTable& t) {
    for (i64 n = 1; n <= t.r; ++n) {
        i64 g = gcd_mod(n, t.r);
        if (t.at(n) != t.at(g))
            throw UsageError("from_periodic: not " + std::to_string(t.r) + "-even at n = " +
                             std::to_string(n) + ": t(n) = " + rat_human(t.at(n)) +
                             " but t(gcd) = " + rat_human(t.at(g)));
    }
    return make_even_by(t.r, [&t](i64 d) { return t.at(d); });
}

std::vector<Rat> mobius_core(const EvenFunction& f) {
    std::vector<Rat> core;
    core.reserve(f.divs.size());
    for (i64 d : f.divs) {
        Rat acc(0);
        for (i64 e : divisors(d)) {
            int mu = mobius(d / e);
            if (mu != 0)
                acc += mu * f.at_divisor(e);
        }
        core.push_back(acc);
    }
    return core;
}

EvenFunction core_to_even(i64 r, const std::vector<Rat>& core) {
    std::vector<i64> ds = divisors(r);
    if (core.size() != ds.size())
        throw UsageError("core_to_even: core size mismatch for r = " + std::to_string(r));
    EvenFunction f;
    f.r = r;
    f.divs = ds;
    f.values.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j <= i; ++j)
            if (ds[i] % ds[j] == 0)
                acc += core[j];
        f.values.push_back(acc);
    }
    return f;
}

FourierCoefficients fourier_coefficients(const EvenFunction& f) {
    const i64 r = f.r;
    FourierCoefficients out;
    out.r = r;
    out.divs = f.divs;
    out.alpha.reserve(f.divs.size());

    // Route one: the defining double divisor sum,
    // alpha(d) = (1/r) sum over e|r of f(e) c_{r/e}(r/d),
    // with Ramanujan sums from the divisor-sum formula.
    for (i64 d : f.divs) {
        Rat acc(0);
        for (std::size_t i = 0; i < f.divs.size(); ++i) {
            i64 e = f.divs[i];
            acc += f.values[i] * Rat(static_cast<long>(ramanujan_sum(r / e, r / d)));
        }
        out.alpha.push_back(acc / Rat(static_cast<long>(r)));
    }

    // Route two: alpha(d) = dft(f)(r/d) / r on the table-driven path.
    EvenFunction hat = dft(f);
    for (std::size_t i = 0; i < f.divs.size(); ++i) {
        Rat via_dft = hat.at_divisor(r / f.divs[i]) / Rat(static_cast<long>(r));
        if (via_dft != out.alpha[i])
            throw InternalError("fourier_coefficients: routes disagree at r = " +
                                std::to_string(r) + ", d = " + std::to_string(f.divs[i]) +
                                ": " + rat_human(out.alpha[i]) + " vs " + rat_human(via_dft));
    }
    return out;
}

EvenFunction from_coefficients(const FourierCoefficients& a) {
    return make_even_by(a.r, [&a](i64 e) {
        Rat acc(0);
        for (std::size_t i = 0; i < a.divs.size(); ++i)
            acc += a.alpha[i] * Rat(static_cast<long>(ramanujan_sum(a.divs[i], e)));
        return acc;
    });
}

EvenFunction cauchy_convolve(const EvenFunction& f, const EvenFunction& h) {
    if (f.r != h.r)
        throw UsageError("cauchy_convolve: modulus mismatch (" + std::to_string(f.r) +
                         " vs " + std::to_string(h.r) + ")");
    const i64 r = f.r;
    EvenFunction out = make_even_by(r, [&](i64 d) {
        Rat acc(0);
        for (i64 a = 1; a <= r; ++a)
            acc += f(a) * h(d - a);
        return acc;
    });

    // Transform product law; pointwise on divisors suffices since all
    // three transforms are r-even.
    EvenFunction tf = dft(f), th = dft(h), to = dft(out);
    for (std::size_t i = 0; i < to.values.size(); ++i)
        if (to.values[i] != tf.values[i] * th.values[i])
            throw InternalError("cauchy_convolve: transform product law failed at r = " +
                                std::to_string(r) + ", d = " + std::to_string(to.divs[i]));
    return out;
}

std::string even_to_json(const EvenFunction& f) {
    nlohmann::ordered_json j;
    j["r"] = f.r;
    j["divisors"] = f.divs;
    std::vector<std::string> vals;
    vals.reserve(f.values.size());
    for (const Rat& v : f.values)
        vals.push_back(rat_canonical(v));
    j["values"] = vals;
    return j.dump();
}

EvenFunction even_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("even_from_json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("r") || !j.contains("divisors") || !j.contains("values"))
        throw UsageError("even_from_json: need object with r, divisors, values");
    i64 r = j["r"].get<i64>();
    std::vector<i64> divs = j["divisors"].get<std::vector<i64>>();
    if (divs != divisors(r))
        throw UsageError("even_from_json: divisors list is not the ascending divisor list of r");
    std::vector<Rat> values;
    for (const auto& v : j["values"])
        values.push_back(parse_rat(v.get<std::string>()));
    return make_even(r, std::move(values));
}

} // namespace reven
