#include "reven/dft.hpp"

#include "reven/error.hpp"
#include "reven/ramanujan.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace reven {

namespace {

std::string pair_str(const Rat& lhs, const Rat& rhs) {
    return "lhs = " + rat_human(lhs) + ", rhs = " + rat_human(rhs);
}

} // namespace

RamanujanTable::RamanujanTable(i64 r) : r_(r) {
    Factorization fr = factorize(r);
    divs_ = divisors(fr);
    const std::size_t t = divs_.size();
    phi_.resize(t);
    mu_.resize(t);
    for (std::size_t i = 0; i < t; ++i) {
        // factor each divisor against r's primes, no fresh sieving
        i64 d = divs_[i];
        i64 phi = 1;
        int mu = 1;
        for (const auto& [p, e] : fr.primes) {
            (void)e;
            if (d % p != 0)
                continue;
            int a = 0;
            i64 q = d;
            while (q % p == 0) {
                q /= p;
                ++a;
            }
            i64 pk = 1;
            for (int j = 1; j < a; ++j)
                pk *= p;
            phi *= pk * (p - 1);
            mu = a > 1 ? 0 : -mu;
        }
        phi_[i] = phi;
        mu_[i] = mu;
    }
    table_.assign(t * t, 0);
    for (std::size_t qi = 0; qi < t; ++qi) {
        i64 q = divs_[qi];
        for (std::size_t di = 0; di < t; ++di) {
            i64 g = std::gcd(q, divs_[di]);
            i64 m = q / g;
            std::size_t mi = index_of(m);
            i64 value = 0;
            if (mu_[mi] != 0) {
                i64 num = phi_[qi];
                i64 den = phi_[mi];
                if (num % den != 0)
                    throw InternalError("RamanujanTable: phi(" + std::to_string(q) +
                                        ")/phi(" + std::to_string(m) + ") not integral");
                value = mu_[mi] * (num / den);
            }
            table_[qi * t + di] = value;
        }
    }
}

std::shared_ptr<const RamanujanTable> RamanujanTable::for_modulus(i64 r) {
    if (r < 1)
        throw UsageError("RamanujanTable: r must be >= 1");
    static std::mutex mu;
    static std::map<i64, std::shared_ptr<const RamanujanTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(r);
        if (it != cache.end())
            return it->second;
    }
    if (tau(r) > kMaxTableDivisors)
        throw BoundError("RamanujanTable: tau(" + std::to_string(r) + ") exceeds " +
                         std::to_string(kMaxTableDivisors));
    std::shared_ptr<const RamanujanTable> made(new RamanujanTable(r));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(r, made);
    return it->second;
}

std::size_t RamanujanTable::index_of(i64 d) const {
    auto it = std::lower_bound(divs_.begin(), divs_.end(), d);
    if (it == divs_.end() || *it != d)
        throw InternalError("RamanujanTable: " + std::to_string(d) + " is not a divisor of " +
                            std::to_string(r_));
    return static_cast<std::size_t>(it - divs_.begin());
}

i64 RamanujanTable::phi(i64 d) const {
    return phi_[index_of(d)];
}

int RamanujanTable::mu(i64 d) const {
    return mu_[index_of(d)];
}

i64 RamanujanTable::c(i64 q, i64 n) const {
    return table_[index_of(q) * divs_.size() + index_of(gcd_mod(n, r_))];
}

i64 RamanujanTable::c_at(std::size_t qi, std::size_t di) const {
    return table_[qi * divs_.size() + di];
}

EvenFunction dft(const EvenFunction& f) {
    auto table = RamanujanTable::for_modulus(f.r);
    const std::size_t t = f.divs.size();
    // row index of c_{r/d_i} for each i
    std::vector<std::size_t> co(t);
    for (std::size_t i = 0; i < t; ++i)
        co[i] = table->index_of(f.r / f.divs[i]);
    EvenFunction out;
    out.r = f.r;
    out.divs = f.divs;
    out.values.assign(t, Rat(0));
    for (std::size_t j = 0; j < t; ++j) {
        Rat acc(0);
        for (std::size_t i = 0; i < t; ++i) {
            i64 c = table->c_at(co[i], j);
            if (c != 0)
                acc += f.values[i] * Rat(static_cast<long>(c));
        }
        out.values[j] = acc;
    }
    return out;
}

EvenFunction idft(const EvenFunction& g) {
    EvenFunction out = dft(g);
    const Rat r(static_cast<long>(g.r));
    for (std::size_t j = 0; j < out.values.size(); ++j) {
        // dft(g)(n) = r * f(-n) in general; on even functions f(-n) = f(n)
        out.values[j] /= r;
    }
    return out;
}

std::vector<Rat> dft_core(const EvenFunction& f) {
    std::vector<Rat> core = mobius_core(f);
    std::vector<Rat> out(core.size());
    for (std::size_t i = 0; i < f.divs.size(); ++i) {
        i64 d = f.divs[i];
        std::size_t j = f.index_of(f.r / d);
        out[i] = Rat(static_cast<long>(d)) * core[j];
    }
    return out;
}

EvenFunction dft_via_core(const EvenFunction& f) {
    std::vector<Rat> core = mobius_core(f);
    EvenFunction out;
    out.r = f.r;
    out.divs = f.divs;
    out.values.reserve(f.divs.size());
    for (i64 g : f.divs) {
        Rat acc(0);
        for (i64 d : divisors(g))
            acc += Rat(static_cast<long>(d)) * core[f.index_of(f.r / d)];
        out.values.push_back(acc);
    }
    return out;
}

EvenFunction alternating_dft(i64 r) {
    if (r < 2 || r % 2 != 0)
        throw UsageError("alternating_dft: (-1)^n is r-even only for even r, got r = " +
                         std::to_string(r));
    EvenFunction expected = make_even_by(r, [r](i64 d) {
        return Rat(d == r / 2 ? static_cast<long>(r) : 0);
    });
    EvenFunction actual = dft(even_alternating(r));
    if (actual != expected)
        throw InternalError("alternating_dft: closed form disagrees with dft at r = " +
                            std::to_string(r));
    return expected;
}

i64 count_congruence_solutions(i64 r, int k, i64 n) {
    if (r < 1)
        throw UsageError("count_congruence_solutions: r must be >= 1");
    if (k < 1)
        throw UsageError("count_congruence_solutions: k must be >= 1");
    auto table = RamanujanTable::for_modulus(r);
    const auto& divs = table->divs();
    Rat acc(0);
    for (std::size_t i = 0; i < divs.size(); ++i) {
        i64 d = divs[i];
        i64 base = table->c(r, r / d); // c_r(r/d)
        if (base == 0)
            continue;
        mpz_class pw;
        mpz_class b(static_cast<long>(base));
        mpz_pow_ui(pw.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k));
        acc += Rat(pw) * Rat(static_cast<long>(table->c(d, n)));
    }
    acc /= Rat(static_cast<long>(r));
    if (!rat_is_integer(acc) || acc < 0)
        throw InternalError("count_congruence_solutions: expansion gave " + rat_human(acc) +
                            " at r=" + std::to_string(r) + " k=" + std::to_string(k) +
                            " n=" + std::to_string(n));
    return rat_to_i64(acc);
}

std::vector<i64> count_congruence_bruteforce(i64 r, int k) {
    if (r < 1 || k < 1)
        throw UsageError("count_congruence_bruteforce: need r >= 1, k >= 1");
    if (r > kCongruenceOracleBound)
        throw BoundError("count_congruence_bruteforce: r = " + std::to_string(r) +
                         " exceeds oracle bound " + std::to_string(kCongruenceOracleBound));
    std::vector<i64> unit(static_cast<std::size_t>(r), 0);
    for (i64 x = 0; x < r; ++x)
        if (gcd_mod(x, r) == 1)
            unit[static_cast<std::size_t>(x)] = 1;
    std::vector<i64> counts = unit;
    for (int fold = 1; fold < k; ++fold) {
        std::vector<i64> next(static_cast<std::size_t>(r), 0);
        for (i64 a = 0; a < r; ++a) {
            if (counts[static_cast<std::size_t>(a)] == 0)
                continue;
            for (i64 b = 0; b < r; ++b) {
                if (unit[static_cast<std::size_t>(b)] == 0)
                    continue;
                next[static_cast<std::size_t>((a + b) % r)] += counts[static_cast<std::size_t>(a)];
            }
        }
        counts = std::move(next);
    }
    return counts;
}

AndersonApostol anderson_apostol(const SghSpec& spec) {
    const i64 r = spec.r;
    if (r < 1)
        throw UsageError("anderson_apostol: r must be >= 1");
    EvenFunction s = make_even_by(r, [&](i64 D) {
        Rat acc(0);
        for (i64 e : divisors(D))
            acc += spec.g(e) * spec.h(r / e);
        return acc;
    });
    EvenFunction s_hat = make_even_by(r, [&](i64 D) {
        Rat acc(0);
        for (i64 e : divisors(D))
            acc += Rat(static_cast<long>(e)) * spec.g(r / e) * spec.h(e);
        return acc;
    });
    if (dft(s) != s_hat)
        throw InternalError("anderson_apostol: closed-form transform disagrees with dft at r = " +
                            std::to_string(r));
    return {std::move(s), std::move(s_hat)};
}

EvenFunction cohen_forward(const EvenFunction& g) {
    FourierCoefficients a{g.r, g.divs, g.values};
    return from_coefficients(a);
}

EvenFunction cohen_invert(const EvenFunction& g) {
    const i64 r = g.r;
    EvenFunction f = cohen_forward(g);
    EvenFunction recovered = make_even_by(r, [&](i64 m) -> Rat {
        // pick n with r/gcd(n,r) = m
        i64 n = r / m;
        Rat acc(0);
        for (i64 d : g.divs)
            acc += f.at_divisor(r / d) * Rat(static_cast<long>(ramanujan_sum(d, n)));
        return acc / Rat(static_cast<long>(r));
    });
    if (recovered != g)
        throw InternalError("cohen_invert: recovered coefficients differ from input at r = " +
                            std::to_string(r));
    return recovered;
}

namespace {

Rat conv_with(const ArithFunction& F, const ArithFunction& w, i64 x) {
    Rat acc(0);
    for (i64 d : divisors(x))
        acc += F(d) * w(x / d);
    return acc;
}

} // namespace

Rat holder_closed_form(const ArithFunction& F, i64 r, i64 n) {
    if (r < 1)
        throw UsageError("holder_closed_form: r must be >= 1");
    if (F.strongly_multiplicative != Tri::yes)
        throw UsageError("holder_closed_form: '" + F.name +
                         "' is not declared strongly multiplicative");
    if (F(1) != 1)
        throw UsageError("holder_closed_form: '" + F.name + "' has F(1) != 1");
    for (const auto& [p, e] : factorize(r).primes) {
        (void)e;
        Rat fp = F(p);
        for (i64 pa = p * p; pa <= 10'000; pa *= p)
            if (F(pa) != fp)
                throw UsageError("holder_closed_form: '" + F.name +
                                 "' fails the strong-multiplicativity spot check at p = " +
                                 std::to_string(p) + " (F(" + std::to_string(pa) +
                                 ") != F(p))");
        if (fp == Rat(1 - static_cast<long>(p)))
            throw UsageError("holder_closed_form: F(p) = 1-p at p = " + std::to_string(p));
    }
    i64 m = r / gcd_mod(n, r);
    ArithFunction phi = make_arith(
        "phi", [](i64 x) { return Rat(static_cast<long>(euler_phi(x))); });
    Rat f_phi_m = conv_with(F, phi, m);
    Rat f_phi_r = conv_with(F, phi, r);
    Rat f_mu_m = conv_with(F, af_mobius(), m);
    if (f_phi_m == 0)
        throw InternalError("holder_closed_form: (F*phi)(m) = 0 at m = " + std::to_string(m));
    Rat value = f_mu_m * f_phi_r / f_phi_m;

    EvenFunction direct = dft_via_core(completely_even(F, r));
    if (direct(n) != value)
        throw InternalError("holder_closed_form: closed form " + rat_human(value) +
                            " disagrees with transform " + rat_human(direct(n)) + " at r = " +
                            std::to_string(r) + ", n = " + std::to_string(n));
    return value;
}

SequenceSpec completely_even_sequence(const ArithFunction& F) {
    SequenceSpec seq;
    seq.name = "completely-even(" + F.name + ")";
    ArithFunction copy = F;
    seq.member = [copy](i64 r) { return completely_even(copy, r); };
    seq.declared_multiplicative = F.multiplicative;
    seq.F = F;
    return seq;
}

SequenceSpec custom_sequence(std::string name, std::function<EvenFunction(i64)> member,
                             Tri declared_multiplicative) {
    SequenceSpec seq;
    seq.name = std::move(name);
    seq.member = std::move(member);
    seq.declared_multiplicative = declared_multiplicative;
    return seq;
}

namespace {

// lazily cached members and transforms for sweeps over a sequence
struct SequenceCache {
    const SequenceSpec& seq;
    std::map<i64, EvenFunction> f, hat;
    std::map<i64, std::vector<Rat>> core;

    explicit SequenceCache(const SequenceSpec& s) : seq(s) {}

    const EvenFunction& member(i64 r) {
        auto it = f.find(r);
        if (it == f.end())
            it = f.emplace(r, seq.member(r)).first;
        return it->second;
    }
    const EvenFunction& transform(i64 r) {
        auto it = hat.find(r);
        if (it == hat.end())
            it = hat.emplace(r, dft(member(r))).first;
        return it->second;
    }
    const std::vector<Rat>& mobius(i64 r) {
        auto it = core.find(r);
        if (it == core.end())
            it = core.emplace(r, mobius_core(member(r))).first;
        return it->second;
    }
    Rat core_at_r(i64 r) {
        return mobius(r).back(); // core value at divisor r (ascending order)
    }
};

} // namespace

MultReport check_sequence_multiplicativity(const SequenceSpec& seq, i64 bound) {
    if (bound < 1)
        throw UsageError("check_sequence_multiplicativity: bound must be >= 1");
    MultReport report;
    report.bound = bound;
    SequenceCache cache(seq);
    auto note = [&report](std::string law, i64 m, i64 n, i64 r, i64 s, const Rat& lhs,
                          const Rat& rhs) {
        if (report.violations.size() < 64)
            report.violations.push_back(
                {std::move(law), m, n, r, s, rat_human(lhs), rat_human(rhs)});
    };

    // modulus multiplicativity: f_{rs}(n) = f_r(n) f_s(n), gcd(r,s)=1
    for (i64 r = 1; r <= bound; ++r)
        for (i64 s = r; s <= bound; ++s) {
            if (std::gcd(r, s) != 1)
                continue;
            for (i64 n = 1; n <= bound; ++n) {
                Rat lhs = cache.member(r * s)(n);
                Rat rhs = cache.member(r)(n) * cache.member(s)(n);
                ++report.checked;
                if (lhs != rhs) {
                    report.base_two_variable = false;
                    note("modulus-multiplicative", 0, n, r, s, lhs, rhs);
                }
            }
        }

    // two-variable laws on f and fhat
    for (i64 r = 1; r <= bound; ++r)
        for (i64 s = 1; s <= bound; ++s) {
            if (std::gcd(r, s) != 1)
                continue;
            for (i64 m = 1; m <= bound; ++m)
                for (i64 n = 1; n <= bound; ++n) {
                    if (std::gcd(m * r, n * s) != 1)
                        continue;
                    ++report.checked;
                    Rat lhs = cache.member(r * s)(m * n);
                    Rat rhs = cache.member(r)(m) * cache.member(s)(n);
                    if (lhs != rhs) {
                        report.base_two_variable = false;
                        note("two-variable", m, n, r, s, lhs, rhs);
                    }
                    Rat hl = cache.transform(r * s)(m * n);
                    Rat hr = cache.transform(r)(m) * cache.transform(s)(n);
                    if (hl != hr) {
                        report.dft_two_variable = false;
                        note("dft-two-variable", m, n, r, s, hl, hr);
                    }
                }
        }

    // quasi-multiplicativity of fhat_r and the f'_r(r)=1 criterion
    for (i64 r = 1; r <= bound; ++r) {
        const EvenFunction& hat = cache.transform(r);
        Rat anchor = cache.core_at_r(r);
        i64 span = std::max<i64>(r, 8);
        bool pointwise_ok = true;
        for (i64 m = 1; m <= span; ++m)
            for (i64 n = m; n <= span; ++n) {
                if (std::gcd(m, n) != 1)
                    continue;
                ++report.checked;
                Rat lhs = hat(m) * hat(n);
                Rat rhs = anchor * hat(m * n);
                if (lhs != rhs) {
                    report.quasi = false;
                    note("quasi-multiplicative", m, n, r, 0, lhs, rhs);
                }
                if (hat(m * n) != hat(m) * hat(n))
                    pointwise_ok = false;
            }
        bool mult_on_range = pointwise_ok && hat(1) == 1;
        bool core_is_one = anchor == 1;
        ++report.checked;
        if (mult_on_range != core_is_one) {
            report.criterion = false;
            note("criterion", 0, 0, r, 0, Rat(mult_on_range ? 1 : 0), anchor);
        }
    }
    return report;
}

std::vector<IdentityCheck> divisor_sum_identities(const SequenceSpec& seq, i64 n, i64 r,
                                                  bool strict) {
    if (n < 1 || r < 1)
        throw UsageError("divisor_sum_identities: need n >= 1 and r >= 1");
    SequenceCache cache(seq);
    std::vector<IdentityCheck> rows;
    auto push = [&](std::string name, const Rat& lhs, const Rat& rhs) {
        IdentityCheck row{std::move(name), n, r, rat_human(lhs), rat_human(rhs), lhs == rhs};
        if (strict && !row.ok)
            throw IdentityViolation(row.name + " failed at n = " + std::to_string(n) +
                                    ", r = " + std::to_string(r) + ": " + pair_str(lhs, rhs));
        rows.push_back(std::move(row));
    };
    std::vector<i64> divs_n = divisors(n);
    std::vector<i64> divs_r = divisors(r);
    std::vector<i64> divs_g = divisors(std::gcd(n, r));
    const std::vector<Rat>& core_r = cache.mobius(r);
    const EvenFunction& f_r = cache.member(r);
    const EvenFunction& hat_r = cache.transform(r);

    {
        Rat lhs(0);
        for (i64 d : divs_n)
            lhs += hat_r(d);
        Rat rhs(0);
        for (i64 d : divs_g)
            rhs += Rat(static_cast<long>(d)) * core_r[f_r.index_of(r / d)] *
                   Rat(static_cast<long>(tau(n / d)));
        push("dft-partial-tau", lhs, rhs);
    }
    {
        Rat lhs(0);
        for (i64 d : divs_r)
            lhs += cache.transform(d)(n);
        Rat rhs(0);
        for (i64 d : divs_g)
            rhs += Rat(static_cast<long>(d)) * f_r.at_divisor(r / d);
        push("cross-modulus", lhs, rhs);
    }
    {
        Rat lhs(0);
        for (i64 d : divs_n)
            for (i64 e : divs_r)
                lhs += cache.transform(e)(d);
        Rat rhs(0);
        for (i64 d : divs_g)
            rhs += Rat(static_cast<long>(d)) * f_r.at_divisor(r / d) *
                   Rat(static_cast<long>(tau(n / d)));
        push("cross-modulus-tau", lhs, rhs);
    }
    if (seq.F) {
        Rat lhs(0);
        for (i64 d : divs_r)
            lhs += cache.transform(r / d)(d);
        Rat rhs(0);
        for (i64 e = 1; e * e <= r; ++e)
            if (r % (e * e) == 0)
                rhs += Rat(static_cast<long>(e)) * (*seq.F)(r / (e * e));
        push("square-detector", lhs, rhs);
    }
    return rows;
}

ClassifyReport classify_completely_even_dft(const ArithFunction& F, i64 bound) {
    if (bound < 1)
        throw UsageError("classify_completely_even_dft: bound must be >= 1");
    ClassifyReport report;
    report.F = F.name;
    report.bound = bound;

    // forced candidate: G = id * F'
    auto G = [&F](i64 d) {
        Rat acc(0);
        for (i64 e : divisors(d))
            acc += Rat(static_cast<long>(e)) * mobius_transform(F, d / e);
        return acc;
    };

    for (i64 r = 1; r <= bound; ++r) {
        EvenFunction hat = dft(completely_even(F, r));
        for (std::size_t i = 0; i < hat.divs.size(); ++i) {
            i64 d = hat.divs[i];
            Rat expected = G(d);
            if (hat.values[i] != expected) {
                std::ostringstream w;
                w << "fhat_" << r << "(" << d << ") = " << rat_human(hat.values[i])
                  << " but fhat_" << d << "(" << d << ") = " << rat_human(expected)
                  << " (same gcd class " << d << ")";
                report.witness = w.str();
                report.dft_completely_even = false;
                return report;
            }
        }
    }
    report.dft_completely_even = true;
    Rat c = F(1);
    for (i64 m = 1; m <= bound; ++m) {
        if (F(m) != c * Rat(static_cast<long>(tau(m))))
            throw InternalError("classify: no witness found but F != c*tau at m = " +
                                std::to_string(m));
        if (G(m) != c * sigma_k(1, m))
            throw InternalError("classify: no witness found but G != c*sigma at m = " +
                                std::to_string(m));
    }
    report.tau_scale = c;
    return report;
}

} // namespace reven
