#include "reven/arith.hpp"

#include "reven/error.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace reven {

int mobius(i64 n) {
    Factorization f = factorize(n);
    for (const auto& [p, e] : f.primes)
        if (e > 1)
            return 0;
    return f.primes.size() % 2 == 0 ? 1 : -1;
}

i64 euler_phi(i64 n) {
    Factorization f = factorize(n);
    i64 out = 1;
    for (const auto& [p, e] : f.primes) {
        i64 pk = 1;
        for (int i = 1; i < e; ++i)
            pk *= p;
        out *= pk * (p - 1);
    }
    return out;
}

i64 tau(i64 n) {
    return count_divisors(factorize(n));
}

Rat sigma_k(int k, i64 n) {
    Rat acc(0);
    for (i64 d : divisors(n)) {
        if (k >= 0)
            acc += rat_pow(d, k);
        else
            acc += Rat(1) / rat_pow(d, -k);
    }
    return acc;
}

Rat phi_k(int k, i64 n) {
    Rat acc(0);
    for (i64 d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu == 0)
            continue;
        Rat term = k >= 0 ? rat_pow(d, k) : Rat(1) / rat_pow(d, -k);
        acc += mu * term;
    }
    return acc;
}

void LogLinear::add(i64 prime, const Rat& c) {
    Rat& slot = coeff[prime];
    slot += c;
    if (slot == 0)
        coeff.erase(prime);
}

bool LogLinear::is_zero() const {
    return coeff.empty();
}

double LogLinear::value() const {
    double acc = 0.0;
    for (const auto& [p, c] : coeff)
        acc += rat_to_double(c) * std::log(static_cast<double>(p));
    return acc;
}

std::string LogLinear::str() const {
    if (coeff.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : coeff) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        if (a != 1)
            out << rat_human(a) << "*";
        out << "log(" << p << ")";
        first = false;
    }
    return out.str();
}

LogLinear von_mangoldt(i64 n) {
    LogLinear v;
    Factorization f = factorize(n);
    if (f.primes.size() == 1)
        v.add(f.primes[0].first, Rat(1));
    return v;
}

Rat ArithFunction::operator()(i64 n) const {
    if (n < 1)
        throw UsageError("arithmetical function '" + name + "' evaluated at " +
                         std::to_string(n));
    return fn(n);
}

ArithFunction make_arith(std::string name, std::function<Rat(i64)> fn,
                         Tri multiplicative, Tri strongly) {
    ArithFunction f{std::move(name), std::move(fn), multiplicative, strongly};
    if (multiplicative == Tri::yes && f.fn(1) != 1)
        throw UsageError("'" + f.name + "' declared multiplicative but f(1) = " +
                         rat_human(f.fn(1)));
    return f;
}

const ArithFunction& af_eps() {
    static const ArithFunction f = make_arith(
        "eps", [](i64 n) { return Rat(n == 1 ? 1 : 0); }, Tri::yes, Tri::yes);
    return f;
}

const ArithFunction& af_one() {
    static const ArithFunction f =
        make_arith("one", [](i64) { return Rat(1); }, Tri::yes, Tri::yes);
    return f;
}

const ArithFunction& af_id() {
    static const ArithFunction f = make_arith(
        "id", [](i64 n) { return Rat(static_cast<long>(n)); }, Tri::yes, Tri::no);
    return f;
}

const ArithFunction& af_tau() {
    static const ArithFunction f = make_arith(
        "tau", [](i64 n) { return Rat(static_cast<long>(tau(n))); }, Tri::yes,
        Tri::no);
    return f;
}

const ArithFunction& af_sigma() {
    static const ArithFunction f = make_arith(
        "sigma", [](i64 n) { return sigma_k(1, n); }, Tri::yes, Tri::no);
    return f;
}

const ArithFunction& af_mobius() {
    static const ArithFunction f = make_arith(
        "mobius", [](i64 n) { return Rat(mobius(n)); }, Tri::yes, Tri::no);
    return f;
}

const ArithFunction& af_two_omega() {
    static const ArithFunction f = make_arith(
        "two-omega",
        [](i64 n) {
            std::size_t omega = factorize(n).primes.size();
            return rat_pow(2, static_cast<int>(omega));
        },
        Tri::yes, Tri::yes);
    return f;
}

const ArithFunction& af_minus_one_pow() {
    static const ArithFunction f = make_arith(
        "minus-one-pow", [](i64 n) { return Rat(n % 2 == 0 ? 1 : -1); }, Tri::no,
        Tri::no);
    return f;
}

ArithFunction af_const(const Rat& c) {
    return make_arith("const(" + rat_human(c) + ")", [c](i64) { return c; },
                      c == 1 ? Tri::yes : Tri::no, c == 1 ? Tri::yes : Tri::no);
}

ArithFunction af_scale(const Rat& c, const ArithFunction& f) {
    ArithFunction base = f;
    return make_arith(rat_human(c) + "*" + f.name,
                      [c, base](i64 n) -> Rat { return c * base(n); },
                      c == 1 ? f.multiplicative : Tri::no,
                      c == 1 ? f.strongly_multiplicative : Tri::no);
}

ArithFunction arith_by_name(std::string_view name) {
    std::string key(name);
    if (key.size() > 4 && key.ends_with("-gcd"))
        key = key.substr(0, key.size() - 4);
    if (key == "eps")
        return af_eps();
    if (key == "one")
        return af_one();
    if (key == "id")
        return af_id();
    if (key == "tau")
        return af_tau();
    if (key == "sigma")
        return af_sigma();
    if (key == "mobius")
        return af_mobius();
    if (key == "two-omega")
        return af_two_omega();
    if (key == "minus-one-pow")
        return af_minus_one_pow();
    if (key.starts_with("const(") && key.ends_with(")"))
        return af_const(parse_rat(key.substr(6, key.size() - 7)));
    throw UsageError("unknown function '" + std::string(name) +
                     "'; known: eps one id tau sigma mobius two-omega "
                     "minus-one-pow const(c)");
}

std::vector<std::string> arith_registry_names() {
    return {"eps",    "one",       "id",            "tau",     "sigma",
            "mobius", "two-omega", "minus-one-pow", "const(c)"};
}

Rat dirichlet_convolve(const ArithFunction& f, const ArithFunction& g, i64 n) {
    Rat acc(0);
    for (i64 d : divisors(n))
        acc += f(d) * g(n / d);
    return acc;
}

Rat mobius_transform(const ArithFunction& f, i64 n) {
    return dirichlet_convolve(af_mobius(), f, n);
}

} // namespace reven
