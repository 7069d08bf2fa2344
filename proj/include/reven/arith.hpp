#pragma once

#include "reven/factor.hpp"
#include "reven/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace reven {

// --- classical multiplicative functions, exact ---

int mobius(i64 n);
i64 euler_phi(i64 n);
i64 tau(i64 n);
Rat sigma_k(int k, i64 n); // sum of d^k over d|n; k may be negative
Rat phi_k(int k, i64 n);   // sum of d^k mu(n/d) over d|n; phi_1 = euler_phi

// An exact linear combination of log p over primes p.  Zero when the
// coefficient map is empty or all-zero.  Keeps von Mangoldt data and
// (f*Lambda)(r) symbolic; value() is the only lossy step.
struct LogLinear {
    std::map<i64, Rat> coeff; // prime -> coefficient of log(prime)

    void add(i64 prime, const Rat& c);
    bool is_zero() const;
    double value() const;
    std::string str() const; // deterministic, e.g. "log(2) - 1/2*log(3)"
    bool operator==(const LogLinear&) const = default;
};

// Lambda(n): log p for n = p^a, zero otherwise.
LogLinear von_mangoldt(i64 n);

// --- arithmetical functions as values ---

enum class Tri { no, yes, unknown };

struct ArithFunction {
    std::string name;
    std::function<Rat(i64)> fn;
    Tri multiplicative = Tri::unknown;
    Tri strongly_multiplicative = Tri::unknown;

    Rat operator()(i64 n) const;
};

// Checked constructor: a function declared multiplicative must have
// f(1) = 1 (verified here, UsageError otherwise).
ArithFunction make_arith(std::string name, std::function<Rat(i64)> fn,
                         Tri multiplicative = Tri::unknown,
                         Tri strongly = Tri::unknown);

// Named registry used by the CLI and by sweeps.
const ArithFunction& af_eps();       // 1 at n=1, else 0
const ArithFunction& af_one();       // constant 1
const ArithFunction& af_id();        // n
const ArithFunction& af_tau();
const ArithFunction& af_sigma();     // sigma_1
const ArithFunction& af_mobius();
const ArithFunction& af_two_omega();     // 2^(number of distinct primes)
const ArithFunction& af_minus_one_pow(); // (-1)^n
ArithFunction af_const(const Rat& c);
ArithFunction af_scale(const Rat& c, const ArithFunction& f); // c*f

// Parses "eps", "tau", "const(3/2)", ... also accepting a "-gcd"
// suffix ("tau-gcd" means the same F; the gcd wrap happens when an
// EvenFunction is built from it).  UsageError on unknown names.
ArithFunction arith_by_name(std::string_view name);
std::vector<std::string> arith_registry_names();

// --- Dirichlet ring ---

Rat dirichlet_convolve(const ArithFunction& f, const ArithFunction& g, i64 n);
Rat mobius_transform(const ArithFunction& f, i64 n); // (mu*f)(n)

} // namespace reven
