#pragma once

#include "reven/arith.hpp"
#include "reven/even.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace reven {

// Per-modulus table of Ramanujan sums c_q(d) for q, d | r, plus phi
// and mu on the divisors.  Built once per r (Holder route over the
// prime decomposition) and shared; immutable after construction.
class RamanujanTable {
public:
    static std::shared_ptr<const RamanujanTable> for_modulus(i64 r);

    i64 modulus() const { return r_; }
    const std::vector<i64>& divs() const { return divs_; }
    std::size_t index_of(i64 d) const;

    i64 phi(i64 d) const;
    int mu(i64 d) const;
    i64 c(i64 q, i64 n) const;                          // q | r, any n
    i64 c_at(std::size_t qi, std::size_t di) const;     // c_{divs[qi]}(divs[di])

private:
    explicit RamanujanTable(i64 r);

    i64 r_;
    std::vector<i64> divs_;
    std::vector<i64> phi_;
    std::vector<int> mu_;
    std::vector<i64> table_; // row q-index, column divisor-index
};

// Divisor counts above this make the dense table unreasonable.
inline constexpr i64 kMaxTableDivisors = 4096;

// Structured transform on the divisor basis:
// fhat(n) = sum over d|r of f(d) c_{r/d}(n).
EvenFunction dft(const EvenFunction& f);

// Inverse: f(n) = (1/r) sum over d|r of g(d) c_{r/d}(n).
EvenFunction idft(const EvenFunction& g);

// Independent route through the Mobius core:
// fhat(n) = sum over d | gcd(n,r) of d f'(r/d).
EvenFunction dft_via_core(const EvenFunction& f);

// Core of the transform without transforming: (fhat)'(d) = d f'(r/d)
// for d | r (and zero off the divisors).
std::vector<Rat> dft_core(const EvenFunction& f);

// DFT of (-1)^n for even r: value r at gcd-class r/2, zero elsewhere.
// Cross-checked against dft(even_alternating(r)).
EvenFunction alternating_dft(i64 r);

// Number of solutions of x_1 + ... + x_k = n (mod r) with every x_i
// coprime to r, by the Ramanujan expansion
// N_r(n,k) = (1/r) sum over d|r of c_r(r/d)^k c_d(n).
// The rational intermediate must clear to a non-negative integer.
i64 count_congruence_solutions(i64 r, int k, i64 n);

// Brute-force oracle: counts for every residue n = 0..r-1 at once by
// k-fold Cauchy power of the coprimality indicator.
inline constexpr i64 kCongruenceOracleBound = 30;
std::vector<i64> count_congruence_bruteforce(i64 r, int k);

struct SghSpec {
    ArithFunction g;
    ArithFunction h;
    i64 r = 1;
};

struct AndersonApostol {
    EvenFunction s;     // S(n) = sum over d | gcd(n,r) of g(d) h(r/d)
    EvenFunction s_hat; // DFT, closed form sum over d | gcd(n,r) of d g(r/d) h(d)
};

// Both members exact; s_hat computed by the closed form and asserted
// equal to dft(s).
AndersonApostol anderson_apostol(const SghSpec& spec);

// Cohen's inversion: from coefficients g on divisors, build
// f(n) = sum over d|r of g(d) c_d(n), then recover g via
// g(m) = (1/r) sum over d|r of f(r/d) c_d(n) with m = r/gcd(n,r).
// The recovered coefficients must equal the input exactly.
EvenFunction cohen_forward(const EvenFunction& g);
EvenFunction cohen_invert(const EvenFunction& g);

// Holder-type closed form for the DFT of F(gcd(n,r)):
// fhat_r(n) = (F*mu)(m) (F*phi)(r) / (F*phi)(m), m = r/gcd(n,r).
// Preconditions: F declared strongly multiplicative (spot-checked on
// prime powers p^a <= 10^4 for p | r) and F(p) != 1-p for p | r.
// Result asserted equal to dft_via_core at n.
Rat holder_closed_form(const ArithFunction& F, i64 r, i64 n);

// A sequence r -> f_r of r-even functions.
struct SequenceSpec {
    std::string name;
    std::function<EvenFunction(i64)> member;
    Tri declared_multiplicative = Tri::unknown; // of (n,r) -> f_r(n)
    std::optional<ArithFunction> F;             // engaged for completely even rules
};

SequenceSpec completely_even_sequence(const ArithFunction& F);
SequenceSpec custom_sequence(std::string name, std::function<EvenFunction(i64)> member,
                             Tri declared_multiplicative = Tri::unknown);

struct MultViolation {
    std::string law; // which check failed
    i64 m, n, r, s;  // witnesses (unused slots zero)
    std::string lhs, rhs;
};

struct MultReport {
    i64 bound = 0;
    i64 checked = 0;
    bool base_two_variable = true;  // f(mn, rs) = f(m,r) f(n,s)
    bool dft_two_variable = true;   // same for fhat
    bool quasi = true;              // fhat_r(m) fhat_r(n) = f'_r(r) fhat_r(mn)
    bool criterion = true;          // n -> fhat_r(n) multiplicative <=> f'_r(r) = 1
    std::vector<MultViolation> violations;

    bool pass() const { return violations.empty(); }
};

MultReport check_sequence_multiplicativity(const SequenceSpec& seq, i64 bound);

struct IdentityCheck {
    std::string name;
    i64 n = 0, r = 0;
    std::string lhs, rhs;
    bool ok = true;
};

// Divisor-sum identities at (n, r): the tau-weighted partial sum of
// fhat over d|n, the cross-modulus sums over d|r, and (for completely
// even rules) the square detector.  With strict=true an inequality
// throws IdentityViolation carrying both sides.
std::vector<IdentityCheck> divisor_sum_identities(const SequenceSpec& seq, i64 n, i64 r,
                                                  bool strict = true);

struct ClassifyReport {
    std::string F;
    i64 bound = 0;
    bool dft_completely_even = false;
    std::optional<Rat> tau_scale; // c with F = c*tau when completely even
    std::string witness;          // first conflicting pair otherwise
};

// Bounded decision procedure: tests fhat_r(n) = G(gcd(n,r)) against
// the forced candidate G = id*F' for all r <= bound.
ClassifyReport classify_completely_even_dft(const ArithFunction& F, i64 bound);

} // namespace reven
