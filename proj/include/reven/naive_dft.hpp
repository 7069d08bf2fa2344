#pragma once

#include "reven/even.hpp"

#include <complex>
#include <vector>

namespace reven {

// Floating-point residue table mod r; values[i] = t(i+1), index r-1 is
// the zero class.  This is the oracle side of the house: all arithmetic
// here is double precision on purpose.
struct ComplexTable {
    i64 r = 1;
    std::vector<std::complex<double>> values;

    const std::complex<double>& at(i64 n) const;
};

ComplexTable to_complex(const PeriodicTable& t);
ComplexTable to_complex(const EvenFunction& f);
ComplexTable additive_character(i64 r, i64 k); // e_k(n) = exp(2 pi i k n / r)

double l1_norm(const ComplexTable& t);
double max_abs_diff(const ComplexTable& a, const ComplexTable& b);

inline constexpr i64 kNaiveDftBound = 5000;

// Kernel selection for the O(r^2) transform.  auto_pick takes AVX2
// when the CPU has it, otherwise the scalar reference.  Requesting
// avx2 on a CPU without it is a UsageError.
enum class DftKernel { auto_pick, scalar, avx2 };
bool kernel_available(DftKernel k);
const char* kernel_name(DftKernel k);

// that(n) = sum over k mod r of t(k) exp(-2 pi i k n / r).
// BoundError for r > kNaiveDftBound.
ComplexTable dft_naive(const ComplexTable& t, DftKernel kernel = DftKernel::auto_pick);
ComplexTable dft_naive(const PeriodicTable& t, DftKernel kernel = DftKernel::auto_pick);

} // namespace reven
