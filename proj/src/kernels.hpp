#pragma once

#include <cstdint>

namespace reven::detail {

// Dense DFT kernels over split re/im arrays of length r.
// out[n-1] = sum over k=1..r of f[k-1] * w[(k*n) mod r], where
// w[j] = exp(-2 pi i j / r) is the precomputed twiddle table.
void dft_kernel_scalar(std::int64_t r, const double* fre, const double* fim,
                       const double* wre, const double* wim, double* out_re,
                       double* out_im);

bool cpu_has_avx2();

// Same contract as the scalar kernel; compiled with AVX2+FMA target
// attributes and gathered twiddle loads.  Only callable when
// cpu_has_avx2() is true.
void dft_kernel_avx2(std::int64_t r, const double* fre, const double* fim,
                     const double* wre, const double* wim, double* out_re,
                     double* out_im);

} // namespace reven::detail
