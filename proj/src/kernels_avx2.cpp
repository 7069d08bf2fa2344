#include "kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace reven::detail {

bool cpu_has_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

__attribute__((target("avx2,fma"))) void dft_kernel_avx2(
    std::int64_t r, const double* fre, const double* fim, const double* wre,
    const double* wim, double* out_re, double* out_im) {
    const __m256i vr = _mm256_set1_epi64x(r);
    for (std::int64_t n = 1; n <= r; ++n) {
        const std::int64_t s = n % r;
        // lane l handles k = base + l with twiddle index (k*n) mod r
        std::int64_t i0 = s;
        std::int64_t i1 = i0 + s >= r ? i0 + s - r : i0 + s;
        std::int64_t i2 = i1 + s >= r ? i1 + s - r : i1 + s;
        std::int64_t i3 = i2 + s >= r ? i2 + s - r : i2 + s;
        __m256i idx = _mm256_set_epi64x(i3, i2, i1, i0);
        const std::int64_t s4 = (4 * s) % r;
        const __m256i vstep = _mm256_set1_epi64x(s4);
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        std::int64_t k = 1;
        for (; k + 3 <= r; k += 4) {
            const __m256d wr = _mm256_i64gather_pd(wre, idx, 8);
            const __m256d wi = _mm256_i64gather_pd(wim, idx, 8);
            const __m256d ar = _mm256_loadu_pd(fre + (k - 1));
            const __m256d ai = _mm256_loadu_pd(fim + (k - 1));
            acc_re = _mm256_fmadd_pd(ar, wr, acc_re);
            acc_re = _mm256_fnmadd_pd(ai, wi, acc_re);
            acc_im = _mm256_fmadd_pd(ar, wi, acc_im);
            acc_im = _mm256_fmadd_pd(ai, wr, acc_im);
            idx = _mm256_add_epi64(idx, vstep);
            const __m256i over = _mm256_cmpgt_epi64(vr, idx); // r > idx ?
            idx = _mm256_sub_epi64(idx, _mm256_andnot_si256(over, vr));
        }
        alignas(32) double tmp_re[4], tmp_im[4];
        _mm256_store_pd(tmp_re, acc_re);
        _mm256_store_pd(tmp_im, acc_im);
        double sum_re = (tmp_re[0] + tmp_re[1]) + (tmp_re[2] + tmp_re[3]);
        double sum_im = (tmp_im[0] + tmp_im[1]) + (tmp_im[2] + tmp_im[3]);
        for (; k <= r; ++k) {
            std::int64_t j = (k % r) * s % r;
            double a = fre[k - 1], b = fim[k - 1];
            sum_re += a * wre[j] - b * wim[j];
            sum_im += a * wim[j] + b * wre[j];
        }
        out_re[n - 1] = sum_re;
        out_im[n - 1] = sum_im;
    }
}

} // namespace reven::detail

#else

namespace reven::detail {

bool cpu_has_avx2() {
    return false;
}

void dft_kernel_avx2(std::int64_t r, const double* fre, const double* fim,
                     const double* wre, const double* wim, double* out_re,
                     double* out_im) {
    dft_kernel_scalar(r, fre, fim, wre, wim, out_re, out_im);
}

} // namespace reven::detail

#endif
