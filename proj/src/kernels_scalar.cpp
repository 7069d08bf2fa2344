#include "kernels.hpp"

namespace reven::detail {

void dft_kernel_scalar(std::int64_t r, const double* fre, const double* fim,
                       const double* wre, const double* wim, double* out_re,
                       double* out_im) {
    for (std::int64_t n = 1; n <= r; ++n) {
        double acc_re = 0.0, acc_im = 0.0;
        // j walks (k*n) mod r with one conditional subtract per step
        std::int64_t step = n % r;
        std::int64_t j = 0;
        for (std::int64_t k = 1; k <= r; ++k) {
            j += step;
            if (j >= r)
                j -= r;
            double a = fre[k - 1], b = fim[k - 1];
            double c = wre[j], d = wim[j];
            acc_re += a * c - b * d;
            acc_im += a * d + b * c;
        }
        out_re[n - 1] = acc_re;
        out_im[n - 1] = acc_im;
    }
}

} // namespace reven::detail
