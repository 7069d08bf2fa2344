#include "reven/naive_dft.hpp"

#include "kernels.hpp"
#include "reven/error.hpp"

#include <cmath>
#include <numbers>

namespace reven {

const std::complex<double>& ComplexTable::at(i64 n) const {
    i64 m = n % r;
    if (m <= 0)
        m += r;
    return values[static_cast<std::size_t>(m - 1)];
}

ComplexTable to_complex(const PeriodicTable& t) {
    ComplexTable out;
    out.r = t.r;
    out.values.reserve(t.values.size());
    for (const Rat& v : t.values)
        out.values.emplace_back(rat_to_double(v), 0.0);
    return out;
}

ComplexTable to_complex(const EvenFunction& f) {
    return to_complex(expand(f));
}

ComplexTable additive_character(i64 r, i64 k) {
    if (r < 1)
        throw UsageError("additive_character: r must be >= 1");
    ComplexTable out;
    out.r = r;
    out.values.reserve(static_cast<std::size_t>(r));
    const double base = 2.0 * std::numbers::pi / static_cast<double>(r);
    i64 kr = k % r;
    if (kr < 0)
        kr += r;
    for (i64 n = 1; n <= r; ++n)
        out.values.emplace_back(std::polar(1.0, base * static_cast<double>((kr * n) % r)));
    return out;
}

double l1_norm(const ComplexTable& t) {
    double acc = 0.0;
    for (const auto& v : t.values)
        acc += std::abs(v);
    return acc;
}

double max_abs_diff(const ComplexTable& a, const ComplexTable& b) {
    if (a.r != b.r)
        throw UsageError("max_abs_diff: modulus mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

bool kernel_available(DftKernel k) {
    switch (k) {
    case DftKernel::avx2:
        return detail::cpu_has_avx2();
    case DftKernel::scalar:
    case DftKernel::auto_pick:
        return true;
    }
    return false;
}

const char* kernel_name(DftKernel k) {
    switch (k) {
    case DftKernel::auto_pick:
        return detail::cpu_has_avx2() ? "avx2" : "scalar";
    case DftKernel::scalar:
        return "scalar";
    case DftKernel::avx2:
        return "avx2";
    }
    return "?";
}

ComplexTable dft_naive(const ComplexTable& t, DftKernel kernel) {
    const i64 r = t.r;
    if (r > kNaiveDftBound)
        throw BoundError("dft_naive: r = " + std::to_string(r) + " exceeds oracle bound " +
                         std::to_string(kNaiveDftBound));
    if (!kernel_available(kernel))
        throw UsageError("dft_naive: requested kernel not available on this CPU");

    const std::size_t sz = static_cast<std::size_t>(r);
    std::vector<double> fre(sz), fim(sz), wre(sz), wim(sz), ore(sz), oim(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        fre[i] = t.values[i].real();
        fim[i] = t.values[i].imag();
    }
    const double base = -2.0 * std::numbers::pi / static_cast<double>(r);
    for (std::size_t j = 0; j < sz; ++j) {
        wre[j] = std::cos(base * static_cast<double>(j));
        wim[j] = std::sin(base * static_cast<double>(j));
    }

    bool use_avx2 = kernel == DftKernel::avx2 ||
                    (kernel == DftKernel::auto_pick && detail::cpu_has_avx2());
    if (use_avx2)
        detail::dft_kernel_avx2(r, fre.data(), fim.data(), wre.data(), wim.data(),
                                ore.data(), oim.data());
    else
        detail::dft_kernel_scalar(r, fre.data(), fim.data(), wre.data(), wim.data(),
                                  ore.data(), oim.data());

    ComplexTable out;
    out.r = r;
    out.values.reserve(sz);
    for (std::size_t i = 0; i < sz; ++i)
        out.values.emplace_back(ore[i], oim[i]);
    return out;
}

ComplexTable dft_naive(const PeriodicTable& t, DftKernel kernel) {
    return dft_naive(to_complex(t), kernel);
}

} // namespace reven
