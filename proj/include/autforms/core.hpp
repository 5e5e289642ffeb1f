#pragma once

#include <complex>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace autforms {

using cx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338328;
inline constexpr double TWO_PI = 2.0 * PI;
// Euler-Mascheroni constant
inline constexpr double EULER_GAMMA = 0.57721566490153286060651209008;

// sin(pi x), cos(pi x) with exact argument reduction modulo 1.  Plain
// std::sin(PI*x) loses all accuracy near integer x, which matters for the
// reflection formulas used throughout specfun.
double sin_pi(double x);
double cos_pi(double x);
cx sin_pi(cx z);
cx cos_pi(cx z);

// e(x) = exp(2 pi i x)
inline cx e_of(double x) {
    double f = x - std::floor(x);
    return {std::cos(TWO_PI * f), std::sin(TWO_PI * f)};
}

inline bool is_finite(cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Deterministic pairwise reduction.  Terms are filled (possibly in parallel)
// into a vector first; the reduction order is then fixed by the tree shape,
// so serial and OpenMP runs produce bit-identical sums.
template <class T>
T pairwise_sum(std::span<const T> v) {
    const std::size_t n = v.size();
    if (n == 0) return T{};
    if (n <= 8) {
        T s = v[0];
        for (std::size_t i = 1; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(std::span<const T>(v.data(), v.size()));
}

// Fill out[i] = f(i) for i in [0, n), in parallel when OpenMP is enabled.
// Each slot is written exactly once, so the result does not depend on the
// schedule; combined with pairwise_sum this gives reproducible reductions.
template <class T, class F>
void parallel_fill(std::vector<T>& out, std::size_t n, F&& f) {
    out.resize(n);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
}

template <class T, class F>
T parallel_sum_terms(std::size_t n, F&& f) {
    std::vector<T> terms;
    parallel_fill(terms, n, f);
    return pairwise_sum(terms);
}

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace autforms
