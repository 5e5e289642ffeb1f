#include "autforms/quadrature.hpp"

#include <cmath>

namespace autforms {

TanhSinhRule::TanhSinhRule(int n, double h) {
    if (h <= 0) h = 4.2 / n;
    t.reserve(2 * n + 1);
    w.reserve(2 * n + 1);
    for (int k = -n; k <= n; ++k) {
        double u = k * h;
        double s = std::sinh(u);
        double tk = std::tanh(0.5 * PI * s);
        double ck = std::cosh(0.5 * PI * s);
        double wk = h * 0.5 * PI * std::cosh(u) / (ck * ck);
        if (std::abs(tk) >= 1.0 || wk < 1e-320) continue;
        t.push_back(tk);
        w.push_back(wk);
    }
}

cx tanh_sinh(const std::function<cx(double)>& f, double a, double b, int n) {
    static thread_local int cached_n = -1;
    static thread_local TanhSinhRule rule(160);
    if (cached_n != n) {
        rule = TanhSinhRule(n);
        cached_n = n;
    }
    const double mid = 0.5 * (a + b), hal = 0.5 * (b - a);
    cx s = 0.0;
    for (std::size_t i = 0; i < rule.t.size(); ++i) {
        double x = mid + hal * rule.t[i];
        if (x <= a || x >= b) continue;  // guard against rounding onto endpoints
        s += rule.w[i] * f(x);
    }
    return hal * s;
}

cx exp_sinh_halfline(const std::function<cx(double)>& f, double scale, int n) {
    // x = scale * exp(sinh u), dx = scale * cosh(u) exp(sinh u) du
    const double h = 4.6 / n;
    cx s = 0.0;
    for (int k = -n; k <= n; ++k) {
        double u = k * h;
        double sh = std::sinh(u);
        if (sh > 690.0 || sh < -690.0) continue;
        double x = scale * std::exp(sh);
        double jac = scale * std::cosh(u) * std::exp(sh);
        if (!(x > 0.0) || !std::isfinite(jac)) continue;
        s += h * jac * f(x);
    }
    return s;
}

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev initial guess, Newton on P_n
        double z = std::cos(PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

cx gauss_legendre_int(const std::function<cx(double)>& f, double a, double b, int n) {
    static thread_local int cached_n = -1;
    static thread_local std::vector<double> xs, ws;
    if (cached_n != n) {
        gauss_legendre(n, xs, ws);
        cached_n = n;
    }
    const double mid = 0.5 * (a + b), hal = 0.5 * (b - a);
    cx s = 0.0;
    for (int i = 0; i < n; ++i) s += ws[i] * f(mid + hal * xs[i]);
    return hal * s;
}

cx trapezoid_uniform(const std::function<cx(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    cx s = 0.5 * (f(a) + f(b));
    for (int i = 1; i < n; ++i) s += f(a + i * h);
    return h * s;
}

}  // namespace autforms
