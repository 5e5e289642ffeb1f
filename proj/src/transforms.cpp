#include "autforms/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace autforms {

namespace {

cx ipow(cx z, int n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    cx r = 1.0;
    while (n-- > 0) r *= z;
    return r;
}

}  // namespace

cx jacquet_phi(const SpectralParameter& p, const GroupElement& g) {
    IwasawaCoords c = iwasawa(g);
    const cx nu = p.nu;
    const double dl = static_cast<double>(p.delta * p.ell);
    // 1/Gamma(nu + delta ell + 1/2): zero at poles (the discrete-series zeros of (15.4))
    cx denom_arg = nu + dl + 0.5;
    cx invg;
    try {
        invg = 1.0 / cgamma(denom_arg);
    } catch (const domain_error&) {
        return 0.0;
    }
    double sgn = (p.ell % 2) ? -1.0 : 1.0;
    cx w = whittaker_W(cx(dl), nu, 4.0 * PI * c.y);
    return sgn * std::exp((nu + 0.5) * std::log(PI)) * std::exp(cx(0.0, 2.0 * p.ell * c.theta)) *
           e_of(p.delta * c.x) * w * invg;
}

cx jacquet_phi_integral_oracle(const SpectralParameter& p, const GroupElement& g,
                               const QuadratureSpec& q) {
    q.validate();
    IwasawaCoords co = iwasawa(g);
    const double y = co.y;
    const cx nu = p.nu;
    const int dl = p.delta * p.ell;
    const double T = std::max(q.truncation_height, 1200.0) / std::min(1.0, y);
    const double h = 0.02 / std::max(1.0, y);
    const double T1 = 0.55 * T;  // taper start

    auto windowed = [&](double Tcut) {
        const long n = static_cast<long>(Tcut / h);
        cx s = 0.0;
        for (long k = -n; k <= n; ++k) {
            double xi = k * h;
            double win = 1.0;
            double axi = std::abs(xi);
            if (axi > T1) {
                double t = (axi - T1) / (Tcut - T1);
                win = std::cos(0.5 * PI * t);
                win *= win;
            }
            cx v = e_of(-y * xi) * std::exp(-(nu + 0.5) * std::log(cx(xi * xi + 1.0))) *
                   ipow((cx(xi, -1.0)) / (cx(xi, 1.0)), dl);
            s += win * v;
        }
        return h * s;
    };
    cx I = windowed(T);
    cx I2 = windowed(0.7 * T);
    if (std::abs(I - I2) > std::max(q.abs_tol * 1e4, 1e-4 * std::abs(I)))
        throw domain_error("jacquet oracle: xi-integral failed the Cauchy criterion");
    return std::exp(cx(0.0, 2.0 * p.ell * co.theta)) * e_of(p.delta * co.x) *
           std::exp((0.5 - nu) * std::log(y)) * I;
}

cx jacquet_phi_schlafli_oracle(const SpectralParameter& p, const GroupElement& g) {
    IwasawaCoords co = iwasawa(g);
    const double y = co.y;
    const cx nu = p.nu;
    const int L = std::abs(p.ell);
    const double ds = (p.ell == 0) ? 1.0 : static_cast<double>(p.delta * ((p.ell > 0) ? 1 : -1));
    cx invg;
    try {
        invg = 1.0 / cgamma(nu + static_cast<double>(L) + 0.5);
    } catch (const domain_error&) {
        return 0.0;
    }
    // binomials C(2L, 2j)
    std::vector<double> binom(2 * L + 1);
    binom[0] = 1.0;
    for (int k = 1; k <= 2 * L; ++k) binom[k] = binom[k - 1] * (2.0 * L - k + 1.0) / k;

    cx sum = 0.0;
    for (int j = 0; j <= L; ++j) {
        // u-integral, u = e^t:  int (e^{t/2} + ds e^{-t/2})^{2j} e^{nu t} e^{-2 pi y cosh t} dt
        auto f = [&](double t) -> cx {
            double base = (ds > 0) ? 2.0 * std::cosh(0.5 * t) : 2.0 * std::sinh(0.5 * t);
            double pw = 1.0;
            for (int i = 0; i < 2 * j; ++i) pw *= base;
            return pw * std::exp(nu * t - 2.0 * PI * y * std::cosh(t));
        };
        double T = 3.0;
        while (2.0 * PI * y * std::cosh(T) < 46.0 + (std::abs(nu.real()) + L) * T && T < 50.0) T += 0.5;
        cx I = trapezoid_uniform(f, -T, T, static_cast<int>(T / 0.01));
        sum += std::pow(-PI, j) * binom[2 * j] * cgamma(cx(L - j + 0.5)) * std::pow(y, j + 0.5) * I;
    }
    return std::exp(nu * std::log(PI)) * std::exp(cx(0.0, 2.0 * p.ell * co.theta)) *
           e_of(p.delta * co.x) * invg * sum;
}

cx kirillov(const SpectralParameter& p, double u) {
    if (u == 0.0) throw domain_error("kirillov: u must be nonzero");
    SpectralParameter q = p;
    q.delta = (u > 0.0) ? +1 : -1;
    return jacquet_phi(q, GroupElement::a_of(std::abs(u)));
}

cx kirillov_discrete(int ell, int l, double u) {
    if (l < 1) throw domain_error("kirillov_discrete: l must be a positive integer");
    if (ell < l) throw domain_error("kirillov_discrete: requires ell >= l");
    if (u <= 0.0) return 0.0;
    SpectralParameter p;
    p.nu = cx(l - 0.5);
    p.ell = ell;
    p.delta = +1;
    double norm = std::pow(PI, 0.5 - l) *
                  std::sqrt(std::abs(cgamma(cx(static_cast<double>(ell + l))).real() /
                                     cgamma(cx(static_cast<double>(ell - l + 1))).real()));
    return norm * jacquet_phi(p, GroupElement::a_of(u));
}

cx gamma_ell(cx s, cx nu, int ell) {
    // existence strip |Re s - 1/2| < Re nu + 1/2
    if (std::abs(s.real() - 0.5) >= nu.real() + 0.5)
        throw domain_error("gamma_ell: s outside the existence strip");
    WhittakerEvaluator W(cx(static_cast<double>(ell)), nu);
    const double a = s.real() - std::abs(nu.real());  // small-t exponent of the integrand
    const double v0 = std::max(-60.0 / std::max(a, 0.02), -900.0);
    double v1 = 4.2;
    while (0.5 * std::exp(v1) - std::abs(s.real()) * v1 < 50.0) v1 += 0.2;
    const double freq = std::abs(s.imag()) + std::abs(nu.imag()) + 1.0;
    const double h = std::min(0.02, 1.2 / freq);
    auto f = [&](double v) { return W(std::exp(v)) * std::exp(v * (s - 0.5)); };
    cx M = trapezoid_uniform(f, v0, v1, static_cast<int>((v1 - v0) / h));
    double sgn = (ell % 2) ? -1.0 : 1.0;
    return sgn * std::exp((nu + 0.5) * std::log(PI)) / cgamma(nu + static_cast<double>(ell) + 0.5) *
           std::exp((0.5 - s) * std::log(4.0 * PI)) * M;
}

cx y_ell(cx s, cx nu, int ell) {
    if (std::abs(s.real() - 0.5) >= nu.real() + 0.5)
        throw domain_error("y_ell: s outside the existence strip");
    auto f = [&](double t) -> cx {
        double xi = std::exp(t);
        cx ratio = cx(xi, -1.0) / cx(xi, 1.0);
        return std::exp((1.0 - s + nu) * t - (nu + 0.5) * std::log(cx(xi * xi + 1.0))) * ipow(ratio, ell);
    };
    double aplus = (s + nu).real(), aminus = (1.0 - s + nu).real();
    double Tp = 50.0 / std::max(aplus, 0.05), Tm = 50.0 / std::max(aminus, 0.05);
    double h = std::min(0.01, 1.0 / (std::abs(s.imag()) + std::abs(nu.imag()) + 1.0));
    return trapezoid_uniform(f, -std::min(Tm, 900.0), std::min(Tp, 900.0),
                             static_cast<int>((std::min(Tp, 900.0) + std::min(Tm, 900.0)) / h));
}

cx bessel_repr(const BesselKernelParams& params, double lambda) {
    if (lambda == 0.0) throw domain_error("bessel_repr: lambda must be nonzero");
    const cx nu = params.nu;
    // discrete-series branch
    double lg = nu.real() + 0.5;
    long l = std::lround(lg);
    if (l >= 1 && std::abs(nu.real() - (l - 0.5)) < 1e-6 && std::abs(nu.imag()) < 1e-6) {
        if (lambda < 0.0) return 0.0;
        double r = 4.0 * PI * std::sqrt(lambda);
        double sgn = (l % 2) ? -1.0 : 1.0;
        return 2.0 * PI * sgn * std::sqrt(lambda) * bessel_J(cx(2.0 * l - 1.0), r);
    }
    if (std::abs(nu.real()) >= 0.5)
        throw domain_error("bessel_repr: nu outside the strip |Re nu| < 1/2");
    if (lambda > 0.0) {
        double r = 4.0 * PI * std::sqrt(lambda);
        return PI * std::sqrt(lambda) / sin_pi(nu) * (bessel_J(-2.0 * nu, r) - bessel_J(2.0 * nu, r));
    }
    double al = -lambda;
    double r = 4.0 * PI * std::sqrt(al);
    return 4.0 * std::sqrt(al) * cos_pi(nu) * bessel_K(2.0 * nu, r);
}

// ---------------------------------------------------------------------------

KirillovVector KirillovVector::make_grid(double u_min, double u_max, int n_per_sign) {
    if (!(u_min > 0.0) || !(u_max > u_min)) throw domain_error("KirillovVector: bad grid bounds");
    KirillovVector v;
    v.u_pos.resize(n_per_sign);
    v.u_neg.resize(n_per_sign);
    double l0 = std::log(u_min), l1 = std::log(u_max);
    for (int i = 0; i < n_per_sign; ++i) {
        double t = l0 + (l1 - l0) * i / (n_per_sign - 1.0);
        v.u_pos[i] = v.u_neg[i] = std::exp(t);
    }
    v.v_pos.assign(n_per_sign, 0.0);
    v.v_neg.assign(n_per_sign, 0.0);
    return v;
}

cx KirillovVector::integrate_dxu(const std::function<cx(double, cx)>& weight) const {
    // trapezoid in log u on each sign
    cx total = 0.0;
    auto side = [&](const std::vector<double>& u, const std::vector<cx>& v, double sgn) {
        cx s = 0.0;
        for (std::size_t i = 0; i + 1 < u.size(); ++i) {
            double dt = std::log(u[i + 1] / u[i]);
            s += 0.5 * dt * (weight(sgn * u[i], v[i]) + weight(sgn * u[i + 1], v[i + 1]));
        }
        return s;
    };
    total += side(u_pos, v_pos, +1.0);
    total += side(u_neg, v_neg, -1.0);
    return total;
}

double KirillovVector::norm_dxu_over_pi() const {
    cx n = integrate_dxu([](double, cx v) { return cx(std::norm(v), 0.0); });
    return std::sqrt(n.real() / PI);
}

void KirillovVector::save_csv(const std::string& path_prefix) const {
    auto dump = [](const std::string& path, const std::vector<double>& u, const std::vector<cx>& v,
                   double sgn) {
        std::ofstream f(path);
        f.precision(17);
        f << "u,re,im\n";
        for (std::size_t i = 0; i < u.size(); ++i)
            f << sgn * u[i] << "," << v[i].real() << "," << v[i].imag() << "\n";
    };
    dump(path_prefix + ".pos.csv", u_pos, v_pos, +1.0);
    dump(path_prefix + ".neg.csv", u_neg, v_neg, -1.0);
}

namespace {

// transform of one output point: int over R^x of j(u lambda) f(lambda) d^x lambda,
// with cubic interpolation of f in log lambda and node density following the
// oscillation of j.
cx transform_at(const KirillovVector& f, const BesselKernelParams& params, double u) {
    cx acc = 0.0;
    auto side = [&](const std::vector<double>& lam, const std::vector<cx>& val, double sgn) {
        if (lam.size() < 4) throw domain_error("bessel_transform: grid too small");
        cx s = 0.0;
        const std::size_t n = lam.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            double t0 = std::log(lam[i]), t1 = std::log(lam[i + 1]);
            // phase increment of j over this segment: 4 pi sqrt(|u| lambda) variation
            double dphi = 4.0 * PI * std::sqrt(std::abs(u)) *
                          std::abs(std::sqrt(lam[i + 1]) - std::sqrt(lam[i]));
            int m = std::max(1, static_cast<int>(dphi / 0.45) + 1);
            // Catmull-Rom in log lambda
            cx p0 = val[i > 0 ? i - 1 : 0], p1 = val[i], p2 = val[i + 1],
               p3 = val[i + 2 < n ? i + 2 : n - 1];
            for (int k = 0; k < m; ++k) {
                double a = (k + 0.5) / m;
                double t = t0 + (t1 - t0) * a;
                cx fv = 0.5 * ((2.0 * p1) + (-p0 + p2) * a + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * (a * a) +
                               (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * (a * a * a));
                double lamk = std::exp(t);
                s += (t1 - t0) / m * bessel_repr(params, sgn * u * lamk) * fv;
            }
        }
        return s;
    };
    acc += side(f.u_pos, f.v_pos, +1.0);
    acc += side(f.u_neg, f.v_neg, -1.0);
    return acc;
}

KirillovVector transform_impl(const KirillovVector& f, const BesselKernelParams& params,
                              const KirillovVector& out_grid, bool parallel) {
    KirillovVector out = out_grid;
    const std::size_t np = out.u_pos.size(), nn = out.u_neg.size();
    std::vector<cx> terms(np + nn);
    auto kernel = [&](std::size_t i) {
        return (i < np) ? transform_at(f, params, out.u_pos[i])
                        : transform_at(f, params, -out.u_neg[i - np]);
    };
    if (parallel) {
        parallel_fill(terms, np + nn, kernel);
    } else {
        for (std::size_t i = 0; i < np + nn; ++i) terms[i] = kernel(i);
    }
    for (std::size_t i = 0; i < np; ++i) out.v_pos[i] = terms[i];
    for (std::size_t i = 0; i < nn; ++i) out.v_neg[i] = terms[np + i];
    return out;
}

}  // namespace

KirillovVector bessel_transform(const KirillovVector& f, const BesselKernelParams& params,
                                const KirillovVector& out_grid) {
    return transform_impl(f, params, out_grid, true);
}

KirillovVector bessel_transform_serial(const KirillovVector& f, const BesselKernelParams& params,
                                       const KirillovVector& out_grid) {
    return transform_impl(f, params, out_grid, false);
}

}  // namespace autforms
