#include "autforms/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace autforms {

namespace {

cx ipow(cx z, int n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    cx r = 1.0;
    while (n-- > 0) r *= z;
    return r;
}

std::vector<std::pair<long, int>> squarefree_divisors(long c) {
    std::vector<std::pair<long, int>> ds{{1, 1}};
    long n = c;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            std::size_t m = ds.size();
            for (std::size_t i = 0; i < m; ++i) ds.push_back({ds[i].first * p, -ds[i].second});
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) {
        std::size_t m = ds.size();
        for (std::size_t i = 0; i < m; ++i) ds.push_back({ds[i].first * n, -ds[i].second});
    }
    return ds;
}

const std::vector<long>& totient_sieve(long n) {
    static thread_local std::vector<long> phi;
    if (static_cast<long>(phi.size()) < n + 1) {
        phi.resize(n + 1);
        std::iota(phi.begin(), phi.end(), 0L);
        for (long p = 2; p <= n; ++p)
            if (phi[p] == p)
                for (long k = p; k <= n; k += p) phi[k] -= phi[k] / p;
    }
    return phi;
}

}  // namespace

cx sigma_divisor(cx two_nu, long n) {
    if (n < 1) throw domain_error("sigma_divisor: n must be positive");
    cx s = 0.0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += std::exp(two_nu * std::log(static_cast<double>(d)));
        long e = n / d;
        if (e != d) s += std::exp(two_nu * std::log(static_cast<double>(e)));
    }
    return s;
}

cx phi_scattering(cx nu) {
    if (std::abs(nu - 0.5) < 1e-12) throw domain_error("phi_scattering: pole at nu = 1/2");
    auto form1 = [](cx v) -> cx {
        return std::sqrt(PI) * cgamma_ratio(v, v + 0.5) * riemann_zeta(2.0 * v) / riemann_zeta(2.0 * v + 1.0);
    };
    auto form2 = [](cx v) -> cx {
        return std::exp(2.0 * v * std::log(PI)) * cgamma_ratio(0.5 - v, v + 0.5) *
               riemann_zeta(1.0 - 2.0 * v) / riemann_zeta(2.0 * v + 1.0);
    };
    // pick a regular form; near removable points take a 4-point Richardson limit
    auto regular = [&](cx v) -> cx {
        bool zeta_arg_bad1 = std::abs(2.0 * v - 1.0) < 1e-6;
        bool gamma_bad1 = (v.real() < 0.25 && std::abs(v.imag()) < 0.25 &&
                           std::abs(v.real() - std::round(v.real())) < 1e-6 && std::abs(v.imag()) < 1e-6);
        if (!zeta_arg_bad1 && !gamma_bad1) return form1(v);
        bool zeta_arg_bad2 = std::abs(1.0 - 2.0 * v - 1.0) < 1e-6;  // zeta(1-2v) pole at v=0
        if (!zeta_arg_bad2) return form2(v);
        // both forms degenerate (v ~ 0): Richardson limit of form2 along real direction
        const double h = 1e-3;
        cx f1 = form2(v + h), f2 = form2(v + 2.0 * h), f3 = form2(v + 3.0 * h), f4 = form2(v + 4.0 * h);
        return 4.0 * f1 - 6.0 * f2 + 4.0 * f3 - f4;
    };
    return regular(nu);
}

cx eisenstein_c2(int ell, cx nu) {
    double al = std::abs(ell);
    double sgn = (ell % 2) ? -1.0 : 1.0;
    cx g2 = cgamma(nu + 0.5) * cgamma(nu + 0.5);
    return sgn * g2 * phi_scattering(nu) /
           (cgamma(nu + al + 0.5) * cgamma(nu - al + 0.5));
}

cx eisenstein_constant_term(int ell, cx nu, double y) {
    return std::exp((nu + 0.5) * std::log(y)) +
           eisenstein_c2(ell, nu) * std::exp((-nu + 0.5) * std::log(y));
}

EisensteinValue eisenstein_fourier(const EisensteinParams& p, const GroupElement& g) {
    p.validate();
    IwasawaCoords co = iwasawa(g);
    const double y = co.y;
    const cx nu = p.nu;
    long n_max = p.n_max;
    if (n_max == 0) {
        // 2 pi n y > 40 (1 + |Im nu|) puts the Whittaker tail below 1e-12
        n_max = static_cast<long>(40.0 * (1.0 + std::abs(nu.imag())) / (2.0 * PI * y)) + 1;
        n_max = std::max<long>(n_max, 4);
    }
    const cx theta_ph = std::exp(cx(0.0, 2.0 * p.ell * co.theta));
    cx E = eisenstein_constant_term(p.ell, nu, y) * theta_ph;

    const cx inv_zeta = 1.0 / riemann_zeta(2.0 * nu + 1.0);
    const double sgn = (p.ell % 2) ? -1.0 : 1.0;
    const cx pref = sgn * std::exp((nu + 0.5) * std::log(PI));
    // Whittaker evaluators for the two signs of n
    WhittakerEvaluator Wp(cx(static_cast<double>(p.ell)), nu);
    WhittakerEvaluator Wm(cx(static_cast<double>(-p.ell)), nu);
    cx invgp, invgm;
    bool zp = false, zm = false;
    try {
        invgp = 1.0 / cgamma(nu + static_cast<double>(p.ell) + 0.5);
    } catch (const domain_error&) {
        zp = true;
    }
    try {
        invgm = 1.0 / cgamma(nu - static_cast<double>(p.ell) + 0.5);
    } catch (const domain_error&) {
        zm = true;
    }

    cx nsum = 0.0;
    double last = 0.0, partial = 0.0;
    for (long n = 1; n <= n_max; ++n) {
        cx cn = std::exp(-nu * std::log(static_cast<double>(n))) * sigma_divisor(2.0 * nu, n) /
                std::sqrt(static_cast<double>(n));
        cx term = 0.0;
        if (!zp) term += cn * e_of(n * co.x) * Wp(4.0 * PI * n * y) * invgp;
        if (!zm) term += cn * e_of(-n * co.x) * Wm(4.0 * PI * n * y) * invgm;
        nsum += term;
        last = std::abs(term);
        partial = std::abs(nsum);
    }
    EisensteinValue out;
    out.n_max_used = n_max;
    out.est_tail = last;
    E += theta_ph * pref * inv_zeta * nsum;
    out.value = E;
    if (last > 1e-9 * std::max(partial, 1.0))
        out.est_tail = last;  // caller inspects; truncation-insufficient situations keep est_tail large
    return out;
}

// ---------------------------------------------------------------------------
// Direct route.
namespace {

struct DsumContext {
    int ell;
    cx sigma;  // nu + 1/2
    double x, y;
};

// f(d) = ((cx+d)^2 + (cy)^2)^{-sigma} * ((cx+d - i cy)/(cx+d + i cy))^ell
cx f_term(const DsumContext& ctx, long c, double d) {
    double w = c * ctx.x + d;
    double cy = c * ctx.y;
    double r2 = w * w + cy * cy;
    cx base = std::exp(-ctx.sigma * std::log(r2));
    if (ctx.ell == 0) return base;
    return base * ipow(cx(w, -cy) / cx(w, cy), ctx.ell);
}

// int_V^inf (1+v^2)^{-sigma} ((v-i)/(v+i))^ell dv  via theta = atan v
cx tail_profile_int(cx sigma, int ell, double V) {
    auto f = [&](double th) -> cx {
        double v = std::tan(th);
        cx H = (ell == 0) ? cx(1.0) : ipow(cx(v, -1.0) / cx(v, 1.0), ell);
        return std::exp((2.0 * sigma - 2.0) * std::log(cx(std::cos(th)))) * H;
    };
    return tanh_sinh(f, std::atan(V), 0.5 * PI, 140);
}

// exact sum over d == 0 mod e of f(d): window + Euler-Maclaurin tails
cx stride_sum(const DsumContext& ctx, long c, long e) {
    const double cy = c * ctx.y;
    const double D = 6.0 * std::max({static_cast<double>(e), cy, 10.0});
    const long m0 = static_cast<long>(std::floor((-D - c * ctx.x) / e));
    const long m1 = static_cast<long>(std::ceil((D - c * ctx.x) / e));
    cx S = 0.0;
    for (long m = m0; m <= m1; ++m) S += f_term(ctx, c, static_cast<double>(e) * m);
    // Euler-Maclaurin tails: sum_{m >= M} g(m) = int_M^inf g + g(M)/2 - B2/2! g' - B4/4! g''' ...
    static const double B2 = 1.0 / 6.0, B4 = -1.0 / 30.0, B6 = 1.0 / 42.0;
    for (int dir = 0; dir < 2; ++dir) {
        const double sd = dir == 0 ? 1.0 : -1.0;
        const double Mt = dir == 0 ? static_cast<double>(m1 + 1) : static_cast<double>(-(m0 - 1));
        auto g = [&](double t) { return f_term(ctx, c, sd * e * t); };
        const double V = (dir == 0) ? (c * ctx.x + e * Mt) / cy : (e * Mt - c * ctx.x) / cy;
        const int ell_eff = (dir == 0) ? ctx.ell : -ctx.ell;
        cx I = std::exp((1.0 - 2.0 * ctx.sigma) * std::log(cy)) / static_cast<double>(e) *
               tail_profile_int(ctx.sigma, ell_eff, V);
        const double h = 0.25;
        cx d1 = (8.0 * (g(Mt + h) - g(Mt - h)) - (g(Mt + 2 * h) - g(Mt - 2 * h))) / (12.0 * h);
        cx d3 = (g(Mt + 2 * h) - 2.0 * g(Mt + h) + 2.0 * g(Mt - h) - g(Mt - 2 * h)) / (2.0 * h * h * h);
        cx d5 = (g(Mt + 3 * h) - 4.0 * g(Mt + 2 * h) + 5.0 * g(Mt + h) - 5.0 * g(Mt - h) +
                 4.0 * g(Mt - 2 * h) - g(Mt - 3 * h)) /
                (2.0 * std::pow(h, 5));
        S += I + 0.5 * g(Mt) - B2 / 2.0 * d1 - B4 / 24.0 * d3 - B6 / 720.0 * d5;
    }
    return S;
}

cx coprime_dsum(const DsumContext& ctx, long c) {
    cx tot = 0.0;
    for (auto [e, mu] : squarefree_divisors(c)) tot += static_cast<double>(mu) * stride_sum(ctx, c, e);
    return tot;
}

cx eisenstein_direct_impl(const EisensteinParams& p, const GroupElement& g, bool parallel) {
    p.validate();
    if (p.nu.real() <= 0.5)
        throw domain_error("eisenstein_direct: requires Re nu > 1/2");
    IwasawaCoords co = iwasawa(g);
    DsumContext ctx{p.ell, p.nu + 0.5, co.x, co.y};
    const long C = p.c_max;

    cx dsum;
    if (parallel) {
        dsum = parallel_sum_terms<cx>(static_cast<std::size_t>(C),
                                      [&](std::size_t i) { return coprime_dsum(ctx, static_cast<long>(i) + 1); });
    } else {
        std::vector<cx> terms(C);
        for (long c = 1; c <= C; ++c) terms[c - 1] = coprime_dsum(ctx, c);
        dsum = pairwise_sum(terms);
    }
    // smooth main term of the c-blocks beyond C: J(nu,ell) y^{1/2-nu} sum phi(c) c^{-2nu-1}
    double sgn = (p.ell % 2) ? -1.0 : 1.0;
    cx J = sgn * PI * cgamma(2.0 * p.nu) * std::exp((1.0 - 2.0 * p.nu) * std::log(2.0)) /
           (cgamma(p.nu + static_cast<double>(std::abs(p.ell)) + 0.5) *
            cgamma(p.nu - static_cast<double>(std::abs(p.ell)) + 0.5));
    const long C2 = std::max<long>(200000, 100 * C);
    const auto& phi = totient_sieve(C2);
    cx mid = 0.0;
    for (long c = C + 1; c <= C2; ++c)
        mid += static_cast<double>(phi[c]) * std::exp((-2.0 * p.nu - 1.0) * std::log(static_cast<double>(c)));
    // Abel main term past C2: sum_{c > C2} phi(c) c^{-s} ~ (6/pi^2) C2^{2-s}/(s-2)
    cx s2 = 2.0 * p.nu + 1.0;
    cx far = 6.0 / (PI * PI) * std::exp((2.0 - s2) * std::log(static_cast<double>(C2))) / (s2 - 2.0);

    cx theta_ph = std::exp(cx(0.0, 2.0 * p.ell * co.theta));
    return theta_ph * (std::exp((p.nu + 0.5) * std::log(co.y)) * (1.0 + dsum) +
                       std::exp((0.5 - p.nu) * std::log(co.y)) * J * (mid + far));
}

}  // namespace

cx eisenstein_direct(const EisensteinParams& p, const GroupElement& g) {
    return eisenstein_direct_impl(p, g, true);
}

cx eisenstein_direct_serial(const EisensteinParams& p, const GroupElement& g) {
    return eisenstein_direct_impl(p, g, false);
}

double estar_functional_check(int ell, cx nu, const GroupElement& g) {
    auto estar = [&](cx v) -> cx {
        EisensteinParams p;
        p.ell = ell;
        p.nu = v;
        cx E = eisenstein_fourier(p, g).value;
        return std::exp(-(v + 0.5) * std::log(PI)) *
               cgamma(v + static_cast<double>(std::abs(ell)) + 0.5) *
               riemann_zeta(2.0 * v + 1.0) * E;
    };
    if (std::abs(nu) < 1e-14) return 0.0;  // fixed point of nu -> -nu
    cx a = estar(nu), b = estar(-nu);
    return std::abs(a - b) / std::max(std::abs(a), 1.0);
}

cx eisenstein_fourier_mode(const EisensteinParams& p, double y, long n, int grid) {
    // periodic integrand: uniform grid over one period, spectral accuracy
    std::vector<cx> terms;
    parallel_fill(terms, static_cast<std::size_t>(grid), [&](std::size_t k) {
        double x = static_cast<double>(k) / grid;
        cx E = eisenstein_direct_serial(p, from_iwasawa({x, y, 0.0}));
        return E * e_of(-static_cast<double>(n) * x);
    });
    return pairwise_sum(terms) / static_cast<double>(grid);
}

}  // namespace autforms
