#pragma once

#include <string>
#include <vector>

#include "autforms/hyperbolic.hpp"
#include "autforms/specfun.hpp"

namespace autforms {

// A^delta phi_ell(g, nu): the Jacquet transform of the weight function,
// evaluated through the Whittaker closed form.
cx jacquet_phi(const SpectralParameter& p, const GroupElement& g);

// Direct quadrature of the oscillatory xi-integral; test oracle only.
cx jacquet_phi_integral_oracle(const SpectralParameter& p, const GroupElement& g,
                               const QuadratureSpec& q = {});

// Third route: the Schlaefli-type exponential-sum form.
cx jacquet_phi_schlafli_oracle(const SpectralParameter& p, const GroupElement& g);

// Kirillov vector K phi_ell(u, nu) = A^{sgn u} phi_ell(a[|u|], nu).
cx kirillov(const SpectralParameter& p, double u);

// Discrete-series normalized variant pi^{1/2-l} (Gamma(ell+l)/Gamma(ell-l+1))^{1/2} K phi_ell,
// supported on u > 0; nu is taken as l - 1/2.
cx kirillov_discrete(int ell, int l, double u);

// Mellin transform Gamma_ell(s, nu) of A^+ phi_ell(a[y], nu) in y.
cx gamma_ell(cx s, cx nu, int ell);

// Y_ell(s,nu), the auxiliary integral of the local functional equation.
cx y_ell(cx s, cx nu, int ell);

// Bessel function of representation j_nu(lambda); nu in the strip
// |Re nu| < 1/2 or at a discrete point l - 1/2 (within 1e-6, then the
// closed discrete branch is used).
struct BesselKernelParams {
    cx nu;
};
cx bessel_repr(const BesselKernelParams& params, double lambda);

// Sampled function on the punctured real line: log-spaced grids on
// +/- [u_min, u_max].
struct KirillovVector {
    std::vector<double> u_pos, u_neg;  // u_neg stores |u| for u < 0
    std::vector<cx> v_pos, v_neg;

    static KirillovVector make_grid(double u_min = 1e-3, double u_max = 1e3, int n_per_sign = 512);

    template <class F>
    void fill(F&& f) {
        for (std::size_t i = 0; i < u_pos.size(); ++i) v_pos[i] = f(u_pos[i]);
        for (std::size_t i = 0; i < u_neg.size(); ++i) v_neg[i] = f(-u_neg[i]);
    }

    // integral over R^x against d^x u (trapezoid in log u)
    cx integrate_dxu(const std::function<cx(double, cx)>& weight) const;
    double norm_dxu_over_pi() const;

    // CSV with columns u, re, im; one file per sign ("<path>.pos.csv" etc).
    void save_csv(const std::string& path_prefix) const;
};

// r_w f(u) = int j_nu(u lambda) f(lambda) d^x lambda on the grid of `out_grid`.
// Node density of the inner quadrature adapts to sqrt(|u| lambda_max).
// Deterministic: terms are filled (possibly in parallel) then pairwise-summed.
KirillovVector bessel_transform(const KirillovVector& f, const BesselKernelParams& params,
                                const KirillovVector& out_grid);

// Serial reference implementation, kept for testing the parallel kernel.
KirillovVector bessel_transform_serial(const KirillovVector& f, const BesselKernelParams& params,
                                       const KirillovVector& out_grid);

}  // namespace autforms
