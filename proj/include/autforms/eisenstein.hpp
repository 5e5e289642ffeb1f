#pragma once

#include "autforms/transforms.hpp"

namespace autforms {

struct EisensteinParams {
    int ell = 0;
    cx nu{0.75, 0.0};
    long n_max = 0;    // Fourier truncation; 0 = automatic from the decay of (15.5)
    long c_max = 300;  // direct-sum truncation

    void validate() const {
        if (n_max < 0 || c_max < 1) throw domain_error("EisensteinParams: bad truncations");
    }
};

// sigma_{2 nu}(n) = sum_{d | n} d^{2 nu}
cx sigma_divisor(cx two_nu, long n);

// scattering function phi_Gamma(nu) = sqrt(pi) Gamma(nu) zeta(2 nu) /
// (Gamma(nu+1/2) zeta(2 nu + 1)); evaluated from whichever of the two
// expressions of (18.3) is regular, with a Richardson limit near the
// removable points.
cx phi_scattering(cx nu);

struct EisensteinValue {
    cx value;
    long n_max_used = 0;
    double est_tail = 0.0;
};

// Fourier-expansion evaluation: constant terms plus the truncated n-sum.
EisensteinValue eisenstein_fourier(const EisensteinParams& p, const GroupElement& g);

// Absolutely convergent coset sum (Re nu > 1/2), accelerated:
// exact d-sums (window + Euler-Maclaurin tails) for c <= c_max, then the
// smooth main term of each c-block summed arithmetically far out.
// Oracle route; agrees with eisenstein_fourier on the overlap.
cx eisenstein_direct(const EisensteinParams& p, const GroupElement& g);

// Serial reference of the c-loop for the parallel kernel tests.
cx eisenstein_direct_serial(const EisensteinParams& p, const GroupElement& g);

// |E*(nu) - E*(-nu)| / max(|E*(nu)|, 1) with the completed series (18.4).
double estar_functional_check(int ell, cx nu, const GroupElement& g);

// n-th Fourier mode of z -> E(n[x]a[y], nu) in x over one period
// (256-point trapezoid; spectral accuracy for the entire integrand).
cx eisenstein_fourier_mode(const EisensteinParams& p, double y, long n, int grid = 256);

// constant term of the expansion: phi_ell(g,nu) + c2(nu,ell) phi_ell(g,-nu)
cx eisenstein_constant_term(int ell, cx nu, double y);
cx eisenstein_c2(int ell, cx nu);

}  // namespace autforms
